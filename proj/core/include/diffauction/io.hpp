#pragma once

#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "diffauction/graph.hpp"
#include "diffauction/incentive.hpp"
#include "diffauction/mechanism.hpp"
#include "diffauction/simulation.hpp"

namespace diffauction {

// {"seller": "s", "seller_neighbors": [...], "agents": [{"id", "bid", "neighbors"}]}
// seller_neighbors is optional on input.
void to_json(nlohmann::json& j, const ActionProfile& p);
void from_json(const nlohmann::json& j, ActionProfile& p);

// {"winner": id|null, "payments": {id: number}, "revenue": number, "failed": bool}
void to_json(nlohmann::json& j, const Outcome& o);
void from_json(const nlohmann::json& j, Outcome& o);

void to_json(nlohmann::json& j, const SubtreeProfile& p);
void to_json(nlohmann::json& j, const RevenueStats& s);
void from_json(const nlohmann::json& j, RevenueStats& s);
void to_json(nlohmann::json& j, const DeviationReport& r);
void to_json(nlohmann::json& j, const CounterexampleReport& r);

/// Throws FormatError / ValidationError on bad files.
ActionProfile read_profile_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace diffauction
