#include "diffauction/io.hpp"

#include <algorithm>
#include <fstream>

#include "diffauction/errors.hpp"

namespace diffauction {

using nlohmann::json;

void to_json(json& j, const ActionProfile& p) {
  j = json{{"seller", p.seller}, {"seller_neighbors", p.seller_neighbors}, {"agents", json::array()}};
  for (const auto& a : p.agents) {
    j["agents"].push_back({{"id", a.id}, {"bid", a.bid}, {"neighbors", a.reported_neighbors}});
  }
}

void from_json(const json& j, ActionProfile& p) {
  p = ActionProfile{};
  j.at("seller").get_to(p.seller);
  for (const auto& a : j.at("agents")) {
    AgentAction action;
    a.at("id").get_to(action.id);
    a.at("bid").get_to(action.bid);
    if (a.contains("neighbors")) a.at("neighbors").get_to(action.reported_neighbors);
    p.agents.push_back(std::move(action));
  }
  if (j.contains("seller_neighbors")) {
    j.at("seller_neighbors").get_to(p.seller_neighbors);
  } else {
    // Plain schema: the seller is linked to every agent that lists it.
    for (const auto& a : p.agents) {
      const auto& nb = a.reported_neighbors;
      if (std::find(nb.begin(), nb.end(), p.seller) != nb.end()) p.seller_neighbors.push_back(a.id);
    }
  }
}

void to_json(json& j, const Outcome& o) {
  j = json{{"winner", nullptr}, {"payments", o.payments}, {"revenue", o.revenue}, {"failed", o.failed}};
  if (o.winner) j["winner"] = *o.winner;
}

void from_json(const json& j, Outcome& o) {
  o = Outcome{};
  if (!j.at("winner").is_null()) o.winner = j.at("winner").get<AgentId>();
  j.at("payments").get_to(o.payments);
  j.at("revenue").get_to(o.revenue);
  j.at("failed").get_to(o.failed);
}

void to_json(json& j, const SubtreeProfile& p) { j = json{{"n", p.n}, {"m", p.m}, {"sizes", p.sizes}}; }

void to_json(json& j, const RevenueStats& s) {
  j = json{{"runs", s.runs},
           {"mean", s.mean},
           {"std_error", s.std_error},
           {"failure_rate", s.failure_rate},
           {"reserve", s.reserve},
           {"vbar", s.vbar},
           {"histogram", {{"zero", s.zero_count}, {"bin_width", s.vbar / RevenueStats::kBins}, {"bins", s.histogram}}}};
}

void from_json(const json& j, RevenueStats& s) {
  s = RevenueStats{};
  j.at("runs").get_to(s.runs);
  j.at("mean").get_to(s.mean);
  j.at("std_error").get_to(s.std_error);
  j.at("failure_rate").get_to(s.failure_rate);
  j.at("reserve").get_to(s.reserve);
  j.at("vbar").get_to(s.vbar);
  j.at("histogram").at("zero").get_to(s.zero_count);
  j.at("histogram").at("bins").get_to(s.histogram);
}

void to_json(json& j, const DeviationReport& r) {
  j = json{{"agent", r.agent},
           {"best_gain", r.best_gain},
           {"best_deviation", {{"bid", r.best_deviation.bid}, {"neighbors", r.best_deviation.neighbors}}},
           {"truthful_utility", r.truthful_utility},
           {"deviations_checked", r.deviations_checked},
           {"opponent_profiles", r.opponent_profiles}};
}

void to_json(json& j, const CounterexampleReport& r) {
  j = json{{"deviator", r.deviator},
           {"deviator_value", r.deviator_value},
           {"full_profile", r.full_profile},
           {"withheld_profile", r.withheld_profile},
           {"ropt_full", r.ropt_full},
           {"ropt_withheld", r.ropt_withheld},
           {"utility_truthful", r.utility_truthful},
           {"utility_withheld", r.utility_withheld},
           {"utility_delta", r.utility_delta}};
}

ActionProfile read_profile_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open profile '" + path.string() + "'");
  ActionProfile profile;
  try {
    profile = json::parse(in).get<ActionProfile>();
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  profile.validate();
  return profile;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

}  // namespace diffauction
