#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "diffauction/distributions.hpp"
#include "diffauction/graph.hpp"
#include "diffauction/network.hpp"
#include "diffauction/reserve.hpp"

namespace diffauction {

/// Private type: true value and the neighbours the agent could forward to.
struct TrueType {
  Money value = 0.0;
  std::vector<AgentId> neighbors;
};

/// Ground truth for an incentive check.
struct TypeProfile {
  AgentId seller;
  std::vector<AgentId> seller_neighbors;
  std::map<AgentId, TrueType> types;

  /// Reads bids as true values and reported neighbours as true neighbour sets.
  static TypeProfile from_truthful_profile(const ActionProfile& profile);
  static TypeProfile from_market(const MarketTemplate& market, const std::map<AgentId, Money>& values);

  ActionProfile truthful() const;
};

struct Deviation {
  Money bid = 0.0;
  std::vector<AgentId> neighbors;

  friend bool operator==(const Deviation&, const Deviation&) = default;
};

/// Evenly spaced bids on [0, vbar] (`points` >= 2 includes both ends) plus
/// instance-specific critical bids.
struct BidGrid {
  std::size_t points = 11;
  Money vbar = 1.0;
  std::vector<Money> critical;
};

inline constexpr std::size_t kMaxDeviationNeighbors = 12;

/// Every (bid, neighbour subset) pair, bids deduplicated and clipped to
/// [0, vbar]. The truthful action is always included. DomainError when the
/// agent has more than kMaxDeviationNeighbors neighbours.
std::vector<Deviation> enumerate_deviations(const TrueType& type, const BidGrid& grid);

struct DeviationReport {
  AgentId agent;
  Money best_gain = 0.0;
  Deviation best_deviation;
  Money truthful_utility = 0.0;
  std::size_t deviations_checked = 0;
  std::size_t opponent_profiles = 0;
};

struct DsicOptions {
  std::size_t grid_points = 11;
  /// Extra opponent profiles (random bids, random forwarding subsets) beyond
  /// truthful opponents. Sampling only approximates the dominant-strategy
  /// quantifier.
  std::size_t sampled_opponent_profiles = 0;
  std::uint64_t seed = 0x5eed;
};

/// Utility of `agent` with true value `value` when `profile` is played and the
/// reserve comes from `policy`.
Money realized_utility(const ActionProfile& profile, const AgentId& agent, Money value, const ReservePolicy& policy,
                       const ValueDistribution& d);

/// Best unilateral gain for every agent, holding the others fixed.
std::vector<DeviationReport> check_dsic(const TypeProfile& instance, const ReservePolicy& policy,
                                        const ValueDistribution& d, const DsicOptions& options = {});

struct CounterexampleReport {
  ActionProfile truthful;
  ActionProfile withheld;  // agent C forwards to nobody
  SubtreeProfile full_profile;
  SubtreeProfile withheld_profile;
  Money ropt_full = 0.0;
  Money ropt_withheld = 0.0;
  AgentId deviator = "C";
  Money deviator_value = 0.0;
  Money utility_truthful = 0.0;
  Money utility_withheld = 0.0;
  Money utility_delta = 0.0;
};

/// Six buyers on three two-node chains (s-A-B, s-C-D, s-E-F), values on
/// U[0,1]. Under the profile-optimal reserve, C gains by not forwarding to D.
/// `c_value` must be C's value; the other values are fixed below 0.56.
CounterexampleReport ropt_counterexample(Money c_value = 0.8);

}  // namespace diffauction
