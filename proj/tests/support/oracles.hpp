#pragma once

// Test-only reference implementations. Each one is written from the
// definitions, deliberately slow, and shares no code with the library.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "diffauction/graph.hpp"
#include "diffauction/network.hpp"

namespace oracle {

using diffauction::ActionProfile;
using diffauction::AgentId;
using diffauction::Money;

/// Bidders reachable from the seller over reported edges, optionally with one node deleted.
std::set<AgentId> reachable(const ActionProfile& p, const std::optional<AgentId>& deleted = std::nullopt);

/// For each reachable bidder i: the bidders j != i whose deletion cuts i off from the seller.
std::map<AgentId, std::set<AgentId>> strict_dominators(const ActionProfile& p);

/// Immediate dominator by deletion ("" means the seller).
std::map<AgentId, AgentId> immediate_dominators(const ActionProfile& p);

/// Seller-outward dominator chain of i, ending at i.
std::vector<AgentId> critical_sequence(const ActionProfile& p, const AgentId& i);

struct SlowOutcome {
  std::optional<AgentId> winner;
  std::map<AgentId, Money> payments;
  Money revenue = 0.0;
  bool failed = true;
};

/// Mechanism straight from its description, using set arithmetic over the deletion dominators.
SlowOutcome apx_r(const ActionProfile& p, Money reserve);

/// Largest sum k/(n-k+1) over all partitions of n into m parts each >= kmin, and one maximiser.
struct PartitionBest {
  double objective = -1.0;
  std::vector<std::size_t> parts;  // nondecreasing
  std::size_t partitions_seen = 0;
};
PartitionBest best_partition(std::size_t n, std::size_t m, std::size_t kmin);

/// Dense scan for the first sign change of fn on [lo, hi], refined by linear interpolation.
std::optional<double> grid_scan_root(const std::function<double(double)>& fn, double lo, double hi,
                                     std::size_t points);

/// Composite trapezoid on a uniform grid.
double trapezoid(const std::function<double(double)>& fn, double lo, double hi, std::size_t panels);

/// Random reported-edge profile: `bidders` agents b0..b{n-1}, each directed edge present with prob `p_edge`,
/// seller edges with prob `p_seller`. Bids uniform on [0, vbar).
ActionProfile random_profile(std::mt19937_64& rng, std::size_t bidders, double p_edge, double p_seller,
                             Money vbar = 100.0);

/// Random undirected market on seller "s" and bidders b0..b{n-1}; each pair linked with prob `p_edge`,
/// each bidder linked to the seller with prob `p_seller`, and b0 always linked to the seller.
diffauction::MarketTemplate random_market(std::mt19937_64& rng, std::size_t bidders, double p_edge, double p_seller);

/// Random subtree sizes with m parts, each in [kmin, kmax].
std::vector<std::size_t> random_sizes(std::mt19937_64& rng, std::size_t m, std::size_t kmin, std::size_t kmax);

}  // namespace oracle
