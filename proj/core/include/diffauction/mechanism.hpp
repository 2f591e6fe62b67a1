#pragma once

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "diffauction/graph.hpp"

namespace diffauction {

struct Outcome {
  std::optional<AgentId> winner;
  /// Every reachable bidder appears; negative entries are rewards.
  std::map<AgentId, Money> payments;
  Money revenue = 0.0;
  bool failed = false;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Index-based outcome for hot loops; `payments` is indexed by graph node.
struct NodeOutcome {
  std::optional<DiffusionGraph::Node> winner;
  std::vector<Money> payments;
  Money revenue = 0.0;
  bool failed = false;
};

enum class AgentRole { winner, critical_predecessor, other };

/// Diffusion graph + POT for one reported topology, reusable across bid
/// vectors. Monte Carlo replicates share one instance.
class PreparedAuction {
 public:
  using Node = DiffusionGraph::Node;

  explicit PreparedAuction(const ActionProfile& profile);

  const DiffusionGraph& graph() const { return graph_; }
  const Pot& pot() const { return pot_; }

  /// Runs APX-R with the bids stored in the graph.
  Outcome run(Money reserve) const;
  /// Runs APX-R with `node_bids[v]` as node v's bid (entry 0, the seller, is ignored).
  void run(std::span<const Money> node_bids, Money reserve, NodeOutcome& out) const;

  Outcome to_outcome(const NodeOutcome& out) const;

 private:
  DiffusionGraph graph_;
  Pot pot_;
  std::vector<std::size_t> id_rank_;  // tie-break order by agent id
};

/// APX-R: the winner is the first node on the highest bidder's critical
/// sequence that clears the reserve and tops everyone outside its successor's
/// downstream group; critical predecessors are paid telescoping rewards.
/// Throws DomainError unless 0 <= reserve <= vbar.
Outcome run_apx_r(const ActionProfile& profile, Money reserve,
                  Money vbar = std::numeric_limits<Money>::infinity());

/// APX-R with no reserve.
Outcome run_idm(const ActionProfile& profile);

/// Second-price auction with reserve among a direct set of bidders.
Outcome run_spa_reserve(const std::map<AgentId, Money>& bids, Money reserve,
                        Money vbar = std::numeric_limits<Money>::infinity());

/// Quasi-linear utilities: winner gets value - payment, everyone else -payment.
/// `true_values` must cover exactly the profile's agents.
std::map<AgentId, Money> utilities(const ActionProfile& profile, const std::map<AgentId, Money>& true_values,
                                   const Outcome& outcome);

AgentRole agent_role(const Pot& pot, const Outcome& outcome, const AgentId& id);

}  // namespace diffauction
