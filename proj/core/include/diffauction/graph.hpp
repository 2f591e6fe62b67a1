#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace diffauction {

using AgentId = std::string;
using Money = double;

/// One bidder's reported type: a bid plus the neighbours it forwards the sale to.
struct AgentAction {
  AgentId id;
  Money bid = 0.0;
  std::vector<AgentId> reported_neighbors;
};

/// Everything the mechanism sees. The seller forwards to `seller_neighbors` and never bids.
struct ActionProfile {
  AgentId seller;
  std::vector<AgentId> seller_neighbors;
  std::vector<AgentAction> agents;

  /// Throws ValidationError on duplicate ids, a bidder named like the seller,
  /// or a negative / non-finite bid.
  void validate() const;

  const AgentAction* find(const AgentId& id) const;
};

/// Directed graph of reported forwarding edges, restricted to the seller and
/// the bidders it reaches. Node 0 is the seller; bidders are numbered in
/// breadth-first order (ties broken by id) so numbering does not depend on the
/// order agents are listed in the profile.
class DiffusionGraph {
 public:
  using Node = std::size_t;
  static constexpr Node kSeller = 0;

  const AgentId& seller() const { return ids_.front(); }
  std::size_t node_count() const { return ids_.size(); }
  std::size_t bidder_count() const { return ids_.size() - 1; }

  const AgentId& id(Node v) const { return ids_.at(v); }
  std::optional<Node> find(const AgentId& id) const;
  /// Throws LookupError for ids outside the reachable set.
  Node node(const AgentId& id) const;
  bool contains(const AgentId& id) const { return find(id).has_value(); }

  /// Successors sorted by id.
  std::span<const Node> successors(Node v) const { return adjacency_.at(v); }
  Money bid(Node v) const { return bids_.at(v); }
  std::span<const Money> bids() const { return bids_; }

  /// Reachable bidder ids (seller excluded), sorted.
  std::set<AgentId> reachable() const;
  /// Reported successors of `id` among reachable nodes, sorted.
  std::set<AgentId> successors_of(const AgentId& id) const;

 private:
  friend DiffusionGraph build_diffusion_graph(const ActionProfile& profile);

  std::vector<AgentId> ids_;
  std::vector<Money> bids_;
  std::vector<std::vector<Node>> adjacency_;
  std::unordered_map<AgentId, Node> index_;
};

/// Partial ordering tree: the dominator tree of the diffusion graph rooted at
/// the seller. Node numbering is shared with the graph it was built from.
class Pot {
 public:
  using Node = DiffusionGraph::Node;
  static constexpr Node kRoot = DiffusionGraph::kSeller;

  std::size_t node_count() const { return parent_.size(); }
  std::size_t bidder_count() const { return parent_.size() - 1; }

  /// Immediate dominator. The root is its own parent.
  Node parent(Node v) const { return parent_.at(v); }
  std::span<const Node> children(Node v) const { return children_.at(v); }
  std::size_t subtree_size(Node v) const { return size_.at(v); }
  /// Preorder from the root, children visited in id order.
  std::span<const Node> order() const { return order_; }
  /// Position of `v` in order(); the subtree of `v` occupies
  /// [preorder_index(v), subtree_end(v)).
  std::size_t preorder_index(Node v) const { return tin_.at(v); }
  std::size_t subtree_end(Node v) const { return tin_.at(v) + size_.at(v); }
  /// True when `a` lies on the tree path root..b (inclusive of b).
  bool dominates(Node a, Node b) const {
    return tin_.at(a) <= tin_.at(b) && tin_.at(b) < subtree_end(a);
  }
  std::size_t depth(Node v) const { return depth_.at(v); }

  const AgentId& id(Node v) const { return ids_.at(v); }
  Node node(const AgentId& id) const;

  /// Root-to-v path without the root, ending at v.
  std::vector<Node> critical_sequence(Node v) const;

 private:
  friend Pot build_pot(const DiffusionGraph& graph);

  std::vector<AgentId> ids_;
  std::unordered_map<AgentId, Node> index_;
  std::vector<Node> parent_;
  std::vector<std::vector<Node>> children_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> depth_;
  std::vector<Node> order_;
  std::vector<std::size_t> tin_;
};

/// Sizes of the subtrees hanging directly off the seller in the POT.
struct SubtreeProfile {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::size_t> sizes;

  /// Builds n and m from the sizes; throws DomainError if any size is 0 or the list is empty.
  static SubtreeProfile from_sizes(std::vector<std::size_t> sizes);
  std::size_t min_size() const;
  void validate() const;

  friend bool operator==(const SubtreeProfile&, const SubtreeProfile&) = default;
};

/// Keeps bidders reachable from the seller through reported edges. Unknown
/// neighbour ids, self-loops and duplicate edges are dropped.
DiffusionGraph build_diffusion_graph(const ActionProfile& profile);

/// Iterative data-flow dominator computation over the reachable graph.
Pot build_pot(const DiffusionGraph& graph);

/// Diffusion critical sequence of `id`: its dominators from the seller
/// outward (seller excluded), ending at `id`.
std::vector<AgentId> dcs(const Pot& pot, const AgentId& id);

/// Diffusion downstream group: the POT subtree rooted at `id`, including `id`.
std::set<AgentId> ddg(const Pot& pot, const AgentId& id);

SubtreeProfile subtree_profile(const Pot& pot);

}  // namespace diffauction
