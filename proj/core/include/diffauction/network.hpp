#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "diffauction/graph.hpp"

namespace diffauction {

/// Underlying social network: undirected, no self-loops, no parallel edges.
class UndirectedNetwork {
 public:
  /// Returns false when the edge was a self-loop or already present.
  bool add_edge(const AgentId& u, const AgentId& v);
  void add_node(const AgentId& id);

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_; }
  bool contains(const AgentId& id) const { return index_.count(id) != 0; }
  std::size_t degree(const AgentId& id) const;
  /// Sorted neighbour ids.
  std::vector<AgentId> neighbors(const AgentId& id) const;
  /// All node ids, sorted.
  std::vector<AgentId> nodes() const;
  /// Nodes reachable from `start` (including it), sorted.
  std::vector<AgentId> component(const AgentId& start) const;

 private:
  std::size_t intern(const AgentId& id);
  std::size_t index_of(const AgentId& id) const;

  std::vector<AgentId> ids_;
  std::unordered_map<AgentId, std::size_t> index_;
  std::vector<std::set<std::size_t>> adjacency_;
  std::size_t edges_ = 0;
};

/// Edge-list text: one `u v` pair per line, extra columns ignored, lines
/// starting with `#` or `%` and blank lines skipped (SNAP / KONECT).
UndirectedNetwork parse_edge_list(std::istream& in);
UndirectedNetwork load_edge_list(const std::filesystem::path& path);

/// Uniformly random node of degree exactly rho; NotFoundError if none.
AgentId pick_seller(const UndirectedNetwork& network, std::size_t rho, std::uint64_t seed);

/// A network plus its seller. Truthful play means every bidder in the
/// seller's component bids its value and forwards to all neighbours.
struct MarketTemplate {
  UndirectedNetwork network;
  AgentId seller;

  /// Bidders in the seller's component, sorted.
  std::vector<AgentId> bidders() const;
  /// Missing values default to 0.
  ActionProfile truthful_profile(const std::map<AgentId, Money>& values) const;
  /// Direct neighbours of the seller in the underlying network.
  std::size_t rho() const { return network.degree(seller); }
};

}  // namespace diffauction
