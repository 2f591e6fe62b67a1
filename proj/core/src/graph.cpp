#include "diffauction/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "diffauction/errors.hpp"

namespace diffauction {

void ActionProfile::validate() const {
  if (seller.empty()) throw ValidationError("seller id is empty");
  std::unordered_set<AgentId> seen;
  for (const auto& agent : agents) {
    if (agent.id.empty()) throw ValidationError("agent id is empty");
    if (agent.id == seller) throw ValidationError("agent '" + agent.id + "' has the seller's id");
    if (!seen.insert(agent.id).second) throw ValidationError("duplicate agent id '" + agent.id + "'");
    if (!std::isfinite(agent.bid) || agent.bid < 0.0) {
      throw ValidationError("agent '" + agent.id + "' has an invalid bid " + std::to_string(agent.bid));
    }
  }
}

const AgentAction* ActionProfile::find(const AgentId& id) const {
  auto it = std::find_if(agents.begin(), agents.end(), [&](const AgentAction& a) { return a.id == id; });
  return it == agents.end() ? nullptr : &*it;
}

std::optional<DiffusionGraph::Node> DiffusionGraph::find(const AgentId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DiffusionGraph::Node DiffusionGraph::node(const AgentId& id) const {
  auto v = find(id);
  if (!v) throw LookupError("agent '" + id + "' is not in the diffusion graph");
  return *v;
}

std::set<AgentId> DiffusionGraph::reachable() const {
  return {ids_.begin() + 1, ids_.end()};
}

std::set<AgentId> DiffusionGraph::successors_of(const AgentId& id) const {
  std::set<AgentId> out;
  for (Node w : successors(node(id))) out.insert(ids_[w]);
  return out;
}

DiffusionGraph build_diffusion_graph(const ActionProfile& profile) {
  profile.validate();

  std::unordered_map<AgentId, const AgentAction*> by_id;
  for (const auto& agent : profile.agents) by_id.emplace(agent.id, &agent);

  auto sorted_unique = [](std::vector<AgentId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  };
  auto reported = [&](const AgentId& id) -> std::vector<AgentId> {
    if (id == profile.seller) return sorted_unique(profile.seller_neighbors);
    return sorted_unique(by_id.at(id)->reported_neighbors);
  };

  DiffusionGraph g;
  g.ids_.push_back(profile.seller);
  g.index_.emplace(profile.seller, DiffusionGraph::kSeller);

  // BFS discovery fixes the node numbering.
  std::deque<AgentId> frontier{profile.seller};
  while (!frontier.empty()) {
    AgentId u = frontier.front();
    frontier.pop_front();
    for (const auto& w : reported(u)) {
      if (w == profile.seller || !by_id.count(w) || g.index_.count(w)) continue;
      g.index_.emplace(w, g.ids_.size());
      g.ids_.push_back(w);
      frontier.push_back(w);
    }
  }

  const std::size_t count = g.ids_.size();
  g.adjacency_.resize(count);
  g.bids_.assign(count, 0.0);
  for (std::size_t v = 0; v < count; ++v) {
    if (v != DiffusionGraph::kSeller) g.bids_[v] = by_id.at(g.ids_[v])->bid;
    for (const auto& w : reported(g.ids_[v])) {
      auto it = g.index_.find(w);
      if (it == g.index_.end() || it->second == v) continue;
      g.adjacency_[v].push_back(it->second);
    }
    // reported() is id-sorted and unique, so adjacency is too.
  }
  return g;
}

Pot::Node Pot::node(const AgentId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw LookupError("agent '" + id + "' is not in the POT");
  return it->second;
}

std::vector<Pot::Node> Pot::critical_sequence(Node v) const {
  std::vector<Node> path;
  for (Node cur = v; cur != kRoot; cur = parent_[cur]) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

Pot build_pot(const DiffusionGraph& graph) {
  using Node = Pot::Node;
  const std::size_t count = graph.node_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Postorder numbering by iterative DFS from the seller.
  std::vector<std::size_t> post(count, kUnset);
  std::vector<Node> by_post;
  by_post.reserve(count);
  {
    std::vector<char> visited(count, 0);
    std::vector<std::pair<Node, std::size_t>> stack{{DiffusionGraph::kSeller, 0}};
    visited[DiffusionGraph::kSeller] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto succ = graph.successors(v);
      if (next < succ.size()) {
        Node w = succ[next++];
        if (!visited[w]) {
          visited[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        post[v] = by_post.size();
        by_post.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<std::vector<Node>> preds(count);
  for (Node v = 0; v < count; ++v) {
    for (Node w : graph.successors(v)) preds[w].push_back(v);
  }

  // Cooper-Harvey-Kennedy iteration in reverse postorder.
  std::vector<Node> idom(count, kUnset);
  idom[DiffusionGraph::kSeller] = DiffusionGraph::kSeller;
  auto intersect = [&](Node a, Node b) {
    while (a != b) {
      while (post[a] < post[b]) a = idom[a];
      while (post[b] < post[a]) b = idom[b];
    }
    return a;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = by_post.rbegin(); it != by_post.rend(); ++it) {
      Node v = *it;
      if (v == DiffusionGraph::kSeller) continue;
      Node candidate = kUnset;
      for (Node p : preds[v]) {
        if (idom[p] == kUnset) continue;
        candidate = candidate == kUnset ? p : intersect(p, candidate);
      }
      if (candidate != idom[v]) {
        idom[v] = candidate;
        changed = true;
      }
    }
  }

  Pot pot;
  pot.ids_.reserve(count);
  for (Node v = 0; v < count; ++v) {
    pot.ids_.push_back(graph.id(v));
    pot.index_.emplace(graph.id(v), v);
  }
  pot.parent_ = idom;
  pot.children_.assign(count, {});
  for (Node v = 1; v < count; ++v) pot.children_[idom[v]].push_back(v);
  for (auto& kids : pot.children_) {
    std::sort(kids.begin(), kids.end(), [&](Node a, Node b) { return pot.ids_[a] < pot.ids_[b]; });
  }

  pot.size_.assign(count, 1);
  pot.depth_.assign(count, 0);
  pot.tin_.assign(count, 0);
  pot.order_.reserve(count);
  std::vector<Node> stack{Pot::kRoot};
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    pot.tin_[v] = pot.order_.size();
    pot.order_.push_back(v);
    const auto& kids = pot.children_[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      pot.depth_[*it] = pot.depth_[v] + 1;
      stack.push_back(*it);
    }
  }
  for (auto it = pot.order_.rbegin(); it != pot.order_.rend(); ++it) {
    if (*it != Pot::kRoot) pot.size_[pot.parent_[*it]] += pot.size_[*it];
  }
  return pot;
}

std::vector<AgentId> dcs(const Pot& pot, const AgentId& id) {
  auto v = pot.node(id);
  if (v == Pot::kRoot) throw LookupError("the seller has no critical sequence");
  std::vector<AgentId> out;
  for (auto u : pot.critical_sequence(v)) out.push_back(pot.id(u));
  return out;
}

std::set<AgentId> ddg(const Pot& pot, const AgentId& id) {
  auto v = pot.node(id);
  if (v == Pot::kRoot) throw LookupError("the seller has no downstream group");
  std::set<AgentId> out;
  auto order = pot.order();
  for (std::size_t i = pot.preorder_index(v); i < pot.subtree_end(v); ++i) out.insert(pot.id(order[i]));
  return out;
}

SubtreeProfile SubtreeProfile::from_sizes(std::vector<std::size_t> sizes) {
  if (sizes.empty()) throw DomainError("subtree profile needs at least one subtree");
  SubtreeProfile p;
  p.m = sizes.size();
  for (auto k : sizes) {
    if (k == 0) throw DomainError("subtree sizes must be >= 1");
    p.n += k;
  }
  p.sizes = std::move(sizes);
  return p;
}

std::size_t SubtreeProfile::min_size() const {
  if (sizes.empty()) throw DomainError("empty subtree profile");
  return *std::min_element(sizes.begin(), sizes.end());
}

void SubtreeProfile::validate() const {
  if (sizes.size() != m) throw ValidationError("subtree profile: m does not match the number of sizes");
  if (std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) != n) {
    throw ValidationError("subtree profile: sizes do not sum to n");
  }
  if (std::find(sizes.begin(), sizes.end(), std::size_t{0}) != sizes.end()) {
    throw ValidationError("subtree profile: empty subtree");
  }
}

SubtreeProfile subtree_profile(const Pot& pot) {
  SubtreeProfile p;
  for (auto child : pot.children(Pot::kRoot)) p.sizes.push_back(pot.subtree_size(child));
  p.m = p.sizes.size();
  p.n = pot.bidder_count();
  return p;
}

}  // namespace diffauction
