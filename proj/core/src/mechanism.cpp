#include "diffauction/mechanism.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "diffauction/errors.hpp"

namespace diffauction {

namespace {

void check_reserve(Money reserve, Money vbar) {
  if (!std::isfinite(reserve) || reserve < 0.0 || reserve > vbar) {
    throw DomainError("reserve " + std::to_string(reserve) + " outside [0, vbar]");
  }
}

}  // namespace

PreparedAuction::PreparedAuction(const ActionProfile& profile)
    : graph_(build_diffusion_graph(profile)), pot_(build_pot(graph_)) {
  std::vector<Node> by_id(graph_.node_count());
  std::iota(by_id.begin(), by_id.end(), Node{0});
  std::sort(by_id.begin(), by_id.end(), [&](Node a, Node b) { return graph_.id(a) < graph_.id(b); });
  id_rank_.resize(by_id.size());
  for (std::size_t r = 0; r < by_id.size(); ++r) id_rank_[by_id[r]] = r;
}

void PreparedAuction::run(std::span<const Money> node_bids, Money reserve, NodeOutcome& out) const {
  const std::size_t count = graph_.node_count();
  out.winner.reset();
  out.payments.assign(count, 0.0);
  out.revenue = 0.0;
  out.failed = true;
  if (node_bids.size() < count) throw ValidationError("bid vector shorter than the graph");
  if (count <= 1) return;

  // Highest bidder: bid descending, then id ascending.
  Node h = 1;
  for (Node v = 2; v < count; ++v) {
    if (node_bids[v] > node_bids[h] || (node_bids[v] == node_bids[h] && id_rank_[v] < id_rank_[h])) h = v;
  }
  if (node_bids[h] < reserve) return;
  out.failed = false;

  // v*_{-d_j} = max bid outside j's POT subtree: a prefix and a suffix of the preorder.
  auto order = pot_.order();
  std::vector<Money> prefix(count + 1, 0.0);
  std::vector<Money> suffix(count + 1, 0.0);
  for (std::size_t i = 1; i < count; ++i) prefix[i + 1] = std::max(prefix[i], node_bids[order[i]]);
  for (std::size_t i = count; i-- > 1;) suffix[i] = std::max(suffix[i + 1], node_bids[order[i]]);
  auto best_outside = [&](Node j) { return std::max(prefix[pot_.preorder_index(j)], suffix[pot_.subtree_end(j)]); };

  const auto path = pot_.critical_sequence(h);
  std::size_t w = path.size() - 1;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Money bid = node_bids[path[i]];
    if (bid >= reserve && bid == best_outside(path[i + 1])) {
      w = i;
      break;
    }
  }

  out.winner = path[w];
  out.payments[path[w]] = std::max(best_outside(path[w]), reserve);
  for (std::size_t i = 0; i < w; ++i) {
    out.payments[path[i]] = std::max(best_outside(path[i]), reserve) - std::max(best_outside(path[i + 1]), reserve);
  }
  out.revenue = std::max(best_outside(path.front()), reserve);
}

Outcome PreparedAuction::run(Money reserve) const {
  NodeOutcome raw;
  run(graph_.bids(), reserve, raw);
  return to_outcome(raw);
}

Outcome PreparedAuction::to_outcome(const NodeOutcome& raw) const {
  Outcome out;
  out.failed = raw.failed;
  out.revenue = raw.revenue;
  if (raw.winner) out.winner = graph_.id(*raw.winner);
  for (Node v = 1; v < graph_.node_count(); ++v) {
    out.payments[graph_.id(v)] = v < raw.payments.size() ? raw.payments[v] : 0.0;
  }
  return out;
}

Outcome run_apx_r(const ActionProfile& profile, Money reserve, Money vbar) {
  check_reserve(reserve, vbar);
  return PreparedAuction(profile).run(reserve);
}

Outcome run_idm(const ActionProfile& profile) { return run_apx_r(profile, 0.0); }

Outcome run_spa_reserve(const std::map<AgentId, Money>& bids, Money reserve, Money vbar) {
  check_reserve(reserve, vbar);
  Outcome out;
  out.failed = true;
  for (const auto& [id, _] : bids) out.payments[id] = 0.0;
  if (bids.empty()) return out;

  // std::map iterates in id order, so strict > keeps the smallest id among ties.
  const std::pair<const AgentId, Money>* top = nullptr;
  Money second = 0.0;
  for (const auto& entry : bids) {
    if (top == nullptr || entry.second > top->second) {
      if (top) second = std::max(second, top->second);
      top = &entry;
    } else {
      second = std::max(second, entry.second);
    }
  }
  if (top->second < reserve) return out;
  out.failed = false;
  out.winner = top->first;
  out.payments[top->first] = std::max(second, reserve);
  out.revenue = out.payments[top->first];
  return out;
}

std::map<AgentId, Money> utilities(const ActionProfile& profile, const std::map<AgentId, Money>& true_values,
                                   const Outcome& outcome) {
  std::set<AgentId> ids;
  for (const auto& a : profile.agents) ids.insert(a.id);
  if (true_values.size() != ids.size() ||
      !std::all_of(true_values.begin(), true_values.end(), [&](const auto& kv) { return ids.count(kv.first) > 0; })) {
    throw ValidationError("true values do not match the profile's agents");
  }
  for (const auto& [id, _] : outcome.payments) {
    if (!ids.count(id)) throw ValidationError("outcome pays unknown agent '" + id + "'");
  }
  if (outcome.winner && !ids.count(*outcome.winner)) {
    throw ValidationError("outcome winner '" + *outcome.winner + "' is not in the profile");
  }

  std::map<AgentId, Money> u;
  for (const auto& id : ids) {
    auto it = outcome.payments.find(id);
    const Money paid = it == outcome.payments.end() ? 0.0 : it->second;
    const Money value = outcome.winner == id ? true_values.at(id) : 0.0;
    u[id] = value - paid;
  }
  return u;
}

AgentRole agent_role(const Pot& pot, const Outcome& outcome, const AgentId& id) {
  if (!outcome.winner) return AgentRole::other;
  if (*outcome.winner == id) return AgentRole::winner;
  const auto w = pot.node(*outcome.winner);
  Pot::Node v = 0;
  try {
    v = pot.node(id);
  } catch (const LookupError&) {
    return AgentRole::other;
  }
  if (v == Pot::kRoot) return AgentRole::other;
  return pot.dominates(v, w) ? AgentRole::critical_predecessor : AgentRole::other;
}

}  // namespace diffauction
