#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include "diffauction/errors.hpp"
#include "diffauction/network.hpp"

namespace diffauction {

std::size_t UndirectedNetwork::intern(const AgentId& id) {
  auto [it, inserted] = index_.emplace(id, ids_.size());
  if (inserted) {
    ids_.push_back(id);
    adjacency_.emplace_back();
  }
  return it->second;
}

std::size_t UndirectedNetwork::index_of(const AgentId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw LookupError("node '" + id + "' is not in the network");
  return it->second;
}

void UndirectedNetwork::add_node(const AgentId& id) { intern(id); }

bool UndirectedNetwork::add_edge(const AgentId& u, const AgentId& v) {
  const auto a = intern(u);
  const auto b = intern(v);
  if (a == b) return false;
  if (!adjacency_[a].insert(b).second) return false;
  adjacency_[b].insert(a);
  ++edges_;
  return true;
}

std::size_t UndirectedNetwork::degree(const AgentId& id) const { return adjacency_[index_of(id)].size(); }

std::vector<AgentId> UndirectedNetwork::neighbors(const AgentId& id) const {
  std::vector<AgentId> out;
  for (auto w : adjacency_[index_of(id)]) out.push_back(ids_[w]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AgentId> UndirectedNetwork::nodes() const {
  std::vector<AgentId> out = ids_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AgentId> UndirectedNetwork::component(const AgentId& start) const {
  std::vector<char> seen(ids_.size(), 0);
  std::deque<std::size_t> frontier{index_of(start)};
  seen[frontier.front()] = 1;
  std::vector<AgentId> out;
  while (!frontier.empty()) {
    auto u = frontier.front();
    frontier.pop_front();
    out.push_back(ids_[u]);
    for (auto w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        frontier.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

UndirectedNetwork parse_edge_list(std::istream& in) {
  UndirectedNetwork net;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#' || line[first] == '%') continue;
    std::istringstream fields(line);
    std::string u, v;
    if (!(fields >> u >> v)) throw FormatError("expected two node ids, got '" + line + "'", line_no);
    net.add_edge(u, v);
  }
  if (in.bad()) throw FormatError("read error", line_no);
  return net;
}

UndirectedNetwork load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open edge list '" + path.string() + "'");
  try {
    return parse_edge_list(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

AgentId pick_seller(const UndirectedNetwork& network, std::size_t rho, std::uint64_t seed) {
  std::vector<AgentId> candidates;
  for (const auto& id : network.nodes()) {
    if (network.degree(id) == rho) candidates.push_back(id);
  }
  if (candidates.empty()) throw NotFoundError("no node has degree " + std::to_string(rho));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  return candidates[pick(rng)];
}

std::vector<AgentId> MarketTemplate::bidders() const {
  auto all = network.component(seller);
  all.erase(std::remove(all.begin(), all.end(), seller), all.end());
  return all;
}

ActionProfile MarketTemplate::truthful_profile(const std::map<AgentId, Money>& values) const {
  ActionProfile profile;
  profile.seller = seller;
  profile.seller_neighbors = network.neighbors(seller);
  for (const auto& id : bidders()) {
    auto it = values.find(id);
    profile.agents.push_back({id, it == values.end() ? 0.0 : it->second, network.neighbors(id)});
  }
  return profile;
}

}  // namespace diffauction
