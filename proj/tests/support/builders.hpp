#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "diffauction/network.hpp"

namespace testing_support {

/// Undirected market from an edge list; every bidder reports all neighbours.
inline diffauction::MarketTemplate market(const diffauction::AgentId& seller,
                                          std::initializer_list<std::pair<const char*, const char*>> edges) {
  diffauction::MarketTemplate m;
  m.seller = seller;
  for (auto [u, v] : edges) m.network.add_edge(u, v);
  return m;
}

inline diffauction::ActionProfile truthful(const diffauction::MarketTemplate& m,
                                           const std::map<diffauction::AgentId, diffauction::Money>& values) {
  return m.truthful_profile(values);
}

}  // namespace testing_support
