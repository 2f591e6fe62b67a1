#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "builders.hpp"
#include "diffauction/errors.hpp"
#include "diffauction/graph.hpp"
#include "diffauction/simulation.hpp"
#include "oracles.hpp"

using namespace diffauction;

namespace {

ActionProfile chain_ab() { return ActionProfile{"s", {"A"}, {{"A", 30, {"B"}}, {"B", 70, {}}}}; }

ActionProfile diamond() {
  return ActionProfile{"s", {"a", "b"}, {{"a", 1, {"c"}}, {"b", 2, {"c"}}, {"c", 3, {}}}};
}

ActionProfile counterexample_net(bool c_forwards) {
  auto m = testing_support::market("s", {{"s", "A"}, {"A", "B"}, {"s", "C"}, {"C", "D"}, {"s", "E"}, {"E", "F"}});
  auto p = m.truthful_profile({});
  if (!c_forwards) {
    for (auto& a : p.agents) {
      if (a.id == "C") a.reported_neighbors.clear();
    }
  }
  return p;
}

std::string parent_id(const Pot& pot, const AgentId& id) { return pot.id(pot.parent(pot.node(id))); }

}  // namespace

TEST(DiffusionGraph, ChainKeepsBothAgentsAndReportedEdges) {
  const auto g = build_diffusion_graph(chain_ab());
  EXPECT_EQ(g.reachable(), (std::set<AgentId>{"A", "B"}));
  EXPECT_EQ(g.successors_of("s"), (std::set<AgentId>{"A"}));
  EXPECT_EQ(g.successors_of("A"), (std::set<AgentId>{"B"}));
  EXPECT_TRUE(g.successors_of("B").empty());
}

TEST(DiffusionGraph, UnreachableAgentsAreDropped) {
  ActionProfile p{"s", {"A"}, {{"A", 5, {}}, {"C", 9, {"D"}}, {"D", 1, {}}}};
  const auto g = build_diffusion_graph(p);
  EXPECT_EQ(g.reachable(), (std::set<AgentId>{"A"}));
  EXPECT_FALSE(g.contains("C"));
  EXPECT_FALSE(g.contains("D"));
  EXPECT_THROW(g.node("C"), LookupError);
}

TEST(DiffusionGraph, CounterexampleNetworkReachesAllSix) {
  EXPECT_EQ(build_diffusion_graph(counterexample_net(true)).reachable().size(), 6u);
}

TEST(DiffusionGraph, UnknownIdsSelfLoopsAndDuplicatesAreIgnored) {
  ActionProfile p{"s", {"A", "A", "ghost"}, {{"A", 5, {"A", "B", "B", "nobody", "s"}}, {"B", 1, {}}}};
  const auto g = build_diffusion_graph(p);
  EXPECT_EQ(g.reachable(), (std::set<AgentId>{"A", "B"}));
  EXPECT_EQ(g.successors_of("s"), (std::set<AgentId>{"A"}));
  EXPECT_EQ(g.successors_of("A"), (std::set<AgentId>{"B", "s"}));
  EXPECT_EQ(g.successors(g.node("A")).size(), 2u);
}

TEST(DiffusionGraph, NumberingIgnoresListingOrder) {
  auto p = counterexample_net(true);
  auto q = p;
  std::reverse(q.agents.begin(), q.agents.end());
  const auto g1 = build_diffusion_graph(p);
  const auto g2 = build_diffusion_graph(q);
  ASSERT_EQ(g1.node_count(), g2.node_count());
  for (std::size_t v = 0; v < g1.node_count(); ++v) EXPECT_EQ(g1.id(v), g2.id(v));
}

TEST(DiffusionGraph, SellerOnlyGraphIsEmpty) {
  const auto g = build_diffusion_graph(ActionProfile{"s", {}, {{"x", 3, {}}}});
  EXPECT_EQ(g.bidder_count(), 0u);
  const auto pot = build_pot(g);
  EXPECT_EQ(pot.bidder_count(), 0u);
  const auto sp = subtree_profile(pot);
  EXPECT_EQ(sp.n, 0u);
  EXPECT_EQ(sp.m, 0u);
}

TEST(ActionProfileValidation, RejectsMalformedProfiles) {
  EXPECT_THROW(build_diffusion_graph(ActionProfile{"s", {"A"}, {{"A", 1, {}}, {"A", 2, {}}}}), ValidationError);
  EXPECT_THROW(build_diffusion_graph(ActionProfile{"s", {"A"}, {{"A", -1, {}}}}), ValidationError);
  EXPECT_THROW(build_diffusion_graph(ActionProfile{"s", {"s"}, {{"s", 1, {}}}}), ValidationError);
  EXPECT_THROW(build_diffusion_graph(ActionProfile{"s", {"A"}, {{"A", std::nan(""), {}}}}), ValidationError);
  EXPECT_NO_THROW(ActionProfile({"s", {"A"}, {{"A", 0, {}}}}).validate());
}

TEST(Pot, StarHangsEveryoneOffTheSeller) {
  ActionProfile p{"s", {"a", "b"}, {{"a", 1, {}}, {"b", 2, {}}}};
  const auto pot = build_pot(build_diffusion_graph(p));
  EXPECT_EQ(parent_id(pot, "a"), "s");
  EXPECT_EQ(parent_id(pot, "b"), "s");
  EXPECT_EQ(pot.subtree_size(pot.node("a")), 1u);
  EXPECT_EQ(pot.subtree_size(pot.node("b")), 1u);
}

TEST(Pot, DiamondJoinHasSellerAsParent) {
  const auto pot = build_pot(build_diffusion_graph(diamond()));
  EXPECT_EQ(parent_id(pot, "c"), "s");
  const auto sp = subtree_profile(pot);
  EXPECT_EQ(sp.m, 3u);
  EXPECT_EQ(sp.sizes, (std::vector<std::size_t>{1, 1, 1}));
}

TEST(Pot, ClassicNetworkProfile) {
  const auto market = generate_scenario(Scenario::symmetry({3, 6}));
  const auto pot = build_pot(build_diffusion_graph(market.truthful_profile({})));
  const auto sp = subtree_profile(pot);
  EXPECT_EQ(sp.n, 9u);
  EXPECT_EQ(sp.m, 2u);
  EXPECT_EQ(sp.sizes, (std::vector<std::size_t>{3, 6}));
  EXPECT_EQ(sp.min_size(), 3u);
}

TEST(Pot, RootIsItsOwnParentAndPreorderIsConsistent) {
  const auto pot = build_pot(build_diffusion_graph(counterexample_net(true)));
  EXPECT_EQ(pot.parent(Pot::kRoot), Pot::kRoot);
  EXPECT_EQ(pot.order().front(), Pot::kRoot);
  for (std::size_t i = 0; i < pot.order().size(); ++i) EXPECT_EQ(pot.preorder_index(pot.order()[i]), i);
  EXPECT_EQ(pot.subtree_end(Pot::kRoot), pot.node_count());
  EXPECT_EQ(pot.depth(pot.node("B")), 2u);
}

TEST(Dcs, ChainStarAndDiamond) {
  EXPECT_EQ(dcs(build_pot(build_diffusion_graph(chain_ab())), "B"), (std::vector<AgentId>{"A", "B"}));
  ActionProfile star{"s", {"a", "b"}, {{"a", 1, {}}, {"b", 2, {}}}};
  EXPECT_EQ(dcs(build_pot(build_diffusion_graph(star)), "a"), (std::vector<AgentId>{"a"}));
  EXPECT_EQ(dcs(build_pot(build_diffusion_graph(diamond())), "c"), (std::vector<AgentId>{"c"}));
}

TEST(Dcs, UnknownIdIsALookupError) {
  const auto pot = build_pot(build_diffusion_graph(chain_ab()));
  EXPECT_THROW(dcs(pot, "Z"), LookupError);
  EXPECT_THROW(ddg(pot, "Z"), LookupError);
}

TEST(Ddg, ChainLeafAndLongBranch) {
  const auto pot = build_pot(build_diffusion_graph(chain_ab()));
  EXPECT_EQ(ddg(pot, "A"), (std::set<AgentId>{"A", "B"}));
  EXPECT_EQ(ddg(pot, "B"), (std::set<AgentId>{"B"}));

  const auto market = generate_scenario(Scenario::symmetry({3, 6}));
  const auto classic = build_pot(build_diffusion_graph(market.truthful_profile({})));
  std::size_t largest = 0;
  for (auto child : classic.children(Pot::kRoot)) largest = std::max(largest, ddg(classic, classic.id(child)).size());
  EXPECT_EQ(largest, 6u);
}

TEST(SubtreeProfile, CounterexampleFullAndWithheld) {
  const auto full = subtree_profile(build_pot(build_diffusion_graph(counterexample_net(true))));
  EXPECT_EQ(full, SubtreeProfile::from_sizes({2, 2, 2}));
  EXPECT_EQ(full.n, 6u);
  EXPECT_EQ(full.m, 3u);
  const auto withheld = subtree_profile(build_pot(build_diffusion_graph(counterexample_net(false))));
  EXPECT_EQ(withheld.n, 5u);
  EXPECT_EQ(withheld.m, 3u);
  auto sorted = withheld.sizes;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<std::size_t>{1, 2, 2}));
}

TEST(SubtreeProfile, SingleBidderAndFactoryErrors) {
  const auto sp = subtree_profile(build_pot(build_diffusion_graph(ActionProfile{"s", {"x"}, {{"x", 1, {}}}})));
  EXPECT_EQ(sp, SubtreeProfile::from_sizes({1}));
  EXPECT_THROW(SubtreeProfile::from_sizes({}), DomainError);
  EXPECT_THROW(SubtreeProfile::from_sizes({2, 0}), DomainError);
}

TEST(Pot, AgreesWithDeletionOracleOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = oracle::random_profile(rng, 2 + trial % 9, 0.25, 0.3);
    const auto pot = build_pot(build_diffusion_graph(p));
    for (const auto& [id, idom] : oracle::immediate_dominators(p)) {
      EXPECT_EQ(parent_id(pot, id), idom.empty() ? "s" : idom) << "trial " << trial << " node " << id;
    }
  }
}
