#include <gtest/gtest.h>

#include <random>

#include "diffauction/incentive.hpp"
#include "diffauction/mechanism.hpp"
#include "diffauction/reserve.hpp"
#include "oracles.hpp"

using namespace diffauction;

namespace {

const auto kUniform = ValueDistribution::uniform(100.0);

std::map<AgentId, Money> draw_values(std::mt19937_64& rng, const MarketTemplate& m) {
  std::uniform_real_distribution<double> value(0.0, 100.0);
  std::map<AgentId, Money> out;
  for (const auto& id : m.bidders()) out[id] = value(rng);
  return out;
}

MarketTemplate draw_market(std::mt19937_64& rng) {
  return oracle::random_market(rng, 2 + rng() % 5, 0.35, 0.4);
}

void set_action(ActionProfile& p, const AgentId& id, Money bid, std::vector<AgentId> neighbors) {
  for (auto& a : p.agents) {
    if (a.id == id) {
      a.bid = bid;
      a.reported_neighbors = std::move(neighbors);
    }
  }
}

}  // namespace

TEST(IncentiveProperty, ProfileIndependentPoliciesAreTruthful) {
  std::mt19937_64 rng(501);
  const std::vector<ReservePolicy> policies{ReservePolicy::none(), ReservePolicy::fixed(40.0),
                                            ReservePolicy::uniform_gamma(2), ReservePolicy::general_gamma(1)};
  for (int trial = 0; trial < 12; ++trial) {
    const auto market = draw_market(rng);
    const auto types = TypeProfile::from_market(market, draw_values(rng, market));
    for (const auto& policy : policies) {
      for (const auto& report : check_dsic(types, policy, kUniform, {6, 1, 77})) {
        EXPECT_LE(report.best_gain, 1e-9) << policy.to_string() << " trial " << trial << " agent " << report.agent;
      }
    }
  }
}

TEST(IncentiveProperty, TruthfulUtilityIsNonnegativeForEveryPolicy) {
  std::mt19937_64 rng(502);
  const std::vector<ReservePolicy> policies{ReservePolicy::none(), ReservePolicy::fixed(70.0),
                                            ReservePolicy::uniform_gamma(3), ReservePolicy::global_opt()};
  for (int trial = 0; trial < 60; ++trial) {
    const auto market = draw_market(rng);
    const auto values = draw_values(rng, market);
    const auto profile = market.truthful_profile(values);
    for (const auto& policy : policies) {
      for (const auto& [id, v] : values) {
        EXPECT_GE(realized_utility(profile, id, v, policy, kUniform), -1e-9) << policy.to_string() << " " << id;
      }
    }
  }
}

TEST(IncentiveProperty, FullPropagationWeaklyDominatesWithholding) {
  std::mt19937_64 rng(503);
  std::uniform_real_distribution<double> bid(0.0, 100.0);
  const auto policy = ReservePolicy::uniform_gamma(1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto market = draw_market(rng);
    const auto values = draw_values(rng, market);
    const auto types = TypeProfile::from_market(market, values);
    for (const auto& [id, type] : types.types) {
      for (Money b : {type.value, bid(rng)}) {
        auto profile = types.truthful();
        set_action(profile, id, b, type.neighbors);
        const Money full = realized_utility(profile, id, type.value, policy, kUniform);
        for (const auto& dev : enumerate_deviations(type, BidGrid{1, 100.0, {}})) {
          set_action(profile, id, b, dev.neighbors);
          EXPECT_LE(realized_utility(profile, id, type.value, policy, kUniform), full + 1e-9)
              << "trial " << trial << " agent " << id << " bid " << b;
        }
      }
    }
  }
}

TEST(IncentiveProperty, DeviationOutcomesFallIntoThreeCases) {
  std::mt19937_64 rng(504);
  std::size_t seen[3] = {0, 0, 0};
  for (int trial = 0; trial < 40; ++trial) {
    const auto market = draw_market(rng);
    const auto types = TypeProfile::from_market(market, draw_values(rng, market));
    const Money r = gamma_uniform(1, 100.0);
    for (const auto& [id, type] : types.types) {
      for (const auto& dev : enumerate_deviations(type, BidGrid{5, 100.0, {}})) {
        auto profile = types.truthful();
        set_action(profile, id, dev.bid, dev.neighbors);
        const PreparedAuction auction(profile);
        const auto out = auction.run(r);
        const auto role = agent_role(auction.pot(), out, id);
        auto it = out.payments.find(id);
        const Money paid = it == out.payments.end() ? 0.0 : it->second;
        switch (role) {
          case AgentRole::winner:
            ++seen[0];
            EXPECT_LE(paid, dev.bid + 1e-9);
            break;
          case AgentRole::critical_predecessor:
            ++seen[1];
            EXPECT_LE(paid, 1e-9);
            break;
          case AgentRole::other:
            ++seen[2];
            EXPECT_EQ(paid, 0.0);
            break;
        }
      }
    }
  }
  for (auto count : seen) EXPECT_GT(count, 0u);
}
