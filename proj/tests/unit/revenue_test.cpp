#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "diffauction/errors.hpp"
#include "diffauction/mechanism.hpp"
#include "diffauction/reserve.hpp"
#include "diffauction/revenue.hpp"
#include "oracles.hpp"

using namespace diffauction;

namespace {

const ValueDistribution kUniform = ValueDistribution::uniform(100.0);
const ValueDistribution kNormal = ValueDistribution::truncated_normal(50.0, 16.67, 100.0);
const ValueDistribution kExp = ValueDistribution::truncated_exponential(0.08, 100.0);

// Uniform total revenue written out once more from the aggregated closed form.
double uniform_total_ref(const std::vector<std::size_t>& sizes, double vbar, double r) {
  double n = 0;
  for (auto k : sizes) n += static_cast<double>(k);
  const double m = static_cast<double>(sizes.size());
  const double t = r / vbar;
  double sum = 0.0;
  for (auto k : sizes) sum += (1.0 - std::pow(t, n - static_cast<double>(k) + 1.0)) / (n - static_cast<double>(k) + 1.0);
  return vbar * (n + m) / (n + 1.0) * (1.0 - std::pow(t, n + 1.0)) - vbar * sum;
}

}  // namespace

TEST(SubtreeRevenue, SingleBidderWithReserveIsPostedPrice) {
  // One bidder, one subtree: revenue r(1 - F(r)) = 25 at r = 50 on U[0,100].
  EXPECT_NEAR(expected_subtree_revenue(1, 1, kUniform, 50.0), 25.0, 1e-12);
  EXPECT_NEAR(expected_subtree_revenue(1, 1, kUniform, 50.0, RevenueMethod::quadrature), 25.0, 1e-9);

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> value(0.0, 100.0);
  const int draws = 2000000;
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) sum += run_spa_reserve({{"x", value(rng)}}, 50.0).revenue;
  EXPECT_NEAR(sum / draws, 25.0, 0.1);
}

TEST(SubtreeRevenue, ClosedFormEqualsQuadratureOnSmallGrid) {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      for (double r : {0.0, 17.0, 50.0, 83.0}) {
        EXPECT_NEAR(expected_subtree_revenue(k, n, kUniform, r, RevenueMethod::closed_form),
                    expected_subtree_revenue(k, n, kUniform, r, RevenueMethod::quadrature), 1e-6)
            << n << ' ' << k << ' ' << r;
      }
    }
  }
}

TEST(SubtreeRevenue, VanishesAtVbar) {
  for (const auto& d : {kUniform, kNormal, kExp}) EXPECT_NEAR(expected_subtree_revenue(2, 5, d, 100.0), 0.0, 1e-9);
}

TEST(SubtreeRevenue, ArgumentChecks) {
  EXPECT_THROW(expected_subtree_revenue(0, 3, kUniform, 0.0), DomainError);
  EXPECT_THROW(expected_subtree_revenue(4, 3, kUniform, 0.0), DomainError);
  EXPECT_THROW(expected_subtree_revenue(1, 3, kUniform, 101.0), DomainError);
  EXPECT_THROW(expected_subtree_revenue(1, 3, kUniform, -1.0), DomainError);
  EXPECT_THROW(expected_subtree_revenue(1, 3, kNormal, 0.0, RevenueMethod::closed_form), DomainError);
}

TEST(TotalRevenue, ClassicAndSymmetricProfiles) {
  const auto classic = SubtreeProfile::from_sizes({3, 6});
  EXPECT_NEAR(expected_total_revenue(classic, kUniform, 0.0), 70.7143, 1e-4);
  EXPECT_NEAR(expected_total_revenue(SubtreeProfile::from_sizes({3, 3}), kUniform, 50.0), 66.5179, 1e-4);
  EXPECT_NEAR(expected_total_revenue(classic, kUniform, gamma_uniform(3, 100.0)), 74.132, 1e-3);
}

TEST(TotalRevenue, MatchesAggregatedClosedForm) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> reserve(0.0, 100.0);
  for (int t = 0; t < 50; ++t) {
    const auto sizes = oracle::random_sizes(rng, 1 + t % 5, 1, 7);
    const double r = reserve(rng);
    EXPECT_NEAR(expected_total_revenue(SubtreeProfile::from_sizes(sizes), kUniform, r),
                uniform_total_ref(sizes, 100.0, r), 1e-9);
  }
}

TEST(TotalRevenue, EmptyProfileRefused) {
  EXPECT_THROW(expected_total_revenue(SubtreeProfile{}, kUniform, 0.0), DomainError);
}

TEST(OptBound, UniformValues) {
  EXPECT_NEAR(opt_upper_bound(9, kUniform), 80.01953125, 1e-10);
  EXPECT_NEAR(opt_upper_bound(1, kUniform), 25.0, 1e-12);
  EXPECT_NEAR(opt_upper_bound(9, kUniform, RevenueMethod::quadrature), 80.01953125, 1e-7);
  EXPECT_THROW(opt_upper_bound(0, kUniform), DomainError);
}

TEST(OptBound, NondecreasingInBidders) {
  for (const auto& d : {kUniform, kNormal, kExp}) {
    for (std::size_t n = 1; n < 30; ++n) EXPECT_LE(opt_upper_bound(n, d), opt_upper_bound(n + 1, d) + 1e-12);
  }
}

TEST(OptBound, EqualsBestReserveSecondPriceRevenue) {
  // Myerson revenue equals the SPA with reserve r_hat; check by Monte Carlo for n = 3 on the exponential.
  const double r_hat = subtree_optimal_reserve(1, kExp);
  RngStream rng(77);
  const int draws = 400000;
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) {
    sum += run_spa_reserve({{"a", kExp.sample(rng)}, {"b", kExp.sample(rng)}, {"c", kExp.sample(rng)}}, r_hat).revenue;
  }
  EXPECT_NEAR(sum / draws, opt_upper_bound(3, kExp), 0.06);
}

TEST(MysBound, Values) {
  EXPECT_NEAR(mys_lower_bound(2, kUniform), 41.66667, 1e-5);
  EXPECT_NEAR(mys_lower_bound(1, kUniform), 25.0, 1e-12);
  for (const auto& d : {kUniform, kNormal, kExp}) {
    for (std::size_t rho = 1; rho <= 10; ++rho) EXPECT_EQ(mys_lower_bound(rho, d), opt_upper_bound(rho, d));
  }
}

TEST(RatioBound, Values) {
  EXPECT_DOUBLE_EQ(ratio_lower_bound(2, 1), 0.5);
  EXPECT_NEAR(ratio_lower_bound(4, 2), 6.0 / 7.0, 1e-15);
  EXPECT_DOUBLE_EQ(ratio_lower_bound(1, 3), 0.0);
  for (std::size_t rho = 1; rho < 10; ++rho) EXPECT_DOUBLE_EQ(ratio_lower_bound(rho, 1), 1.0 - 1.0 / rho);
  EXPECT_THROW(ratio_lower_bound(0, 1), DomainError);
  EXPECT_THROW(ratio_lower_bound(1, 0), DomainError);
}

TEST(WorstPartition, KnownCases) {
  EXPECT_EQ(worst_partition(6, 2, 1), (std::vector<std::size_t>{1, 5}));
  const std::vector<std::size_t> w{1, 5};
  EXPECT_NEAR(partition_objective(w, 6), 1.0 / 6.0 + 5.0 / 2.0, 1e-12);
  EXPECT_EQ(oracle::best_partition(6, 2, 1).parts, w);
  EXPECT_EQ(worst_partition(6, 3, 2), (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(oracle::best_partition(6, 3, 2).partitions_seen, 1u);
  EXPECT_EQ(worst_partition(9, 2, 3), (std::vector<std::size_t>{3, 6}));
  EXPECT_EQ(oracle::best_partition(9, 2, 3).parts, (std::vector<std::size_t>{3, 6}));
  EXPECT_THROW(worst_partition(5, 3, 2), DomainError);
  EXPECT_THROW(worst_partition(5, 0, 1), DomainError);
  const std::vector<std::size_t> bad{0, 3};
  EXPECT_THROW(partition_objective(bad, 3), DomainError);
}

TEST(Ordering, ClassicNetwork) {
  const auto chain = revenue_ordering_report(SubtreeProfile::from_sizes({3, 6}), 2, kUniform, 3);
  EXPECT_NEAR(chain.mys, 41.667, 1e-3);
  EXPECT_NEAR(chain.apx_half, 72.281, 1e-3);
  EXPECT_NEAR(chain.apx_gamma, 74.131, 1e-3);
  EXPECT_NEAR(chain.opt, 80.0195, 1e-4);
  EXPECT_TRUE(chain.chain_holds);
}

TEST(Ordering, StarWithOneBidderPerBranchIsMyerson) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto sp = SubtreeProfile::from_sizes(std::vector<std::size_t>(n, 1));
    EXPECT_NEAR(expected_total_revenue(sp, kUniform, gamma_uniform(1, 100.0)), mys_lower_bound(n, kUniform), 1e-9);
  }
}

TEST(Ordering, Preconditions) {
  EXPECT_THROW(revenue_ordering_report(SubtreeProfile::from_sizes({3, 6}), 2, kNormal, 3), DomainError);
  EXPECT_THROW(revenue_ordering_report(SubtreeProfile::from_sizes({1, 1}), 3, kUniform, 1), DomainError);
  EXPECT_THROW(revenue_ordering_report(SubtreeProfile::from_sizes({1, 1}), 0, kUniform, 1), DomainError);
}

TEST(RevenueCsv, HeaderAndRows) {
  std::ostringstream out;
  const std::vector<RevenueRow> rows{{SubtreeProfile::from_sizes({3, 6}), 0.0, 70.5},
                                     {SubtreeProfile::from_sizes({2}), 12.5, 1.25}};
  write_revenue_csv(out, rows);
  EXPECT_EQ(out.str(), "sizes,n,m,r,analytic_revenue\n3+6,9,2,0,70.5\n2,2,1,12.5,1.25\n");
}
