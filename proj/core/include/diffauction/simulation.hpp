#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string_view>
#include <vector>

#include "diffauction/distributions.hpp"
#include "diffauction/network.hpp"
#include "diffauction/reserve.hpp"

namespace diffauction {

/// Synthetic markets of n buyers built from chains hanging off the seller.
struct Scenario {
  enum class Kind { mer, md, symmetry, explicit_network };

  Kind kind = Kind::symmetry;
  std::size_t n = 9;
  unsigned mer_percent = 0;           // mer: 30..100, step 10
  std::size_t depth = 0;              // md: 1..6
  std::vector<std::size_t> sizes;     // symmetry: branch sizes
  MarketTemplate network;             // explicit_network

  static Scenario market_expansion(unsigned percent, std::size_t n = 9);
  static Scenario market_depth(std::size_t depth, std::size_t n = 9);
  static Scenario symmetry(std::vector<std::size_t> sizes);
  static Scenario explicit_graph(MarketTemplate market);

  /// `mer:30`, `mer:pct=30,n=9`, `md:4`, `md:depth=4,n=9`, `sym:3+6`, `sym:sizes=3+6`.
  static Scenario parse(std::string_view config);
};

/// Longest seller-to-buyer distance allowed in generated scenarios.
inline constexpr std::size_t kMaxMarketDepth = 6;

/// Chain lengths used by a mer/md/symmetry scenario. mer: rho = mer*(n+1) - 1
/// balanced chains; md: one chain of the target depth plus the fewest extra
/// chains, balanced. DomainError when no tree fits within six hops.
std::vector<std::size_t> scenario_branch_sizes(const Scenario& s);

/// Seller "s" plus one chain per branch; node j of branch x is "x<x>.<j>".
MarketTemplate generate_scenario(const Scenario& s);

struct RevenueStats {
  static constexpr std::size_t kBins = 100;

  std::size_t runs = 0;
  Money mean = 0.0;
  Money std_error = 0.0;
  double failure_rate = 0.0;
  Money reserve = 0.0;
  Money vbar = 0.0;
  /// Replicates whose revenue is exactly 0.
  std::size_t zero_count = 0;
  /// Positive revenues in kBins equal-width bins on (0, vbar].
  std::vector<std::size_t> histogram;

  friend bool operator==(const RevenueStats&, const RevenueStats&) = default;
};

struct MonteCarloOptions {
  std::size_t threads = 1;
  /// Replicates per aggregation block; blocks are merged in index order so the
  /// result does not depend on `threads`.
  std::size_t block_size = 4096;
};

/// Values of replicate `index`, in the order of `market.bidders()`.
std::map<AgentId, Money> draw_values(const MarketTemplate& market, const ValueDistribution& d,
                                     std::uint64_t master_seed, std::uint64_t index);

/// Truthful APX-R revenue over `runs` i.i.d. value draws.
RevenueStats monte_carlo(const MarketTemplate& market, const ValueDistribution& d, const ReservePolicy& policy,
                         std::size_t runs, std::uint64_t master_seed, const MonteCarloOptions& options = {});

/// `bin_lo,bin_hi,count`; the first row is the zero bin [0,0].
void write_histogram_csv(std::ostream& out, const RevenueStats& stats);

}  // namespace diffauction
