#include "diffauction/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <thread>

#include "diffauction/errors.hpp"
#include "diffauction/mechanism.hpp"

namespace diffauction {

namespace {

struct BlockStats {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t failures = 0;
  std::size_t zeros = 0;
  std::vector<std::size_t> histogram;
};

std::size_t bin_of(Money revenue, Money vbar) {
  const auto bin = static_cast<std::size_t>(std::floor(revenue / vbar * RevenueStats::kBins));
  return std::min(bin, RevenueStats::kBins - 1);
}

}  // namespace

std::map<AgentId, Money> draw_values(const MarketTemplate& market, const ValueDistribution& d,
                                     std::uint64_t master_seed, std::uint64_t index) {
  auto rng = RngStream::for_replicate(master_seed, index);
  std::map<AgentId, Money> values;
  for (const auto& id : market.bidders()) values[id] = d.sample(rng);
  return values;
}

RevenueStats monte_carlo(const MarketTemplate& market, const ValueDistribution& d, const ReservePolicy& policy,
                         std::size_t runs, std::uint64_t master_seed, const MonteCarloOptions& options) {
  if (runs == 0) throw DomainError("monte carlo needs runs >= 1");
  if (options.block_size == 0) throw DomainError("monte carlo block size must be >= 1");

  const auto bidders = market.bidders();
  const PreparedAuction auction(market.truthful_profile({}));
  const auto& graph = auction.graph();

  // Topology is fixed under truthful play, so the reserve is resolved once.
  const Money reserve = resolve_reserve(policy, subtree_profile(auction.pot()), d);
  if (reserve > d.vbar()) throw DomainError("reserve exceeds vbar");

  // Draw order follows market.bidders(); scatter into graph node order.
  std::vector<DiffusionGraph::Node> node_of_draw;
  node_of_draw.reserve(bidders.size());
  for (const auto& id : bidders) node_of_draw.push_back(graph.node(id));

  const std::size_t blocks = (runs + options.block_size - 1) / options.block_size;
  std::vector<BlockStats> partial(blocks);
  std::atomic<std::size_t> next_block{0};

  auto worker = [&] {
    std::vector<Money> bids(graph.node_count(), 0.0);
    NodeOutcome outcome;
    for (std::size_t b = next_block++; b < blocks; b = next_block++) {
      BlockStats& stats = partial[b];
      stats.histogram.assign(RevenueStats::kBins, 0);
      const std::size_t begin = b * options.block_size;
      const std::size_t end = std::min(runs, begin + options.block_size);
      for (std::size_t i = begin; i < end; ++i) {
        auto rng = RngStream::for_replicate(master_seed, i);
        for (auto node : node_of_draw) bids[node] = d.sample(rng);
        auction.run(bids, reserve, outcome);
        const Money revenue = outcome.revenue;
        stats.sum += revenue;
        stats.sum_sq += revenue * revenue;
        if (outcome.failed) ++stats.failures;
        if (revenue == 0.0) {
          ++stats.zeros;
        } else {
          ++stats.histogram[bin_of(revenue, d.vbar())];
        }
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, blocks);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  RevenueStats out;
  out.runs = runs;
  out.reserve = reserve;
  out.vbar = d.vbar();
  out.histogram.assign(RevenueStats::kBins, 0);
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t failures = 0;
  for (const auto& block : partial) {
    sum += block.sum;
    sum_sq += block.sum_sq;
    failures += block.failures;
    out.zero_count += block.zeros;
    for (std::size_t i = 0; i < RevenueStats::kBins; ++i) out.histogram[i] += block.histogram[i];
  }
  const double n = static_cast<double>(runs);
  out.mean = sum / n;
  out.failure_rate = static_cast<double>(failures) / n;
  if (runs > 1) {
    const double variance = std::max(0.0, (sum_sq - n * out.mean * out.mean) / (n - 1.0));
    out.std_error = std::sqrt(variance / n);
  }
  return out;
}

void write_histogram_csv(std::ostream& out, const RevenueStats& stats) {
  const auto old_precision = out.precision(17);
  out << "bin_lo,bin_hi,count\n";
  out << 0.0 << ',' << 0.0 << ',' << stats.zero_count << '\n';
  const double width = stats.vbar / RevenueStats::kBins;
  for (std::size_t i = 0; i < stats.histogram.size(); ++i) {
    out << width * static_cast<double>(i) << ',' << width * static_cast<double>(i + 1) << ',' << stats.histogram[i]
        << '\n';
  }
  out.precision(old_precision);
}

}  // namespace diffauction
