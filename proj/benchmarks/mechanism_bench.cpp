#include <benchmark/benchmark.h>

#include <random>

#include "diffauction/graph.hpp"
#include "diffauction/mechanism.hpp"

using namespace diffauction;

namespace {

// Random reported-edge profile with an average out-degree of `degree`.
ActionProfile random_profile(std::size_t n, double degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  ActionProfile p;
  p.seller = "s";
  for (std::size_t i = 0; i < n; ++i) p.agents.push_back({"b" + std::to_string(i), 100.0 * unit(rng), {}});
  for (std::size_t i = 0; i < std::max<std::size_t>(1, n / 50); ++i) p.seller_neighbors.push_back(p.agents[pick(rng)].id);
  for (auto& a : p.agents) {
    const auto edges = static_cast<std::size_t>(degree * 2.0 * unit(rng));
    for (std::size_t e = 0; e < edges; ++e) a.reported_neighbors.push_back(p.agents[pick(rng)].id);
  }
  return p;
}

void BM_BuildPot(benchmark::State& state) {
  const auto p = random_profile(static_cast<std::size_t>(state.range(0)), 3.0, 1);
  for (auto _ : state) {
    auto pot = build_pot(build_diffusion_graph(p));
    benchmark::DoNotOptimize(pot.node_count());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildPot)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_RunPrepared(benchmark::State& state) {
  const auto p = random_profile(static_cast<std::size_t>(state.range(0)), 3.0, 2);
  const PreparedAuction auction(p);
  std::vector<Money> bids(auction.graph().bids().begin(), auction.graph().bids().end());
  NodeOutcome out;
  for (auto _ : state) {
    auction.run(bids, 50.0, out);
    benchmark::DoNotOptimize(out.revenue);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RunPrepared)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_RunApxR(benchmark::State& state) {
  const auto p = random_profile(static_cast<std::size_t>(state.range(0)), 3.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(run_apx_r(p, 50.0).revenue);
}
BENCHMARK(BM_RunApxR)->Arg(9)->Arg(256)->Arg(4096);

}  // namespace
