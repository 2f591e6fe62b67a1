#include "diffauction/incentive.hpp"

#include <algorithm>
#include <cmath>

#include "diffauction/errors.hpp"
#include "diffauction/mechanism.hpp"

namespace diffauction {

TypeProfile TypeProfile::from_truthful_profile(const ActionProfile& profile) {
  profile.validate();
  TypeProfile out;
  out.seller = profile.seller;
  out.seller_neighbors = profile.seller_neighbors;
  for (const auto& a : profile.agents) out.types[a.id] = TrueType{a.bid, a.reported_neighbors};
  return out;
}

TypeProfile TypeProfile::from_market(const MarketTemplate& market, const std::map<AgentId, Money>& values) {
  return from_truthful_profile(market.truthful_profile(values));
}

ActionProfile TypeProfile::truthful() const {
  ActionProfile p;
  p.seller = seller;
  p.seller_neighbors = seller_neighbors;
  for (const auto& [id, type] : types) p.agents.push_back({id, type.value, type.neighbors});
  return p;
}

std::vector<Deviation> enumerate_deviations(const TrueType& type, const BidGrid& grid) {
  std::vector<AgentId> neighbors = type.neighbors;
  std::sort(neighbors.begin(), neighbors.end());
  neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
  if (neighbors.size() > kMaxDeviationNeighbors) {
    throw DomainError("refusing to enumerate 2^" + std::to_string(neighbors.size()) + " neighbour subsets (cap 2^" +
                      std::to_string(kMaxDeviationNeighbors) + ")");
  }
  if (!(grid.vbar > 0.0)) throw DomainError("bid grid needs vbar > 0");

  std::vector<Money> bids;
  if (grid.points == 1) bids.push_back(0.0);
  for (std::size_t i = 0; grid.points >= 2 && i < grid.points; ++i) {
    bids.push_back(grid.vbar * static_cast<double>(i) / static_cast<double>(grid.points - 1));
  }
  for (Money b : grid.critical) {
    if (std::isfinite(b)) bids.push_back(std::clamp(b, 0.0, grid.vbar));
  }
  bids.push_back(std::clamp(type.value, 0.0, grid.vbar));
  std::sort(bids.begin(), bids.end());
  bids.erase(std::unique(bids.begin(), bids.end()), bids.end());

  std::vector<Deviation> out;
  const std::size_t subsets = std::size_t{1} << neighbors.size();
  out.reserve(bids.size() * subsets);
  for (Money bid : bids) {
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      Deviation dev{bid, {}};
      for (std::size_t j = 0; j < neighbors.size(); ++j) {
        if (mask & (std::size_t{1} << j)) dev.neighbors.push_back(neighbors[j]);
      }
      out.push_back(std::move(dev));
    }
  }
  return out;
}

Money realized_utility(const ActionProfile& profile, const AgentId& agent, Money value, const ReservePolicy& policy,
                       const ValueDistribution& d) {
  const PreparedAuction auction(profile);
  std::optional<SubtreeProfile> live;
  if (policy.reads_profile()) live = subtree_profile(auction.pot());
  const Money reserve = resolve_reserve(policy, live, d);
  const Outcome outcome = auction.run(reserve);
  auto it = outcome.payments.find(agent);
  const Money paid = it == outcome.payments.end() ? 0.0 : it->second;
  return (outcome.winner == agent ? value : 0.0) - paid;
}

std::vector<DeviationReport> check_dsic(const TypeProfile& instance, const ReservePolicy& policy,
                                        const ValueDistribution& d, const DsicOptions& options) {
  const ActionProfile truthful = instance.truthful();
  truthful.validate();
  const Money eps = 1e-6 * d.vbar();

  // Opponent profiles: index 0 is everyone truthful, the rest are sampled.
  std::vector<ActionProfile> opponents{truthful};
  for (std::size_t k = 0; k < options.sampled_opponent_profiles; ++k) {
    auto rng = RngStream::for_replicate(options.seed, k);
    ActionProfile sampled = truthful;
    for (auto& action : sampled.agents) {
      action.bid = d.sample(rng);
      std::vector<AgentId> kept;
      for (const auto& nb : action.reported_neighbors) {
        if (rng.next_unit() < 0.5) kept.push_back(nb);
      }
      action.reported_neighbors = std::move(kept);
    }
    opponents.push_back(std::move(sampled));
  }

  std::vector<DeviationReport> reports;
  for (const auto& [agent, type] : instance.types) {
    DeviationReport report;
    report.agent = agent;
    report.opponent_profiles = opponents.size();
    report.best_deviation = Deviation{type.value, type.neighbors};
    std::sort(report.best_deviation.neighbors.begin(), report.best_deviation.neighbors.end());
    bool first_profile = true;

    for (const auto& opponent_profile : opponents) {
      ActionProfile base = opponent_profile;
      auto self = std::find_if(base.agents.begin(), base.agents.end(), [&](const auto& a) { return a.id == agent; });
      self->bid = type.value;
      self->reported_neighbors = type.neighbors;

      const Money truthful_utility = realized_utility(base, agent, type.value, policy, d);
      if (first_profile) report.truthful_utility = truthful_utility;
      first_profile = false;

      BidGrid grid{options.grid_points, d.vbar(), {}};
      for (const auto& a : base.agents) {
        if (a.id != agent) grid.critical.push_back(a.bid);
      }
      const PreparedAuction base_auction(base);
      std::optional<SubtreeProfile> live;
      if (policy.reads_profile()) live = subtree_profile(base_auction.pot());
      const Money r = resolve_reserve(policy, live, d);
      grid.critical.insert(grid.critical.end(), {r, r - eps, r + eps});

      for (const auto& dev : enumerate_deviations(type, grid)) {
        self->bid = dev.bid;
        self->reported_neighbors = dev.neighbors;
        const Money gain = realized_utility(base, agent, type.value, policy, d) - truthful_utility;
        ++report.deviations_checked;
        if (gain > report.best_gain) {
          report.best_gain = gain;
          report.best_deviation = dev;
        }
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

CounterexampleReport ropt_counterexample(Money c_value) {
  if (!(c_value >= 0.0 && c_value <= 1.0)) throw DomainError("C's value must lie in [0, 1]");
  MarketTemplate market;
  market.seller = "s";
  using Edge = std::pair<const char*, const char*>;
  for (auto [u, v] : std::initializer_list<Edge>{{"s", "A"}, {"A", "B"}, {"s", "C"}, {"C", "D"}, {"s", "E"}, {"E", "F"}}) {
    market.network.add_edge(u, v);
  }
  const std::map<AgentId, Money> values{{"A", 0.35}, {"B", 0.20}, {"C", c_value},
                                        {"D", 0.45}, {"E", 0.50}, {"F", 0.15}};
  const auto d = ValueDistribution::uniform(1.0);
  const auto policy = ReservePolicy::global_opt();

  CounterexampleReport report;
  report.deviator_value = c_value;
  report.truthful = market.truthful_profile(values);
  report.withheld = report.truthful;
  for (auto& a : report.withheld.agents) {
    if (a.id == report.deviator) a.reported_neighbors.clear();
  }
  report.full_profile = subtree_profile(build_pot(build_diffusion_graph(report.truthful)));
  report.withheld_profile = subtree_profile(build_pot(build_diffusion_graph(report.withheld)));
  report.ropt_full = global_optimal_reserve(report.full_profile, d);
  report.ropt_withheld = global_optimal_reserve(report.withheld_profile, d);
  report.utility_truthful = realized_utility(report.truthful, report.deviator, c_value, policy, d);
  report.utility_withheld = realized_utility(report.withheld, report.deviator, c_value, policy, d);
  report.utility_delta = report.utility_withheld - report.utility_truthful;
  return report;
}

}  // namespace diffauction
