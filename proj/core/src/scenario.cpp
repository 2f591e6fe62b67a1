#include <algorithm>
#include <numeric>

#include "diffauction/config.hpp"
#include "diffauction/errors.hpp"
#include "diffauction/simulation.hpp"

namespace diffauction {

namespace {

std::vector<std::size_t> parse_sizes(std::string_view text) {
  std::vector<std::size_t> sizes;
  while (!text.empty()) {
    auto plus = text.find('+');
    sizes.push_back(parse_count(text.substr(0, plus), "branch size"));
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
  }
  return sizes;
}

std::vector<std::size_t> balanced(std::size_t total, std::size_t parts) {
  std::vector<std::size_t> out(parts, total / parts);
  for (std::size_t i = 0; i < total % parts; ++i) ++out[i];
  return out;
}

}  // namespace

Scenario Scenario::market_expansion(unsigned percent, std::size_t n) {
  Scenario s;
  s.kind = Kind::mer;
  s.mer_percent = percent;
  s.n = n;
  return s;
}

Scenario Scenario::market_depth(std::size_t depth, std::size_t n) {
  Scenario s;
  s.kind = Kind::md;
  s.depth = depth;
  s.n = n;
  return s;
}

Scenario Scenario::symmetry(std::vector<std::size_t> sizes) {
  Scenario s;
  s.kind = Kind::symmetry;
  s.n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  s.sizes = std::move(sizes);
  return s;
}

Scenario Scenario::explicit_graph(MarketTemplate market) {
  Scenario s;
  s.kind = Kind::explicit_network;
  s.n = market.bidders().size();
  s.network = std::move(market);
  return s;
}

Scenario Scenario::parse(std::string_view config) {
  auto cfg = ConfigString::parse(config);
  if (cfg.name == "mer") {
    cfg.expect_only({"pct", "n"});
    const auto pct = cfg.positional.empty() ? cfg.count("pct") : parse_count(cfg.positional, "mer percent");
    return market_expansion(static_cast<unsigned>(pct), cfg.has("n") ? cfg.count("n") : 9);
  }
  if (cfg.name == "md") {
    cfg.expect_only({"depth", "n"});
    const auto depth = cfg.positional.empty() ? cfg.count("depth") : parse_count(cfg.positional, "market depth");
    return market_depth(depth, cfg.has("n") ? cfg.count("n") : 9);
  }
  if (cfg.name == "sym") {
    cfg.expect_only({"sizes"});
    const auto text = cfg.positional.empty() ? cfg.values.at("sizes") : cfg.positional;
    return symmetry(parse_sizes(text));
  }
  throw FormatError("unknown scenario '" + std::string(config) + "' (expected mer:<pct>, md:<depth> or sym:<a+b+...>)");
}

std::vector<std::size_t> scenario_branch_sizes(const Scenario& s) {
  const std::string six_hops =
      " (six degrees of separation: no buyer may sit more than " + std::to_string(kMaxMarketDepth) +
      " hops from the seller)";
  switch (s.kind) {
    case Scenario::Kind::symmetry: {
      if (s.sizes.empty()) throw DomainError("symmetry scenario needs at least one branch");
      if (std::find(s.sizes.begin(), s.sizes.end(), std::size_t{0}) != s.sizes.end()) {
        throw DomainError("symmetry scenario: branch sizes must be >= 1");
      }
      if (*std::max_element(s.sizes.begin(), s.sizes.end()) > kMaxMarketDepth) {
        throw DomainError("symmetry scenario: a branch is longer than " + std::to_string(kMaxMarketDepth) + six_hops);
      }
      return s.sizes;
    }
    case Scenario::Kind::mer: {
      if (s.n == 0) throw DomainError("mer scenario needs n >= 1");
      if (s.mer_percent < 30 || s.mer_percent > 100 || s.mer_percent % 10 != 0) {
        throw DomainError("mer must be one of 30, 40, ..., 100 percent" +
                          (s.mer_percent > 0 && s.mer_percent < 30 ? six_hops : std::string{}));
      }
      const std::size_t scaled = s.mer_percent * (s.n + 1);
      if (scaled % 100 != 0 || scaled / 100 < 2) {
        throw DomainError("mer " + std::to_string(s.mer_percent) + "% does not give an integer rho for n=" +
                          std::to_string(s.n));
      }
      const std::size_t rho = scaled / 100 - 1;
      if (rho > s.n) throw DomainError("mer scenario: rho exceeds n");
      auto sizes = balanced(s.n, rho);
      if (sizes.front() > kMaxMarketDepth) {
        throw DomainError("mer " + std::to_string(s.mer_percent) + "% with n=" + std::to_string(s.n) +
                          " is infeasible" + six_hops);
      }
      return sizes;
    }
    case Scenario::Kind::md: {
      if (s.depth == 0 || s.depth > kMaxMarketDepth) {
        throw DomainError("market depth must be in 1.." + std::to_string(kMaxMarketDepth) + six_hops);
      }
      if (s.depth > s.n) throw DomainError("market depth exceeds the number of buyers");
      const std::size_t rho = (s.n + s.depth - 1) / s.depth;
      std::vector<std::size_t> sizes{s.depth};
      if (rho > 1) {
        auto rest = balanced(s.n - s.depth, rho - 1);
        sizes.insert(sizes.end(), rest.begin(), rest.end());
      }
      return sizes;
    }
    case Scenario::Kind::explicit_network:
      throw DomainError("explicit networks have no generated branch sizes");
  }
  throw DomainError("unhandled scenario kind");
}

MarketTemplate generate_scenario(const Scenario& s) {
  if (s.kind == Scenario::Kind::explicit_network) return s.network;
  const auto sizes = scenario_branch_sizes(s);
  MarketTemplate market;
  market.seller = "s";
  market.network.add_node(market.seller);
  for (std::size_t x = 0; x < sizes.size(); ++x) {
    AgentId previous = market.seller;
    for (std::size_t j = 1; j <= sizes[x]; ++j) {
      AgentId id = "x" + std::to_string(x + 1) + "." + std::to_string(j);
      market.network.add_edge(previous, id);
      previous = id;
    }
  }
  return market;
}

}  // namespace diffauction
