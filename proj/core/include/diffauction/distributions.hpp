#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "diffauction/graph.hpp"

namespace diffauction {

/// Counter-style random stream. Each Monte Carlo replicate derives its own
/// stream from (master seed, replicate index), so results do not depend on
/// how replicates are scheduled.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}
  static RngStream for_replicate(std::uint64_t master_seed, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct UniformSpec {};
struct TruncatedNormalSpec {
  double mu = 50.0;
  double sigma = 16.67;
};
struct TruncatedExponentialSpec {
  double lambda = 0.08;
};

/// I.i.d. value distribution on [0, vbar]. Normal and exponential are
/// truncated to the support and renormalised so cdf(vbar) == 1 exactly.
class ValueDistribution {
 public:
  using Kind = std::variant<UniformSpec, TruncatedNormalSpec, TruncatedExponentialSpec>;

  static ValueDistribution uniform(Money vbar);
  static ValueDistribution truncated_normal(double mu, double sigma, Money vbar);
  static ValueDistribution truncated_exponential(double lambda, Money vbar);

  /// `uniform:vbar=100`, `normal:mu=50,sigma=16.67,vbar=100`, `exp:lambda=0.08,vbar=100`.
  static ValueDistribution parse(std::string_view config);
  std::string to_string() const;

  const Kind& kind() const { return kind_; }
  bool is_uniform() const { return std::holds_alternative<UniformSpec>(kind_); }
  Money vbar() const { return vbar_; }

  double cdf(Money v) const;
  double pdf(Money v) const;
  Money quantile(double p) const;
  Money sample(RngStream& rng) const { return quantile(rng.next_unit()); }

  /// Untruncated cdf at v (mass below v before renormalisation); equals cdf() for uniform.
  double untruncated_cdf(Money v) const;

 private:
  ValueDistribution(Kind kind, Money vbar);
  void check_support(Money v, const char* what) const;

  Kind kind_;
  Money vbar_;
  double lower_mass_ = 0.0;  // untruncated cdf at 0
  double norm_ = 1.0;        // untruncated mass on [0, vbar]
};

struct RegularityReport {
  bool is_regular_on_grid = false;
  double min_slope = 0.0;
  Money grid_step = 0.0;
};

/// psi(v) = v - (1 - F(v)) / f(v).
Money virtual_value(const ValueDistribution& d, Money v);

/// phi(v; k): the virtual value of the maximum of k i.i.d. draws,
/// v - (1 - F^k) / (k f F^(k-1)). Reduces to virtual_value for k = 1.
Money subtree_critical_value(const ValueDistribution& d, Money v, std::size_t k);

/// f / (1 - F); undefined at vbar.
double hazard(const ValueDistribution& d, Money v);
/// Hazard of H = F^k.
double subtree_hazard(const ValueDistribution& d, Money v, std::size_t k);
/// (1 - F^k) / F^k.
double odds_against_all_below(const ValueDistribution& d, Money v, std::size_t k);

/// Finite-difference slope of psi on a grid over [0, vbar].
RegularityReport regularity_check(const ValueDistribution& d, Money grid_step);

}  // namespace diffauction
