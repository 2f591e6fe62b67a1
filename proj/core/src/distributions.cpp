#include "diffauction/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/distributions/normal.hpp>

#include "diffauction/config.hpp"
#include "diffauction/errors.hpp"

namespace diffauction {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::uint64_t RngStream::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

RngStream RngStream::for_replicate(std::uint64_t master_seed, std::uint64_t index) {
  return RngStream(splitmix64(splitmix64(master_seed) ^ splitmix64(index + 0x632BE59BD9B4E019ull)));
}

ValueDistribution::ValueDistribution(Kind kind, Money vbar) : kind_(kind), vbar_(vbar) {
  if (!std::isfinite(vbar) || vbar <= 0.0) throw DomainError("vbar must be positive");
  std::visit(overloaded{
                 [](const UniformSpec&) {},
                 [&](const TruncatedNormalSpec& s) {
                   if (!(s.sigma > 0.0) || !std::isfinite(s.mu)) throw DomainError("normal: sigma must be positive");
                   lower_mass_ = std_normal_cdf((0.0 - s.mu) / s.sigma);
                   norm_ = std_normal_cdf((vbar_ - s.mu) / s.sigma) - lower_mass_;
                 },
                 [&](const TruncatedExponentialSpec& s) {
                   if (!(s.lambda > 0.0) || !std::isfinite(s.lambda)) throw DomainError("exp: lambda must be positive");
                   norm_ = -std::expm1(-s.lambda * vbar_);
                 },
             },
             kind_);
  if (!(norm_ > 0.0)) throw DomainError("distribution has no mass on [0, vbar]");
}

ValueDistribution ValueDistribution::uniform(Money vbar) { return {UniformSpec{}, vbar}; }

ValueDistribution ValueDistribution::truncated_normal(double mu, double sigma, Money vbar) {
  return {TruncatedNormalSpec{mu, sigma}, vbar};
}

ValueDistribution ValueDistribution::truncated_exponential(double lambda, Money vbar) {
  return {TruncatedExponentialSpec{lambda}, vbar};
}

ValueDistribution ValueDistribution::parse(std::string_view config) {
  auto cfg = ConfigString::parse(config);
  if (!cfg.positional.empty()) throw FormatError("unexpected value '" + cfg.positional + "' in distribution config");
  if (cfg.name == "uniform") {
    cfg.expect_only({"vbar"});
    return uniform(cfg.number("vbar"));
  }
  if (cfg.name == "normal") {
    cfg.expect_only({"mu", "sigma", "vbar"});
    return truncated_normal(cfg.number("mu"), cfg.number("sigma"), cfg.number("vbar"));
  }
  if (cfg.name == "exp") {
    cfg.expect_only({"lambda", "vbar"});
    return truncated_exponential(cfg.number("lambda"), cfg.number("vbar"));
  }
  throw FormatError("unknown distribution '" + cfg.name + "' (expected uniform, normal or exp)");
}

std::string ValueDistribution::to_string() const {
  std::ostringstream out;
  out.precision(17);
  std::visit(overloaded{
                 [&](const UniformSpec&) { out << "uniform:vbar=" << vbar_; },
                 [&](const TruncatedNormalSpec& s) {
                   out << "normal:mu=" << s.mu << ",sigma=" << s.sigma << ",vbar=" << vbar_;
                 },
                 [&](const TruncatedExponentialSpec& s) { out << "exp:lambda=" << s.lambda << ",vbar=" << vbar_; },
             },
             kind_);
  return out.str();
}

void ValueDistribution::check_support(Money v, const char* what) const {
  if (!(v >= 0.0 && v <= vbar_)) {
    throw DomainError(std::string(what) + ": argument " + std::to_string(v) + " outside [0, " +
                      std::to_string(vbar_) + "]");
  }
}

double ValueDistribution::cdf(Money v) const {
  check_support(v, "cdf");
  if (v == vbar_) return 1.0;
  return std::visit(overloaded{
                        [&](const UniformSpec&) { return v / vbar_; },
                        [&](const TruncatedNormalSpec& s) {
                          return std::clamp((std_normal_cdf((v - s.mu) / s.sigma) - lower_mass_) / norm_, 0.0, 1.0);
                        },
                        [&](const TruncatedExponentialSpec& s) { return -std::expm1(-s.lambda * v) / norm_; },
                    },
                    kind_);
}

double ValueDistribution::pdf(Money v) const {
  check_support(v, "pdf");
  return std::visit(overloaded{
                        [&](const UniformSpec&) { return 1.0 / vbar_; },
                        [&](const TruncatedNormalSpec& s) {
                          const double z = (v - s.mu) / s.sigma;
                          return std::exp(-0.5 * z * z) / (s.sigma * std::sqrt(2.0 * M_PI)) / norm_;
                        },
                        [&](const TruncatedExponentialSpec& s) { return s.lambda * std::exp(-s.lambda * v) / norm_; },
                    },
                    kind_);
}

Money ValueDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile: probability " + std::to_string(p) + " outside [0, 1]");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return vbar_;
  const Money v = std::visit(overloaded{
                                 [&](const UniformSpec&) { return p * vbar_; },
                                 [&](const TruncatedNormalSpec& s) {
                                   boost::math::normal_distribution<double> normal(s.mu, s.sigma);
                                   return boost::math::quantile(normal, lower_mass_ + p * norm_);
                                 },
                                 [&](const TruncatedExponentialSpec& s) { return -std::log1p(-p * norm_) / s.lambda; },
                             },
                             kind_);
  return std::clamp(v, 0.0, vbar_);
}

double ValueDistribution::untruncated_cdf(Money v) const {
  return std::visit(overloaded{
                        [&](const UniformSpec&) { return std::clamp(v / vbar_, 0.0, 1.0); },
                        [&](const TruncatedNormalSpec& s) { return std_normal_cdf((v - s.mu) / s.sigma); },
                        [&](const TruncatedExponentialSpec& s) { return v <= 0.0 ? 0.0 : -std::expm1(-s.lambda * v); },
                    },
                    kind_);
}

Money virtual_value(const ValueDistribution& d, Money v) {
  const double f = d.pdf(v);
  if (!(f > 0.0)) throw SingularityError("virtual value: density vanishes at " + std::to_string(v));
  return v - (1.0 - d.cdf(v)) / f;
}

Money subtree_critical_value(const ValueDistribution& d, Money v, std::size_t k) {
  if (k == 0) throw DomainError("subtree critical value: k must be >= 1");
  if (k == 1) return virtual_value(d, v);
  const double F = d.cdf(v);
  const double f = d.pdf(v);
  if (!(F > 0.0)) {
    throw SingularityError("subtree critical value: F(v) = 0 with k >= 2 (limit is -infinity)");
  }
  if (!(f > 0.0)) throw SingularityError("subtree critical value: density vanishes at " + std::to_string(v));
  const double k_d = static_cast<double>(k);
  const double Fk1 = std::pow(F, k_d - 1.0);
  return v - (1.0 - Fk1 * F) / (k_d * f * Fk1);
}

double hazard(const ValueDistribution& d, Money v) { return subtree_hazard(d, v, 1); }

double subtree_hazard(const ValueDistribution& d, Money v, std::size_t k) {
  if (k == 0) throw DomainError("subtree hazard: k must be >= 1");
  if (v >= d.vbar()) throw DomainError("hazard is undefined at vbar");
  const double F = d.cdf(v);
  const double k_d = static_cast<double>(k);
  const double tail = 1.0 - std::pow(F, k_d);
  if (!(tail > 0.0)) throw SingularityError("hazard: no mass above " + std::to_string(v));
  return k_d * d.pdf(v) * std::pow(F, k_d - 1.0) / tail;
}

double odds_against_all_below(const ValueDistribution& d, Money v, std::size_t k) {
  if (k == 0) throw DomainError("odds: k must be >= 1");
  const double H = std::pow(d.cdf(v), static_cast<double>(k));
  if (!(H > 0.0)) throw SingularityError("odds: F(v)^k = 0 at " + std::to_string(v));
  return (1.0 - H) / H;
}

RegularityReport regularity_check(const ValueDistribution& d, Money grid_step) {
  if (!(grid_step > 0.0)) throw DomainError("regularity check: grid step must be positive");
  RegularityReport report;
  report.grid_step = grid_step;
  report.min_slope = std::numeric_limits<double>::infinity();
  const auto points = static_cast<std::size_t>(std::floor(d.vbar() / grid_step));
  double previous = virtual_value(d, 0.0);
  for (std::size_t i = 1; i <= points; ++i) {
    const Money v = std::min(d.vbar(), static_cast<double>(i) * grid_step);
    const double current = virtual_value(d, v);
    report.min_slope = std::min(report.min_slope, (current - previous) / grid_step);
    previous = current;
  }
  report.is_regular_on_grid = report.min_slope > 0.0;
  return report;
}

}  // namespace diffauction
