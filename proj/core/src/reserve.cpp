#include "diffauction/reserve.hpp"

#include <cmath>
#include <sstream>

#include "diffauction/config.hpp"
#include "diffauction/errors.hpp"

namespace diffauction {

namespace {

void require_regular(const ValueDistribution& d, const char* who) {
  const auto report = regularity_check(d, d.vbar() / 1000.0);
  if (!report.is_regular_on_grid) {
    std::ostringstream msg;
    msg << who << ": distribution " << d.to_string() << " is not regular on the grid (min slope of psi "
        << report.min_slope << ")";
    throw SolverError(msg.str());
  }
}

}  // namespace

ReservePolicy ReservePolicy::fixed(Money r) {
  if (!std::isfinite(r) || r < 0.0) throw DomainError("fixed reserve must be >= 0");
  return ReservePolicy(Kind::fixed, r, 0);
}

ReservePolicy ReservePolicy::uniform_gamma(std::size_t kmin) {
  if (kmin == 0) throw DomainError("kmin must be >= 1");
  return ReservePolicy(Kind::uniform_gamma, 0.0, kmin);
}

ReservePolicy ReservePolicy::general_gamma(std::size_t kmin) {
  if (kmin == 0) throw DomainError("kmin must be >= 1");
  return ReservePolicy(Kind::general_gamma, 0.0, kmin);
}

ReservePolicy ReservePolicy::parse(std::string_view config) {
  auto cfg = ConfigString::parse(config);
  if (cfg.name == "none" && cfg.positional.empty() && cfg.values.empty()) return none();
  if (cfg.name == "ropt" && cfg.positional.empty() && cfg.values.empty()) return global_opt();
  if (cfg.name == "fixed") {
    if (cfg.positional.empty() || !cfg.values.empty()) throw FormatError("expected fixed:<reserve>");
    return fixed(parse_number(cfg.positional, "fixed reserve"));
  }
  if (cfg.name == "ugamma" || cfg.name == "ggamma") {
    cfg.expect_only({"k"});
    if (!cfg.positional.empty()) throw FormatError("expected " + cfg.name + ":k=<kmin>");
    const auto k = cfg.count("k");
    return cfg.name == "ugamma" ? uniform_gamma(k) : general_gamma(k);
  }
  throw FormatError("unknown reserve policy '" + std::string(config) +
                    "' (expected none, fixed:<r>, ugamma:k=<k>, ggamma:k=<k> or ropt)");
}

std::string ReservePolicy::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind_) {
    case Kind::none: out << "none"; break;
    case Kind::fixed: out << "fixed:" << fixed_; break;
    case Kind::uniform_gamma: out << "ugamma:k=" << kmin_; break;
    case Kind::general_gamma: out << "ggamma:k=" << kmin_; break;
    case Kind::global_opt: out << "ropt"; break;
  }
  return out.str();
}

Money gamma_uniform(std::size_t kmin, Money vbar) {
  if (kmin == 0) throw DomainError("gamma: kmin must be >= 1");
  const double k = static_cast<double>(kmin);
  return vbar * std::pow(k + 1.0, -1.0 / k);
}

Money gamma_general(std::size_t kmin, const ValueDistribution& d, const RootSolveSettings& s) {
  if (kmin == 0) throw DomainError("gamma: kmin must be >= 1");
  require_regular(d, "gamma_general");
  return bisect_on_support([&](Money v) { return subtree_critical_value(d, v, kmin); }, d.vbar(), s);
}

Money subtree_optimal_reserve(std::size_t k, const ValueDistribution& d, const RootSolveSettings& s) {
  if (k == 0) throw DomainError("subtree optimal reserve: k must be >= 1");
  if (d.is_uniform()) return gamma_uniform(k, d.vbar());
  return bisect_on_support([&](Money v) { return subtree_critical_value(d, v, k); }, d.vbar(), s);
}

double optimal_reserve_condition(const SubtreeProfile& profile, const ValueDistribution& d, Money r) {
  double beta = 0.0;
  for (auto k : profile.sizes) beta += static_cast<double>(k) * subtree_critical_value(d, r, k);
  return beta;
}

Money global_optimal_reserve(const SubtreeProfile& profile, const ValueDistribution& d, const RootSolveSettings& s) {
  if (profile.sizes.empty()) throw DomainError("global optimal reserve needs a nonempty profile");
  profile.validate();
  require_regular(d, "global_optimal_reserve");
  return bisect_on_support([&](Money r) { return optimal_reserve_condition(profile, d, r); }, d.vbar(), s);
}

Money sup_gamma_x(std::size_t n, std::size_t kx, Money vbar) {
  if (kx == 0 || kx > n) {
    throw DomainError("secure bound needs 1 <= kx <= n (kx=" + std::to_string(kx) + ", n=" + std::to_string(n) + ")");
  }
  const double nd = static_cast<double>(n);
  const double k = static_cast<double>(kx);
  return vbar * std::pow((nd + 1.0) / ((k + 1.0) * (nd - k + 1.0)), 1.0 / k);
}

Money secure_global_bound(std::size_t n, std::size_t kmin, Money vbar) { return sup_gamma_x(n, kmin, vbar); }

Money resolve_reserve(const ReservePolicy& policy, const std::optional<SubtreeProfile>& profile,
                      const ValueDistribution& d, const RootSolveSettings& s) {
  switch (policy.kind()) {
    case ReservePolicy::Kind::none:
      return 0.0;
    case ReservePolicy::Kind::fixed:
      if (policy.fixed_reserve() > d.vbar()) throw DomainError("fixed reserve exceeds vbar");
      return policy.fixed_reserve();
    case ReservePolicy::Kind::uniform_gamma:
      return gamma_uniform(policy.kmin(), d.vbar());
    case ReservePolicy::Kind::general_gamma:
      return gamma_general(policy.kmin(), d, s);
    case ReservePolicy::Kind::global_opt:
      if (!profile) throw UsageError("the global optimal reserve needs a subtree profile");
      if (profile->sizes.empty()) return 0.0;
      return global_optimal_reserve(*profile, d, s);
  }
  throw UsageError("unhandled reserve policy");
}

}  // namespace diffauction
