#include "diffauction/revenue.hpp"

#include <cmath>
#include <ostream>

#include "diffauction/errors.hpp"
#include "diffauction/reserve.hpp"

namespace diffauction {

namespace {

bool use_closed_form(const ValueDistribution& d, RevenueMethod method) {
  switch (method) {
    case RevenueMethod::automatic: return d.is_uniform();
    case RevenueMethod::quadrature: return false;
    case RevenueMethod::closed_form:
      if (!d.is_uniform()) throw DomainError("closed-form revenue is only available for uniform values");
      return true;
  }
  return false;
}

void check_reserve(const ValueDistribution& d, Money r) {
  if (!(r >= 0.0 && r <= d.vbar())) throw DomainError("reserve " + std::to_string(r) + " outside [0, vbar]");
}

// Myerson revenue of a direct auction among `bidders` i.i.d. buyers.
Money myerson_revenue(std::size_t bidders, const ValueDistribution& d, RevenueMethod method,
                      const QuadratureSettings& q) {
  if (bidders == 0) throw DomainError("Myerson revenue needs at least one bidder");
  const double n = static_cast<double>(bidders);
  const Money vbar = d.vbar();
  if (use_closed_form(d, method)) {
    return vbar * (n - 1.0) / (n + 1.0) + vbar / (n + 1.0) * std::pow(0.5, n);
  }
  const Money r_hat = subtree_optimal_reserve(1, d);
  const double integral = adaptive_simpson(
      [&](double x) {
        const double F = d.cdf(x);
        return n * std::pow(F, n - 1.0) - (n - 1.0) * std::pow(F, n);
      },
      r_hat, vbar, q);
  return vbar - r_hat * std::pow(d.cdf(r_hat), n) - integral;
}

}  // namespace

Money expected_subtree_revenue(std::size_t kx, std::size_t n, const ValueDistribution& d, Money r,
                               RevenueMethod method, const QuadratureSettings& q) {
  if (kx == 0 || kx > n) throw DomainError("subtree revenue needs 1 <= kx <= n");
  check_reserve(d, r);
  const double k = static_cast<double>(kx);
  const double nd = static_cast<double>(n);
  const Money vbar = d.vbar();

  if (use_closed_form(d, method)) {
    const double t = r / vbar;
    return vbar * (1.0 + k) / (nd + 1.0) * (1.0 - std::pow(t, nd + 1.0)) -
           vbar * (1.0 - std::pow(t, nd - k + 1.0)) / (nd - k + 1.0);
  }

  const double share = k / nd;
  const double integral = adaptive_simpson(
      [&](double v) {
        const double F = d.cdf(v);
        const double Fn = std::pow(F, nd);
        return share * Fn - Fn + std::pow(F, nd - k);
      },
      r, vbar, q);
  return share * (vbar - r * std::pow(d.cdf(r), nd)) - integral;
}

Money expected_total_revenue(const SubtreeProfile& profile, const ValueDistribution& d, Money r,
                             RevenueMethod method, const QuadratureSettings& q) {
  profile.validate();
  if (profile.sizes.empty()) throw DomainError("expected revenue needs a nonempty profile");
  Money total = 0.0;
  for (auto k : profile.sizes) total += expected_subtree_revenue(k, profile.n, d, r, method, q);
  return total;
}

Money opt_upper_bound(std::size_t n, const ValueDistribution& d, RevenueMethod method, const QuadratureSettings& q) {
  return myerson_revenue(n, d, method, q);
}

Money mys_lower_bound(std::size_t rho, const ValueDistribution& d, RevenueMethod method,
                      const QuadratureSettings& q) {
  return myerson_revenue(rho, d, method, q);
}

double ratio_lower_bound(std::size_t rho, std::size_t kmin) {
  if (rho == 0 || kmin == 0) throw DomainError("ratio bound needs rho >= 1 and kmin >= 1");
  const double r = static_cast<double>(rho);
  const double k = static_cast<double>(kmin);
  return 1.0 - 1.0 / (r * k - k + 1.0);
}

double partition_objective(std::span<const std::size_t> sizes, std::size_t n) {
  double total = 0.0;
  for (auto k : sizes) {
    if (k == 0 || k > n) throw DomainError("partition part outside [1, n]");
    total += static_cast<double>(k) / static_cast<double>(n - k + 1);
  }
  return total;
}

std::vector<std::size_t> worst_partition(std::size_t n, std::size_t m, std::size_t kmin) {
  if (m == 0 || kmin == 0 || m * kmin > n) {
    throw DomainError("no partition of " + std::to_string(n) + " into " + std::to_string(m) + " parts of size >= " +
                      std::to_string(kmin));
  }
  std::vector<std::size_t> parts(m - 1, kmin);
  parts.push_back(n - (m - 1) * kmin);
  return parts;
}

RevenueOrdering revenue_ordering_report(const SubtreeProfile& profile, std::size_t rho, const ValueDistribution& d,
                                        std::size_t kmin) {
  if (!d.is_uniform()) throw DomainError("the revenue ordering is established for uniform values only");
  profile.validate();
  if (rho == 0 || profile.n < rho) throw DomainError("revenue ordering needs 1 <= rho <= n");
  RevenueOrdering out;
  out.mys = mys_lower_bound(rho, d);
  out.apx_half = expected_total_revenue(profile, d, 0.5 * d.vbar());
  out.apx_gamma = expected_total_revenue(profile, d, gamma_uniform(kmin, d.vbar()));
  out.opt = opt_upper_bound(profile.n, d);
  // Stars hit APX(gamma) == OPT exactly; allow for rounding in the two formulas.
  const Money slack = 1e-9 * d.vbar();
  out.chain_holds = out.mys < out.apx_half && out.apx_half <= out.apx_gamma + slack && out.apx_gamma <= out.opt + slack;
  return out;
}

void write_revenue_csv(std::ostream& out, std::span<const RevenueRow> rows) {
  const auto old_precision = out.precision(17);
  out << "sizes,n,m,r,analytic_revenue\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.profile.sizes.size(); ++i) out << (i ? "+" : "") << row.profile.sizes[i];
    out << ',' << row.profile.n << ',' << row.profile.m << ',' << row.r << ',' << row.revenue << '\n';
  }
  out.precision(old_precision);
}

}  // namespace diffauction
