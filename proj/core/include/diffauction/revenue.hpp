#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "diffauction/distributions.hpp"
#include "diffauction/graph.hpp"
#include "diffauction/numerics.hpp"

namespace diffauction {

enum class RevenueMethod {
  automatic,    // closed form for uniform, quadrature otherwise
  closed_form,  // uniform only; DomainError otherwise
  quadrature,
};

/// Expected truthful revenue collected from one seller subtree of size kx
/// when n bidders are reachable, with reserve r.
Money expected_subtree_revenue(std::size_t kx, std::size_t n, const ValueDistribution& d, Money r,
                               RevenueMethod method = RevenueMethod::automatic,
                               const QuadratureSettings& q = {});

/// Sum of expected_subtree_revenue over the profile's subtrees.
Money expected_total_revenue(const SubtreeProfile& profile, const ValueDistribution& d, Money r,
                             RevenueMethod method = RevenueMethod::automatic, const QuadratureSettings& q = {});

/// Myerson revenue with all n bidders as direct neighbours of the seller.
Money opt_upper_bound(std::size_t n, const ValueDistribution& d, RevenueMethod method = RevenueMethod::automatic,
                      const QuadratureSettings& q = {});

/// Myerson revenue restricted to the rho direct neighbours (same formula as
/// opt_upper_bound with rho in place of n).
Money mys_lower_bound(std::size_t rho, const ValueDistribution& d, RevenueMethod method = RevenueMethod::automatic,
                      const QuadratureSettings& q = {});

/// 1 - 1 / (rho * kmin - kmin + 1).
double ratio_lower_bound(std::size_t rho, std::size_t kmin);

/// sum_x k_x / (n - k_x + 1).
double partition_objective(std::span<const std::size_t> sizes, std::size_t n);

/// m - 1 subtrees of size kmin plus one holding the rest; maximises
/// partition_objective over partitions of n into m parts each >= kmin.
std::vector<std::size_t> worst_partition(std::size_t n, std::size_t m, std::size_t kmin);

struct RevenueOrdering {
  Money mys = 0.0;        // MYS(rho)
  Money apx_half = 0.0;   // APX at r = vbar / 2
  Money apx_gamma = 0.0;  // APX at gamma(kmin)
  Money opt = 0.0;        // OPT(n)
  /// mys < apx_half <= apx_gamma <= opt
  bool chain_holds = false;
};

/// Uniform distributions only; needs n >= rho.
RevenueOrdering revenue_ordering_report(const SubtreeProfile& profile, std::size_t rho, const ValueDistribution& d,
                                        std::size_t kmin);

struct RevenueRow {
  SubtreeProfile profile;
  Money r = 0.0;
  Money revenue = 0.0;
};

/// `sizes,n,m,r,analytic_revenue` with sizes joined by '+'.
void write_revenue_csv(std::ostream& out, std::span<const RevenueRow> rows);

}  // namespace diffauction
