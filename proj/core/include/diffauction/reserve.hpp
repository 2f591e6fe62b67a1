#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffauction/distributions.hpp"
#include "diffauction/graph.hpp"
#include "diffauction/numerics.hpp"

namespace diffauction {

/// How the deployed reserve is produced. `kmin` is a prior estimate of the
/// smallest POT subtree and is fixed when the policy is built; only
/// `global_opt` ever looks at the live profile, which is what breaks DSIC.
class ReservePolicy {
 public:
  enum class Kind { none, fixed, uniform_gamma, general_gamma, global_opt };

  static ReservePolicy none() { return ReservePolicy(Kind::none, 0.0, 0); }
  static ReservePolicy fixed(Money r);
  static ReservePolicy uniform_gamma(std::size_t kmin);
  static ReservePolicy general_gamma(std::size_t kmin);
  static ReservePolicy global_opt() { return ReservePolicy(Kind::global_opt, 0.0, 0); }

  /// `none | fixed:50 | ugamma:k=3 | ggamma:k=3 | ropt`.
  static ReservePolicy parse(std::string_view config);
  std::string to_string() const;

  Kind kind() const { return kind_; }
  Money fixed_reserve() const { return fixed_; }
  std::size_t kmin() const { return kmin_; }
  bool reads_profile() const { return kind_ == Kind::global_opt; }

  friend bool operator==(const ReservePolicy&, const ReservePolicy&) = default;

 private:
  ReservePolicy(Kind kind, Money r, std::size_t kmin) : kind_(kind), fixed_(r), kmin_(kmin) {}

  Kind kind_;
  Money fixed_;
  std::size_t kmin_;
};

/// vbar / (kmin + 1)^(1/kmin).
Money gamma_uniform(std::size_t kmin, Money vbar);

/// Root of phi(gamma; kmin) = 0 by bisection.
Money gamma_general(std::size_t kmin, const ValueDistribution& d, const RootSolveSettings& s = {});

/// Revenue-maximising reserve for a single subtree of size k (root of phi(r; k)).
/// Uniform distributions take the closed form.
Money subtree_optimal_reserve(std::size_t k, const ValueDistribution& d, const RootSolveSettings& s = {});

/// sum_x k_x phi(r; k_x); its root is the profile-optimal reserve.
double optimal_reserve_condition(const SubtreeProfile& profile, const ValueDistribution& d, Money r);

/// Profile-dependent optimum r_opt. Refuses non-regular distributions.
Money global_optimal_reserve(const SubtreeProfile& profile, const ValueDistribution& d,
                             const RootSolveSettings& s = {});

/// Largest reserve for subtree x that still beats no reserve:
/// vbar * [(n+1) / ((kx+1)(n-kx+1))]^(1/kx).
Money sup_gamma_x(std::size_t n, std::size_t kx, Money vbar);

/// sup_gamma_x evaluated at the smallest admissible subtree size.
Money secure_global_bound(std::size_t n, std::size_t kmin, Money vbar);

/// Turns a policy into a number. Kinds other than global_opt never read `profile`.
Money resolve_reserve(const ReservePolicy& policy, const std::optional<SubtreeProfile>& profile,
                      const ValueDistribution& d, const RootSolveSettings& s = {});

}  // namespace diffauction
