// Parameters of the irreducible spherical functions of (SU(3), U(2)), the maps
// between the two standard labelings, and every eigenvalue convention.
//
// Eigenvalue conventions
// ----------------------
// The canonical (lambda, mu) pair is the one of the t-variable operators D, E
// (see operators.hpp). The radial r-variable systems carry 4*lambda, 4*mu, and
// the Casimir eigenvalues of the group are
//     lambda~ = 4 lambda + pi(Delta_2K),
//     mu~     = 4 mu - 12 lambda + pi(Delta_3K).
// All conversions go through the named helpers below.

#pragma once

#include <string>
#include <vector>

#include "su3sf/algebra.hpp"

namespace su3sf {

/// Labels one class of irreducible spherical functions of K-type (n, ell).
struct SFIndex {
  int n = 0;
  int ell = 0;
  int w = 0;
  int k = 0;

  bool admissible() const { return 0 <= k && k <= ell && 0 <= w && 0 <= w + n + k; }
  /// Empty string when admissible, otherwise the violated constraints.
  std::string violations() const;
  /// Throws ConstraintViolation unless admissible.
  void validate() const;

  bool operator==(const SFIndex&) const = default;
};

/// Highest weight p*l1 + q*l2 of the G-representation and the U(2) branching
/// labels k1 >= k2 of the K-type inside it.
struct RestrictionParams {
  int p = 0;
  int q = 0;
  int k1 = 0;
  int k2 = 0;

  bool admissible() const { return p + q >= k1 && k1 >= q && q >= k2 && k2 >= 0; }
  void validate() const;

  bool operator==(const RestrictionParams&) const = default;
};

struct EigenPair {
  Rational lambda;
  Rational mu;
  bool operator==(const EigenPair&) const = default;
};

/// The derived action of the K-type pi_{n,ell} in the basis v_0..v_ell.
struct ReprAction {
  int n = 0;
  int ell = 0;
  RatMatrix h_alpha;
  RatMatrix x_alpha;
  RatMatrix x_minus_alpha;
  Rational z_scalar;

  std::size_t dim() const { return static_cast<std::size_t>(ell) + 1; }
  RatMatrix z() const;
  RatMatrix j() const { return x_alpha - x_minus_alpha; }
  RatMatrix t() const { return x_alpha + x_minus_alpha; }
  /// H_beta = (Z - H_alpha)/2.
  RatMatrix h_beta() const;
  /// H_gamma = (Z + H_alpha)/2; acts on v_i by n + ell - i.
  RatMatrix h_gamma() const;
  /// H~1 = Z/2 + 3/2 H_alpha; acts on v_i by n + 2 ell - 3i.
  RatMatrix h_tilde_1() const;
  /// H~2 = Z/2 - 3/2 H_alpha; acts on v_i by n - ell + 3i.
  RatMatrix h_tilde_2() const;

  /// (i+1)(ell-i): the coupling of v_i to v_{i+1}, read off x_alpha x_{-alpha}.
  Rational up_coupling(int i) const;
  /// i(ell-i+1): the coupling of v_i to v_{i-1}.
  Rational down_coupling(int i) const;
};

ReprAction make_repr_action(int n, int ell);

RestrictionParams index_to_restriction(const SFIndex& idx);
SFIndex restriction_to_index(const RestrictionParams& rp);

struct CasimirPair {
  Rational lambda_tilde;
  Rational mu_tilde;
  bool operator==(const CasimirPair&) const = default;
};

/// Eigenvalues of Delta_2, Delta_3 on the G-representation with highest weight
/// p*l1 + q*l2.
CasimirPair casimir_eigenvalues(int p, int q);

/// Scaled (t-variable) eigenvalues for an admissible index.
EigenPair eigen_from_index(const SFIndex& idx);
/// Same formulas without the admissibility check; w may be any integer.
EigenPair eigen_from_raw(int n, int ell, int w, int k);

/// mu_k(lambda) = lambda (n - ell + 3k) - 3k (ell - k + 1)(n + k + 1).
Rational mu_of_lambda(int n, int ell, int k, const Rational& lambda);
/// lambda(w, k) = -w (w + n + ell + k + 2) - k (n + k + 1).
Rational lambda_of(int n, int ell, int w, int k);

/// The spectral parameter is invariant under w -> -(w + n + ell + k + 2).
int reflected_w(int n, int ell, int w, int k);
/// Representative on the upper side of the reflection's fixed point.
int canonical_w(int n, int ell, int w, int k);

struct KCasimirScalars {
  Rational d2k;
  Rational d3k;
};

/// pi(Delta_2K), pi(Delta_3K); throws ConsistencyError if the per-basis values
/// disagree.
KCasimirScalars kcasimir_scalars(int n, int ell);

/// Scaled -> radial (r-variable) eigenvalues.
EigenPair to_radial(const EigenPair& scaled);
/// Scaled (lambda, mu) -> group Casimir eigenvalues for K-type (n, ell).
CasimirPair to_casimir(const EigenPair& scaled, int n, int ell);

}  // namespace su3sf
