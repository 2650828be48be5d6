// Joint (D, E) eigenfunctions as exact truncated power series, the
// shifted-parameter hypergeometric closed forms for ell <= 2, the Psi_{n,ell}
// family, and a fitter for the conjectured hypergeometric shape at larger ell.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "su3sf/algebra.hpp"
#include "su3sf/operators.hpp"
#include "su3sf/repr_core.hpp"
#include "su3sf/vector_series.hpp"

namespace su3sf {

// ------------------------------------------------------- hypergeometric data

/// prefactor * t^m * sum_j (a)_j (b)_j / (j! (c)_j) * P(j) t^j.
///
/// P(j) = prod_m (s_m + j) / prod_m s_m is a p+2 F p+1 with upper parameters
/// s_m + 1 over lower parameters s_m; it is kept as the polynomial
/// 1 + d_1 j + ... + d_p j^p so that complex s_m never have to be extracted.
/// When prod_m s_m vanishes the multiplier is stored unnormalized
/// (P(0) = 0) and the prefactor absorbs the cancelled factor.
struct HypergeometricSpec {
  Rational prefactor = 1;
  int power_offset = 0;
  Rational a, b, c;
  Polynomial multiplier = Polynomial::constant(1);

  /// Gauss 2F1 (P = 1).
  static HypergeometricSpec gauss(const Rational& prefactor, int power_offset, const Rational& a,
                                  const Rational& b, const Rational& c);
  /// Adds one shifted pair (s+1 over s): P *= (s + j)/s.
  HypergeometricSpec& shift(const Rational& s);
  /// Adds two shifted pairs given by s1 + s2 and s1 * s2.
  HypergeometricSpec& shift_pair(const Rational& sum, const Rational& product);

  /// p = deg P; the function is a p+2 F p+1.
  int p() const { return static_cast<int>(std::max<long>(multiplier.degree(), 0)); }
  /// d_1..d_p (requires P(0) = 1).
  RatVector d() const;
  bool normalized() const { return multiplier.coeff(0) == 1; }
  /// a or b is a nonpositive integer.
  bool terminating() const;
  /// Number of nonzero Pochhammer terms when terminating.
  std::optional<long> termination_length() const;
};

/// Taylor coefficients of the spec at t^0..t^N. Throws ConstraintViolation
/// if (c)_j hits zero before the series terminates.
RatVector hypergeometric_coeffs(const HypergeometricSpec& spec, std::size_t N);
/// The spec's term ratio c_{j+1}/c_j as written in closed form, or nullopt
/// where it is 0/0 or undefined.
std::optional<Rational> hypergeometric_term_ratio(const HypergeometricSpec& spec, long j);

/// Closed forms for ell = 0, 1, 2 in every n-regime. Throws
/// ConstraintViolation for ell > 2 or inadmissible indices.
std::vector<HypergeometricSpec> closed_form(const SFIndex& idx);
/// Which closed-form case a given index falls in, e.g. "a.1" or "c.2".
std::string closed_form_case(const SFIndex& idx);
/// Closed form expanded to a VectorSeries through t^N.
VectorSeries closed_form_series(const SFIndex& idx, std::size_t N);

// ------------------------------------------------------------ series solvers

/// w + ell + |min(n, 0)| + 8.
std::size_t default_truncation(const SFIndex& idx);

/// The joint eigen-series for idx through t^N. For n >= 0 it starts from the
/// L(lambda) eigenvector and runs the D-recursion; for n < 0 it solves the
/// joint system as a nullspace.
VectorSeries series_solution(const SFIndex& idx, std::optional<std::size_t> N = std::nullopt);

/// The joint formal solution of D H = lambda H, E H = mu H through t^N with
/// H_j = 0 for j < max(0, -n-ell) and the forced low-order zeros in the
/// components with i > n + ell. Normalized so that the last component's
/// first nonzero coefficient is 1. Throws NullspaceDimension unless the
/// solution space is one-dimensional.
VectorSeries joint_nullspace_solution(int n, int ell, const Rational& lambda, const Rational& mu, std::size_t N);

/// D-eigenseries started from an arbitrary H_0 (n >= 0).
VectorSeries d_series_from(int n, int ell, const Rational& lambda, const RatVector& h0, std::size_t N);

/// max(0, -n-ell).
long expected_leading_order(int n, int ell);

/// Low-order zeros forced by n < 0: returns the (i, j) slots that are
/// nonzero but must vanish. Empty means the pattern holds.
std::vector<std::pair<int, long>> structural_zero_violations(const VectorSeries& s, int n);

// ------------------------------------------------------------ Psi_{n,ell}

/// Component i: (1+r^2)^n sum_{j <= min(-n, ell-i)} (-1)^j C(-n, j) C(ell-i, j) r^{2j}.
std::vector<RadialPoly> psi_closed_form(int n, int ell);
/// Eigenvalues of Psi_{n,ell} for the radial systems: 4n(ell+2), 4n(ell+2)(n-ell).
EigenPair psi_radial_eigenvalues(int n, int ell);

// ------------------------------------------------------------ evaluation

RatVector evaluate_series(const VectorSeries& s, const Rational& t);
std::vector<double> evaluate_series(const VectorSeries& s, double t);

/// Divides by the common value at t = 1 so that H(1) = (1, ..., 1). Requires a
/// terminating series. Throws ConstraintViolation on a zero value and
/// ConsistencyError when the components differ at t = 1.
VectorSeries normalize_at_one(const VectorSeries& s);

// ------------------------------------------------------------ conjecture probe

/// Result of fitting the conjectured shape
///   H_i(t) = H_i(0) * 2F1-like(a, b; c) * P(j),  deg P = ell - |i - k|
/// to one component. This is a conjecture-level computation: a failed fit is
/// a finding about the data, not an error in the library.
struct ProbeResult {
  bool fitted = false;
  /// True when the data did not pin P down uniquely (short polynomial).
  bool underdetermined = false;
  /// "anchored": a, b, c fixed to the predicted values, P solved for.
  /// "free": a, b, c and P recovered from the data without the prediction.
  std::string mode;
  HypergeometricSpec spec;
  Rational predicted_a, predicted_b, predicted_c;
  /// Set when a free fit was possible; whether it agrees with the prediction.
  std::optional<bool> free_fit_agrees;
  std::string message;
  static constexpr const char* disclaimer =
      "conjecture-level: fits an unproven hypergeometric shape; failures are findings, not errors";
};

/// Fits component i of a series for idx (n >= 0). The fit is rejected when
/// ell - |i - k| exceeds max_p.
ProbeResult conjecture_probe(const VectorSeries& s, const SFIndex& idx, int i, int max_p);

}  // namespace su3sf
