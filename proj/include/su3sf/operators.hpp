// The operators D and E in the variable t = (1 + r^2)^{-1}:
//
//   D H = t(1-t) H'' + (A0 - t A1) H' + (B0 - t B1) H / (1-t)
//   E H = t(1-t) M H'' + (C0 - t C1) H' + (D0 + t D1) H / (1-t)
//
// their three-term coefficient recursions, and the radial systems in r that
// they come from. All indices are 0-based, i = 0..ell.

#pragma once

#include <map>
#include <vector>

#include "su3sf/algebra.hpp"
#include "su3sf/repr_core.hpp"
#include "su3sf/vector_series.hpp"

namespace su3sf {

struct CoefficientMatrices {
  int n = 0;
  int ell = 0;
  RatMatrix a0, a1, b0, b1, m, c0, c1, d0, d1;
};

CoefficientMatrices build_coefficient_matrices(int n, int ell);

/// Solves the D-recursion at index j for H_{j+1}:
///   (j+1)(j+A0) H_{j+1} = [2j(j-1) + j(A0+A1) - B0 + lambda] H_j
///                        - [(j-1)(j-2) + (j-1)A1 - B1 + lambda] H_{j-1}.
/// Throws SingularStep naming the component where j + n + ell - i + 1 = 0.
RatVector recursion_step_D(const CoefficientMatrices& cm, const Rational& lambda, long j,
                           const RatVector& h_prev, const RatVector& h_cur);

/// Left-hand side of the D-recursion at index j (zero iff it holds).
RatVector defect_D(const CoefficientMatrices& cm, const Rational& lambda, const VectorSeries& s, long j);
/// Left-hand side of the E-recursion at index j:
///   [(j-1)(j-2)M + (j-1)C1 + D1 + mu] H_{j-1} + (j+1)(jM + C0) H_{j+1}
///   - [2j(j-1)M + j(C0+C1) - D0 + mu] H_j.
RatVector defect_E(const CoefficientMatrices& cm, const Rational& mu, const VectorSeries& s, long j);

/// max over 0 <= j <= j_max of the largest |entry| of the defect.
Rational residual_D(const CoefficientMatrices& cm, const Rational& lambda, const VectorSeries& s, long j_max);
Rational residual_E(const CoefficientMatrices& cm, const Rational& mu, const VectorSeries& s, long j_max);

// ------------------------------------------------------------------ radial

/// (1 + r^2)^alpha * sum_m coeffs[m] r^{2m}; even in r.
struct RadialPoly {
  int alpha = 0;
  RatVector coeffs;
};

/// (1 + r^2)^alpha * sum_e terms[e] r^e with e possibly negative. Closed
/// under differentiation in r, sums, and the coefficient functions of the
/// radial systems, so identities among them are decided exactly.
class RadialFunction {
 public:
  RadialFunction() = default;
  RadialFunction(int alpha, std::map<int, Rational> terms);
  static RadialFunction from(const RadialPoly& p);

  int alpha() const { return alpha_; }
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RadialFunction derivative() const;
  /// Multiplies by c * r^e * (1+r^2)^k.
  RadialFunction times(const Rational& c, int r_power, int u_power) const;
  /// Rewrites with a smaller u-exponent (expands (1+r^2)^{alpha-target}).
  RadialFunction with_alpha(int target) const;

  RadialFunction operator+(const RadialFunction& o) const;
  RadialFunction operator-(const RadialFunction& o) const;
  RadialFunction operator*(const Rational& s) const;
  bool equals(const RadialFunction& o) const { return (*this - o).is_zero(); }

  Rational eval(const Rational& r) const;
  double eval(double r) const;

 private:
  void trim();
  int alpha_ = 0;
  std::map<int, Rational> terms_;
};

/// The components h_i(r) of H(t) at t = (1 + r^2)^{-1}, for a terminating
/// series.
std::vector<RadialPoly> radial_components(const VectorSeries& s);

/// Left-hand side of the D-system in r for every component i.
std::vector<RadialFunction> radial_apply_D(const ReprAction& ra, const std::vector<RadialFunction>& h);
std::vector<RadialFunction> radial_apply_D(const ReprAction& ra, const std::vector<RadialPoly>& h);
/// Left-hand side of the E-system in r for every component i.
std::vector<RadialFunction> radial_apply_E(const ReprAction& ra, const std::vector<RadialFunction>& h);
std::vector<RadialFunction> radial_apply_E(const ReprAction& ra, const std::vector<RadialPoly>& h);

/// True when out[i] == eigenvalue * h[i] for every i.
bool is_radial_eigenfunction(const std::vector<RadialFunction>& out, const std::vector<RadialPoly>& h,
                             const Rational& eigenvalue);

}  // namespace su3sf
