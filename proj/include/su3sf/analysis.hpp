// Inner products in the t-variable, Gram matrices over a family of spherical
// functions, and the boundary condition at t = 0.
//
//   <H, K> = sum_i int_0^1 H_i(t) K_i(t) (1 - t) t^{n+ell-i} dt
//
// The overall constant of the r-form is dropped; it does not affect
// orthogonality.

#pragma once

#include <vector>

#include "su3sf/algebra.hpp"
#include "su3sf/repr_core.hpp"
#include "su3sf/vector_series.hpp"

namespace su3sf {

/// Exact inner product of two terminating series. Throws ConstraintViolation
/// on a negative power of t under the integral.
Rational inner_product(const VectorSeries& a, const VectorSeries& b, int n, int ell);

/// Same integral by 30-point Gauss-Legendre quadrature, for exploratory use.
double inner_product_approx(const VectorSeries& a, const VectorSeries& b, int n, int ell);

/// int_0^inf r^3 (1 + r^2)^{-(e+3)} (1 + r^2)^{-m} dr = the r-form of
/// t^m against the weight of a component with n + ell - i = e, by quadrature.
double r_form_monomial_approx(long e, long m);

struct GramReport {
  int n = 0;
  int ell = 0;
  std::vector<SFIndex> indices;
  RatMatrix gram;
  Rational max_offdiag;
  RatVector norms;
  /// Off-diagonal entries are zero for every pair with distinct (lambda, mu).
  bool orthogonal = false;
  bool positive = false;
};

/// Gram matrix of the spherical functions (normalized at t = 1) with w <= w_max.
GramReport gram_matrix(int n, int ell, int w_max);

struct ComponentBoundary {
  int i = 0;
  /// Order of vanishing at t = 0 including the shift; nullopt for a zero component.
  std::optional<long> order;
  bool pass = true;
};

struct BoundaryReport {
  std::vector<ComponentBoundary> components;
  bool pass = true;
};

/// Condition at r -> infinity in t-language: ord_t(h_i) > -(n+ell-i)/2 for
/// i != n+ell and a finite limit for i = n+ell. `shift` multiplies the series
/// by t^shift first, for Laurent shapes such as t^{-n} F(t).
BoundaryReport boundary_check(const VectorSeries& s, int n, int ell, long shift = 0);

}  // namespace su3sf
