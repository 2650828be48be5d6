// L(lambda) = D0 - C0 A0^{-1} (B0 - lambda): the action of E on the initial
// coefficient H_0 of a D-eigenseries, for n >= 0.

#pragma once

#include <optional>

#include "su3sf/algebra.hpp"

namespace su3sf {

struct LMatrix {
  int n = 0;
  int ell = 0;
  Rational lambda;
  RatMatrix entries;
};

/// Product-form construction. Rejects n < 0 (A0 may be singular there).
LMatrix build_L(int n, int ell, const Rational& lambda);

/// The four bands of L read from their closed-form entries:
///   sub[i]    = L(i, i-1),  i = 1..ell   (sub[0] unused, zero)
///   diag[i]   = L(i, i)
///   super1[i] = L(i, i+1),  i = 0..ell-1
///   super2[i] = L(i, i+2),  i = 0..ell-2
struct LBands {
  RatVector sub, diag, super1, super2;
};
LBands l_bands(int n, int ell, const Rational& lambda);
/// Dense matrix assembled from l_bands.
RatMatrix l_from_bands(int n, int ell, const Rational& lambda);

/// mu_k(lambda) for k = 0..ell.
RatVector mu_spectrum(int n, int ell, const Rational& lambda);

/// Values of lambda at which two mu_k(lambda) coincide.
RatVector degenerate_lambdas(int n, int ell);
bool is_degenerate(int n, int ell, const Rational& lambda);

/// The mu_k(lambda)-eigenvector of L(lambda), normalized with last entry 1,
/// found by back-substitution from x_ell upwards. Throws SpectralDegeneracy
/// if the remaining equation is inconsistent.
RatVector l_eigenvector(int n, int ell, const Rational& lambda, int k);

}  // namespace su3sf
