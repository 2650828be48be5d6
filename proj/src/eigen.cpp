#include "su3sf/eigen.hpp"

#include <algorithm>

#include "su3sf/errors.hpp"
#include "su3sf/operators.hpp"
#include "su3sf/repr_core.hpp"

namespace su3sf {

namespace {

void require_nonnegative_n(int n, int ell) {
  if (n < 0) throw ConstraintViolation("L(lambda) is only defined for n >= 0 (got n=" + std::to_string(n) + ")");
  if (ell < 0) throw ConstraintViolation("ell must be nonnegative");
}

}  // namespace

LMatrix build_L(int n, int ell, const Rational& lambda) {
  require_nonnegative_n(n, ell);
  const CoefficientMatrices cm = build_coefficient_matrices(n, ell);
  const auto a0_inv = inverse(cm.a0);
  if (!a0_inv) throw ConsistencyError("A0 singular for n >= 0");
  const RatMatrix id = RatMatrix::identity(cm.a0.rows());
  LMatrix l;
  l.n = n;
  l.ell = ell;
  l.lambda = lambda;
  l.entries = cm.d0 - cm.c0 * *a0_inv * (cm.b0 - id * lambda);
  return l;
}

LBands l_bands(int n, int ell, const Rational& lambda) {
  require_nonnegative_n(n, ell);
  const auto d = static_cast<std::size_t>(ell) + 1;
  LBands b;
  b.sub.assign(d, Rational(0));
  b.diag.assign(d, Rational(0));
  b.super1.assign(d, Rational(0));
  b.super2.assign(d, Rational(0));
  for (long i = 0; i <= ell; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (i >= 1) b.sub[ui] = Rational(3 * i * (ell - i + 1) * (n + ell - i + 1));
    b.diag[ui] = lambda * (n - ell + 3 * i) - Rational(3 * (i + 1) * (ell - i) * (ell - 2 * i)) -
                 Rational(3 * i * (ell - i + 1) * (n + ell - i + 1));
    if (i <= ell - 1) {
      // n + ell - i >= 1 here since n >= 0.
      const Rational inner =
          Rational(ell - 2 * i) - (Rational((i + 2) * (ell - i - 1)) + lambda) / Rational(n + ell - i);
      b.super1[ui] = Rational(3 * (i + 1) * (ell - i)) * inner;
    }
    if (i <= ell - 2)
      b.super2[ui] = Rational(3 * (i + 1) * (i + 2) * (ell - i - 1) * (ell - i)) / Rational(n + ell - i);
  }
  return b;
}

RatMatrix l_from_bands(int n, int ell, const Rational& lambda) {
  const LBands b = l_bands(n, ell, lambda);
  const auto d = static_cast<std::size_t>(ell) + 1;
  RatMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = b.diag[i];
    if (i >= 1) m(i, i - 1) = b.sub[i];
    if (i + 1 < d) m(i, i + 1) = b.super1[i];
    if (i + 2 < d) m(i, i + 2) = b.super2[i];
  }
  return m;
}

RatVector mu_spectrum(int n, int ell, const Rational& lambda) {
  if (ell < 0) throw ConstraintViolation("ell must be nonnegative");
  RatVector mus;
  for (int k = 0; k <= ell; ++k) mus.push_back(mu_of_lambda(n, ell, k, lambda));
  return mus;
}

RatVector degenerate_lambdas(int n, int ell) {
  // mu_k - mu_k' = 3 (k - k') lambda - 3 [k(ell-k+1)(n+k+1) - k'(ell-k'+1)(n+k'+1)].
  RatVector out;
  for (int k = 0; k <= ell; ++k)
    for (int kp = k + 1; kp <= ell; ++kp) {
      const Rational ck = Rational(static_cast<long>(k) * (ell - k + 1) * (n + k + 1));
      const Rational ckp = Rational(static_cast<long>(kp) * (ell - kp + 1) * (n + kp + 1));
      const Rational lam = (ck - ckp) / Rational(k - kp);
      if (std::find(out.begin(), out.end(), lam) == out.end()) out.push_back(lam);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_degenerate(int n, int ell, const Rational& lambda) {
  const RatVector d = degenerate_lambdas(n, ell);
  return std::find(d.begin(), d.end(), lambda) != d.end();
}

RatVector l_eigenvector(int n, int ell, const Rational& lambda, int k) {
  require_nonnegative_n(n, ell);
  if (k < 0 || k > ell) throw ConstraintViolation("branch k must satisfy 0 <= k <= ell");
  const Rational mu = mu_of_lambda(n, ell, k, lambda);
  const LBands b = l_bands(n, ell, lambda);
  const auto d = static_cast<std::size_t>(ell) + 1;

  // Row i reads sub_i x_{i-1} + (diag_i - mu) x_i + super1_i x_{i+1} + super2_i x_{i+2} = 0.
  // For n >= 0 every sub_i (i >= 1) is nonzero, so rows ell..1 fix x_{ell-1}..x_0
  // from x_ell = 1 and row 0 is the consistency condition.
  RatVector x(d + 2, Rational(0));
  x[d - 1] = 1;
  for (std::size_t i = d - 1; i >= 1; --i) {
    const Rational rest = (b.diag[i] - mu) * x[i] + b.super1[i] * x[i + 1] + b.super2[i] * x[i + 2];
    x[i - 1] = -rest / b.sub[i];
  }
  const Rational row0 = (b.diag[0] - mu) * x[0] + b.super1[0] * x[1] + b.super2[0] * x[2];
  if (row0 != 0) {
    throw SpectralDegeneracy("back-substitution inconsistent for n=" + std::to_string(n) + ", ell=" +
                             std::to_string(ell) + ", lambda=" + to_string(lambda) + ", k=" + std::to_string(k) +
                             (is_degenerate(n, ell, lambda) ? " (lambda is degenerate)" : ""));
  }
  x.resize(d);
  return x;
}

}  // namespace su3sf
