#include "su3sf/errors.hpp"
#include "su3sf/series.hpp"

namespace su3sf {

namespace {

using HS = HypergeometricSpec;

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// A shifted pair whose product may vanish at isolated w. There the normalized
// prefactor vanishes too, and `cancelled` = prefactor / (s1 s2) is used with
// the unnormalized multiplier (s1 + j)(s2 + j).
HS pair_or_cancelled(HS spec, const Rational& sum, const Rational& product, const Rational& cancelled) {
  if (product != 0) {
    spec.shift_pair(sum, product);
    return spec;
  }
  spec.prefactor = cancelled;
  spec.multiplier = Polynomial{product, sum, Rational(1)};
  return spec;
}

std::vector<HS> ell0(int n, int w) {
  if (n >= 0) return {HS::gauss(1, 0, -w, w + n + 2, n + 1)};
  return {HS::gauss(1, -n, -w - n, w + 2, 1 - n)};
}

std::vector<HS> ell1(int n, int w, int k) {
  const Rational lam = lambda_of(n, 1, w, k);
  if (n >= 0) {
    if (k == 0)
      return {HS::gauss(1 - lam / (n + 1), 0, -w, w + n + 3, n + 2).shift(lam - n - 1),
              HS::gauss(1, 0, -w, w + n + 3, n + 1)};
    return {HS::gauss(1, 0, -w, w + n + 4, n + 2), HS::gauss(-(n + 1), 0, -w - 1, w + n + 3, n + 1).shift(lam - 1)};
  }
  if (k == 0) {
    const long a = -static_cast<long>(w) * (w + n + 3) - 2L * n - 2;
    return {HS::gauss(n, -n - 1, w + 2, -w - n - 1, -n).shift(a), HS::gauss(1, -n, w + 3, -w - n, 1 - n)};
  }
  const long b = -static_cast<long>(w) * (w + n + 4) - 2L * n - 3;
  return {HS::gauss(1, -n - 1, w + 3, -w - n - 1, -n), HS::gauss(q(b, n), -n, w + 3, -w - n - 1, 1 - n).shift(b)};
}

std::vector<HS> ell2_a(int n, int w, int k) {
  const Rational lam = lambda_of(n, 2, w, k);
  const long W = w, N = n;
  if (k == 0) {
    const Rational pre0 = 1 + lam * (lam - 3 * (N + 1)) / Rational(2 * (N + 1) * (N + 2));
    const Rational s12 = q(W * (W + 3) * (W + N + 1) * (W + N + 4), 2) + (N + 1) * (N + 2);
    const Rational s1p2 = -W * (W + N + 4) - N;
    const Rational s3 = q(-W * (W + N + 4) - (N + 1), 2);
    return {HS::gauss(pre0, 0, -W, W + N + 4, N + 3).shift_pair(s1p2, s12),
            HS::gauss(1 - lam / (N + 1), 0, -W, W + N + 4, N + 2).shift(s3), HS::gauss(1, 0, -W, W + N + 4, N + 1)};
  }
  if (k == 1) {
    const Rational s4 = q(-W * (W + N + 5) - (N + 2), 2);
    const Rational s56p = q(-W * (W + N + 5) - 1, 2);
    const Rational s56 = q((W + 1) * (W + N + 4) * (W * W + N * W + 5 * W + N), 8);
    const Rational s7 = q(-(W + 1) * (W + N + 4), 2);
    return {HS::gauss(lam / ((N + 1) * (N + 2)), 0, -W, W + N + 5, N + 3).shift(s4),
            pair_or_cancelled(HS::gauss(-(lam + 2) / (2 * (N + 1)), 0, -W - 1, W + N + 4, N + 2), s56p, s56,
                              q(4, (N + 1) * (W + 1) * (W + N + 4))),
            HS::gauss(1, 0, -W - 1, W + N + 4, N + 1).shift(s7)};
  }
  const Rational s8 = q(-W * (W + N + 6) - (N + 5), 2);
  const Rational s910 = q((W + 1) * (W + 2) * (W + N + 4) * (W + N + 5), 2);
  const Rational s910p = -W * (W + N + 6) - (N + 6);
  return {HS::gauss(q(2, (N + 2) * (N + 1)), 0, -W, W + N + 6, N + 3),
          HS::gauss(q(-2, N + 1), 0, -W - 1, W + N + 5, N + 2).shift(s8),
          HS::gauss(1, 0, -W - 2, W + N + 4, N + 1).shift_pair(s910p, s910)};
}

std::vector<HS> ell2_b(int n, int w, int k) {
  const Rational lam = lambda_of(n, 2, w, k);
  const long W = w, N = n;
  if (k == 0) {
    const Rational s12 = q((W + 2) * (W + 3) * (W + N + 1) * (W + N + 2), 2);
    const Rational s1p2 = -W * (W + N + 4) - 3 * N - 4;
    const Rational s3 = q(-W * (W + N + 4) - 3 * (N + 1), 2);
    return {HS::gauss(1, -n - 2, W + 2, -W - N - 2, -N - 1).shift_pair(s1p2, s12),
            HS::gauss(q(2, N + 1), -n - 1, W + 3, -W - N - 1, -N).shift(s3),
            HS::gauss(q(2, N * (N + 1)), -n, W + 4, -W - N, 1 - N)};
  }
  if (k == 1) {
    const Rational s23 = q((W + 3) * (W + N + 2) * (W * W + N * W + 5 * W + 3 * N + 2), 8);
    const Rational s2p3 = q(-W * (W + N + 5) - (4 * N + 5), 2);
    const Rational s1 = q(-W * (W + N + 5) - (3 * N + 6), 2);
    const Rational s4 = q(-W * (W + N + 5) - (3 * N + 4), 2);
    return {HS::gauss(1, -n - 2, W + 3, -W - N - 2, -N - 1).shift(s1),
            pair_or_cancelled(HS::gauss((lam - 2 * N) / (2 * (N + 1)), -n - 1, W + 3, -W - N - 2, -N), s2p3, s23,
                              q(-4, (N + 1) * (W + 3) * (W + N + 2))),
            HS::gauss(lam / (N * (N + 1)) - q(2, N), -n, W + 4, -W - N - 1, 1 - N).shift(s4)};
  }
  const long y = W * (W + N + 6);
  const Rational s1 = q(-y - (3 * N + 7), 2);
  const Rational s23 = q(y * (y + 5 * N + 13), 2) + (3 * N * N + 15 * N + 20);
  const Rational s2p3 = -y - (3 * N + 6);
  const Rational pre2 = (lam - 2) * (lam + 1) / (2 * N * (N + 1)) - (lam + 2) / (2 * (N + 1));
  return {HS::gauss(1, -n - 2, W + 4, -W - N - 2, -N - 1),
          HS::gauss(lam / (N + 1) - 1, -n - 1, W + 4, -W - N - 2, -N).shift(s1),
          HS::gauss(pre2, -n, W + 4, -W - N - 2, 1 - N).shift_pair(s2p3, s23)};
}

std::vector<HS> ell2_c(int w, int k) {
  const long W = w;
  if (k == 0) {
    const Rational s12 = q(W * W * (W + 3) * (W + 3), 2);
    const Rational s1p2 = -W * W - 3 * W + 1;
    const Rational s3 = q(-W * (W + 3), 2);
    return {HS::gauss(1, 0, -W, W + 3, 2).shift_pair(s1p2, s12),
            HS::gauss(q(2, W * (W + 3)), 0, -W, W + 3, 1).shift(s3),
            HS::gauss(q(-2, W * (W + 3)), 1, 1 - W, W + 4, 2)};
  }
  if (k == 1) {
    const Rational s1 = q(-(W * W + 4 * W + 1), 2);
    const Rational s23 = q((W + 1) * (W + 3) * (W * W + 4 * W - 1), 8);
    const Rational s2p3 = q(-(W * W + 4 * W + 1), 2);
    return {HS::gauss(1, 0, -W, W + 4, 2).shift(s1),
            HS::gauss(q(-(W * W + 4 * W - 1), 2 * (W * W + 4 * W + 1)), 0, -W - 1, W + 3, 1).shift_pair(s2p3, s23),
            HS::gauss(1, 1, -W, W + 4, 2).shift(s1)};
  }
  const Rational s1 = q(-(W + 1) * (W + 4), 2);
  const Rational s23 = q((W + 1) * (W + 1) * (W + 4) * (W + 4), 2);
  const Rational s2p3 = -(W * W + 5 * W + 3);
  return {HS::gauss(1, 0, -W, W + 5, 2), HS::gauss(-1, 0, -W - 1, W + 4, 1).shift(s1),
          HS::gauss(q(-(W + 1) * (W + 4), 2), 1, -W - 1, W + 4, 2).shift_pair(s2p3, s23)};
}

}  // namespace

std::string closed_form_case(const SFIndex& idx) {
  idx.validate();
  if (idx.ell > 2) throw ConstraintViolation("closed forms are available for ell <= 2 only");
  const char regime = idx.n >= 0 ? 'a' : (idx.ell == 2 && idx.n == -1 ? 'c' : 'b');
  return std::string(1, regime) + "." + std::to_string(idx.k);
}

std::vector<HypergeometricSpec> closed_form(const SFIndex& idx) {
  idx.validate();
  switch (idx.ell) {
    case 0: return ell0(idx.n, idx.w);
    case 1: return ell1(idx.n, idx.w, idx.k);
    case 2:
      if (idx.n >= 0) return ell2_a(idx.n, idx.w, idx.k);
      if (idx.n == -1) return ell2_c(idx.w, idx.k);
      return ell2_b(idx.n, idx.w, idx.k);
    default: throw ConstraintViolation("closed forms are available for ell <= 2 only");
  }
}

VectorSeries closed_form_series(const SFIndex& idx, std::size_t N) {
  const auto specs = closed_form(idx);
  std::vector<RatVector> coeffs(N + 1, RatVector(specs.size()));
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const RatVector c = hypergeometric_coeffs(specs[i], N);
    for (std::size_t j = 0; j <= N; ++j) coeffs[j][i] = c[j];
  }
  return VectorSeries(idx.ell, std::move(coeffs));
}

}  // namespace su3sf
