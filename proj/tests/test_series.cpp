#include <doctest.h>

#include "su3sf/eigen.hpp"
#include "su3sf/errors.hpp"
#include "su3sf/operators.hpp"
#include "su3sf/series.hpp"

using namespace su3sf;

namespace {

// Direct term summation of sum_j (a)_j (b)_j / (j! (c)_j) t^j, no recursion.
RatVector gauss_terms(long a, long b, long c, std::size_t N) {
  RatVector out;
  for (std::size_t j = 0; j <= N; ++j) {
    Rational num = 1, den = 1;
    for (std::size_t m = 0; m < j; ++m) {
      num *= Rational(a + static_cast<long>(m)) * Rational(b + static_cast<long>(m));
      den *= Rational(static_cast<long>(m) + 1) * Rational(c + static_cast<long>(m));
    }
    out.push_back(num / den);
  }
  return out;
}

bool proportional(const RatVector& x, const RatVector& y) {
  if (x.size() != y.size()) return false;
  Rational ratio;
  bool have = false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0 && y[j] == 0) continue;
    if (x[j] == 0 || y[j] == 0) return false;
    if (have && x[j] / y[j] != ratio) return false;
    ratio = x[j] / y[j];
    have = true;
  }
  return have;
}

RatVector column(const VectorSeries& s, int i) {
  RatVector out;
  for (std::size_t j = 0; j <= s.truncation(); ++j) out.push_back(s[j][static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

TEST_CASE("series_solution examples") {
  const VectorSeries s = series_solution({0, 0, 1, 0}, 5);
  CHECK(column(s, 0) == RatVector{1, -3, 0, 0, 0, 0});
  CHECK(column(s, 0) == gauss_terms(-1, 3, 1, 5));

  const VectorSeries c = series_solution({0, 1, 0, 0}, 5);
  CHECK(c[0] == RatVector{1, 1});
  for (std::size_t j = 1; j <= 5; ++j) CHECK(is_zero(c[j]));

  const SFIndex idx{0, 1, 1, 1};
  const VectorSeries h = series_solution(idx, 8);
  CHECK(proportional(column(h, 0), gauss_terms(-1, 5, 2, 8)));
  CHECK(closed_form_case(idx) == "a.1");
  const VectorSeries cf = closed_form_series(idx, 8);
  for (int i = 0; i <= 1; ++i) CHECK(proportional(column(h, i), column(cf, i)));
}

TEST_CASE("ell = 0 spherical functions are Gauss functions") {
  for (int n = 0; n <= 3; ++n)
    for (int w = 0; w <= 5; ++w) {
      const VectorSeries s = series_solution({n, 0, w, 0}, 10);
      CHECK(proportional(column(s, 0), gauss_terms(-w, w + n + 2, n + 1, 10)));
    }
}

TEST_CASE("joint nullspace examples") {
  const VectorSeries t = joint_nullspace_solution(-1, 0, -2, 2, 6);
  CHECK(column(t, 0) == RatVector{0, 1, 0, 0, 0, 0, 0});

  const VectorSeries c1 = joint_nullspace_solution(-1, 2, -1, -6, 10);
  for (std::size_t j = 1; j <= 10; ++j) CHECK(c1[j][2] == c1[j - 1][0]);
  CHECK(c1[0][2] == 0);

  const VectorSeries b0 = joint_nullspace_solution(-2, 1, -6, 18, 12);
  CHECK(b0.leading_order() == 1);
  CHECK(b0[1][1] == 0);
  CHECK(b0[1][0] != 0);
  CHECK(structural_zero_violations(b0, -2).empty());

  CHECK_THROWS_AS(joint_nullspace_solution(-1, 0, -2, 5, 6), NullspaceDimension);
}

TEST_CASE("joint solutions satisfy both recursions") {
  for (int n = -3; n <= 2; ++n)
    for (int ell = 0; ell <= 3; ++ell)
      for (int w = 0; w <= 3; ++w)
        for (int k = 0; k <= ell; ++k) {
          const SFIndex idx{n, ell, w, k};
          if (!idx.admissible()) continue;
          const VectorSeries s = series_solution(idx);
          const CoefficientMatrices cm = build_coefficient_matrices(n, ell);
          const EigenPair ep = eigen_from_index(idx);
          const long top = static_cast<long>(s.truncation()) - 1;
          for (long j = 0; j <= top; ++j) {
            CHECK(is_zero(defect_D(cm, ep.lambda, s, j)));
            CHECK(is_zero(defect_E(cm, ep.mu, s, j)));
          }
          CHECK(s.terminates());
          CHECK(s.leading_order() == std::max(0, -n - ell));
        }
}

TEST_CASE("structural zeros for -ell < n < 0") {
  // zero pattern: H_{i,j} = 0 when j <= -n-1 and i >= n+ell+j+1
  for (int n = -3; n <= -1; ++n)
    for (int ell = -n + 1; ell <= 4; ++ell)
      for (int w = 0; w <= 3; ++w)
        for (int k = 0; k <= ell; ++k) {
          const SFIndex idx{n, ell, w, k};
          if (!idx.admissible()) continue;
          const VectorSeries s = series_solution(idx);
          for (int j = 0; j <= -n - 1; ++j)
            for (int i = n + ell + j + 1; i <= ell; ++i) CHECK(s[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == 0);
        }
  std::vector<RatVector> raw(4, RatVector{0, 0, 0});
  raw[0] = {1, 0, 5};
  const VectorSeries fake(2, raw);
  const auto bad = structural_zero_violations(fake, -1);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == std::pair<int, long>{2, 0});
}

TEST_CASE("hypergeometric coefficients") {
  const HypergeometricSpec g = HypergeometricSpec::gauss(1, 0, -1, 3, 1);
  CHECK(hypergeometric_coeffs(g, 3) == RatVector{1, -3, 0, 0});
  CHECK(g.terminating());
  CHECK(g.termination_length() == 2);

  const HypergeometricSpec p = HypergeometricSpec::gauss(Rational(5, 2), 0, Rational(1, 3), 4, Rational(7, 2));
  CHECK(hypergeometric_coeffs(p, 0) == RatVector{Rational(5, 2)});

  const HypergeometricSpec off = HypergeometricSpec::gauss(2, 2, -1, 1, 1);
  CHECK(hypergeometric_coeffs(off, 4) == RatVector{0, 0, 2, -2, 0});

  CHECK_THROWS_AS(hypergeometric_coeffs(HypergeometricSpec::gauss(1, 0, 1, 1, -1), 4), ConstraintViolation);
}

TEST_CASE("one shifted pair telescopes") {
  const int n = 1, w = 2;
  const Rational s3 = Rational(-w * (w + n + 4) - (n + 1)) / 2;
  HypergeometricSpec h = HypergeometricSpec::gauss(1, 0, -w, w + n + 4, n + 2);
  h.shift(s3);
  REQUIRE(h.d() == RatVector{1 / s3});
  CHECK(h.p() == 1);
  const RatVector c = hypergeometric_coeffs(h, 6);
  for (long j = 0; j + 1 < static_cast<long>(c.size()); ++j) {
    if (c[static_cast<std::size_t>(j)] == 0) break;
    // (a+j)(b+j)/((1+j)(c+j)) * (s3+j+1)/(s3+j)
    const Rational expect = Rational(-w + j) * Rational(w + n + 4 + j) / (Rational(1 + j) * Rational(n + 2 + j)) *
                            (s3 + j + 1) / (s3 + j);
    CHECK(c[static_cast<std::size_t>(j + 1)] / c[static_cast<std::size_t>(j)] == expect);
    const auto r = hypergeometric_term_ratio(h, j);
    REQUIRE(r);
    CHECK(*r == expect);
  }
}

TEST_CASE("closed form data") {
  for (int n = 0; n <= 3; ++n)
    for (int w = 0; w <= 3; ++w) {
      const auto spec = closed_form({n, 0, w, 0});
      REQUIRE(spec.size() == 1);
      CHECK(spec[0].a == -w);
      CHECK(spec[0].b == w + n + 2);
      CHECK(spec[0].c == n + 1);
      CHECK(spec[0].p() == 0);
    }
  for (int w = 0; w <= 4; ++w) {
    const SFIndex idx{-1, 2, w, 2};
    CHECK(closed_form_case(idx) == "c.2");
    const auto spec = closed_form(idx);
    REQUIRE(spec.size() == 3);
    CHECK(spec[2].prefactor == Rational(-(w + 1) * (w + 4)) / 2);
    CHECK(spec[2].power_offset == 1);
    CHECK(spec[2].p() == 2);
    CHECK(1 / spec[2].multiplier.coeff(2) == Rational((w + 1) * (w + 1) * (w + 4) * (w + 4)) / 2);
  }
  CHECK_THROWS_AS(closed_form({0, 3, 0, 0}), ConstraintViolation);
}

TEST_CASE("closed forms match the solver up to one scalar") {
  for (int n = -5; n <= 4; ++n)
    for (int ell = 0; ell <= 2; ++ell)
      for (int w = 0; w <= 4; ++w)
        for (int k = 0; k <= ell; ++k) {
          const SFIndex idx{n, ell, w, k};
          if (!idx.admissible()) continue;
          const VectorSeries s = series_solution(idx);
          const VectorSeries cf = closed_form_series(idx, s.truncation());
          RatVector a, b;
          for (int i = 0; i <= ell; ++i) {
            const RatVector x = column(s, i), y = column(cf, i);
            a.insert(a.end(), x.begin(), x.end());
            b.insert(b.end(), y.begin(), y.end());
          }
          INFO("n=", n, " ell=", ell, " w=", w, " k=", k);
          CHECK(proportional(a, b));
        }
}

TEST_CASE("Psi closed form") {
  for (int ell = 0; ell <= 3; ++ell)
    for (const auto& h : psi_closed_form(0, ell)) {
      CHECK(h.alpha == 0);
      CHECK(h.coeffs == RatVector{1});
    }
  const auto a = psi_closed_form(-1, 0);
  REQUIRE(a.size() == 1);
  CHECK(a[0].alpha == -1);
  CHECK(a[0].coeffs == RatVector{1});
  const auto b = psi_closed_form(-1, 1);
  REQUIRE(b.size() == 2);
  CHECK(b[0].alpha == -1);
  CHECK(b[0].coeffs == RatVector{1, -1});
  CHECK(b[1].coeffs == RatVector{1});
  CHECK(psi_radial_eigenvalues(-2, 1) == EigenPair{-24, 72});
  CHECK_THROWS_AS(psi_closed_form(1, 1), ConstraintViolation);
}

TEST_CASE("evaluation and normalization") {
  const VectorSeries constant(2, {{3, 3, 3}, {0, 0, 0}, {0, 0, 0}});
  CHECK(evaluate_series(constant, Rational(5, 7)) == RatVector{3, 3, 3});
  CHECK(normalize_at_one(constant)[0] == RatVector{1, 1, 1});

  const VectorSeries lin(0, {{1}, {-3}, {0}, {0}});
  CHECK(evaluate_series(lin, Rational(1)) == RatVector{-2});
  CHECK(doctest::Approx(evaluate_series(lin, 0.25)[0]) == 0.25);
  const VectorSeries nl = normalize_at_one(lin);
  CHECK(nl[0][0] == Rational(-1, 2));
  CHECK(nl[1][0] == Rational(3, 2));

  const Rational lam = eigen_from_index({0, 1, 1, 0}).lambda;
  const VectorSeries a0 = series_solution({0, 1, 1, 0});
  const RatVector h0 = evaluate_series(a0, Rational(0));
  CHECK(h0[0] / h0[1] == 1 - lam);

  CHECK_THROWS_AS(normalize_at_one(VectorSeries(1, {{1, 2}, {0, 0}, {0, 0}})), ConsistencyError);
  CHECK_THROWS_AS(normalize_at_one(VectorSeries(0, {{1}, {-1}, {0}, {0}})), ConstraintViolation);
}

TEST_CASE("conjecture probe") {
  const VectorSeries constant(0, {{4}, {0}, {0}});
  const ProbeResult triv = conjecture_probe(constant, {0, 0, 0, 0}, 0, 4);
  CHECK(triv.fitted);
  CHECK(triv.spec.a == 0);

  for (int w = 0; w <= 3; ++w) {
    const SFIndex idx{0, 1, w, 0};
    const VectorSeries s = series_solution(idx);
    const ProbeResult r = conjecture_probe(s, idx, 0, 4);
    REQUIRE(r.fitted);
    CHECK(r.spec.a == -w);
    CHECK(r.spec.b == w + 3);
    CHECK(r.spec.c == 2);
    if (!r.underdetermined) CHECK(r.spec.d() == RatVector{1 / (eigen_from_index(idx).lambda - 1)});
  }

  const SFIndex idx{0, 3, 1, 1};
  const ProbeResult r = conjecture_probe(series_solution(idx), idx, 3, 4);
  REQUIRE(r.fitted);
  CHECK(r.spec.p() == 1);
  CHECK(r.spec.a == -2);
  CHECK(r.spec.c == 1);
  CHECK(r.predicted_a == -2);
  CHECK(r.predicted_c == 1);
}

TEST_CASE("probe keeps data at an integer zero of P") {
  const SFIndex idx{0, 3, 0, 2};
  const VectorSeries s = series_solution(idx);
  REQUIRE(s[1][2] == 0);
  REQUIRE(s[2][2] != 0);
  const ProbeResult r = conjecture_probe(s, idx, 2, 4);
  REQUIRE(r.fitted);
  CHECK(r.spec.multiplier(Rational(1)) == 0);
  CHECK(hypergeometric_coeffs(r.spec, s.truncation())[2] == s[2][2]);
}
