#include <doctest.h>

#include <cmath>

#include "su3sf/analysis.hpp"
#include "su3sf/errors.hpp"
#include "su3sf/series.hpp"

using namespace su3sf;

namespace {

// int_0^1 p(t) (1 - t) t^m dt for a polynomial p, by exact antiderivative at 1.
Rational weighted_integral(const Polynomial& p, long m) {
  const Polynomial w = p * Polynomial{1, -1};
  Rational total = 0;
  for (std::size_t e = 0; e < w.coeffs().size(); ++e) total += w.coeffs()[e] / Rational(static_cast<long>(e) + m + 1);
  return total;
}

}  // namespace

TEST_CASE("inner product examples") {
  const VectorSeries f(0, {{1}, {-3}, {0}, {0}});
  const VectorSeries one(0, {{1}, {0}, {0}});
  CHECK(inner_product(f, one, 0, 0) == 0);
  CHECK(inner_product(one, one, 0, 0) == Rational(1, 2));
  CHECK(inner_product(f, f, 0, 0) == Rational(1, 4));
  CHECK(inner_product(f, one, 0, 0) == weighted_integral(Polynomial{1, -3}, 0));
  CHECK(doctest::Approx(inner_product_approx(f, f, 0, 0)) == 0.25);
}

TEST_CASE("inner product is a sum of weighted component integrals") {
  const SFIndex a{1, 2, 1, 0}, b{1, 2, 2, 1};
  const VectorSeries sa = series_solution(a), sb = series_solution(b);
  Rational direct = 0;
  for (int i = 0; i <= 2; ++i) direct += weighted_integral(sa.component(i) * sb.component(i), 1 + 2 - i);
  CHECK(inner_product(sa, sb, 1, 2) == direct);
  CHECK(direct == 0);
  CHECK(inner_product(sa, sa, 1, 2) > 0);
}

TEST_CASE("negative weight exponent is rejected") {
  const VectorSeries s(1, {{1, 1}, {0, 0}, {0, 0}});
  CHECK_THROWS_AS(inner_product(s, s, -2, 1), ConstraintViolation);
}

TEST_CASE("r-form and t-form weights agree") {
  // with t = 1/(1+r^2): r^3 (1+r^2)^{-(e+3)} dr = t^e (1-t) dt / 2
  for (long e = 0; e <= 3; ++e)
    for (long m = 0; m <= 3; ++m) {
      const double exact = 1.0 / static_cast<double>((e + m + 1) * (e + m + 2));
      CHECK(r_form_monomial_approx(e, m) == doctest::Approx(exact / 2).epsilon(1e-9));
    }
}

TEST_CASE("Gram matrices") {
  const GramReport g = gram_matrix(0, 0, 3);
  CHECK(g.indices.size() == 4);
  CHECK(g.gram.rows() == 4);
  CHECK(g.orthogonal);
  CHECK(g.positive);
  CHECK(g.max_offdiag == 0);
  for (std::size_t a = 0; a < 4; ++a) {
    const VectorSeries sa = normalize_at_one(series_solution(g.indices[a]));
    CHECK(g.gram(a, a) == weighted_integral(sa.component(0) * sa.component(0), 0));
  }
  CHECK(g.gram(1, 1) == Rational(1, 16));

  const GramReport single = gram_matrix(0, 0, 0);
  CHECK(single.gram.rows() == 1);
  CHECK(single.positive);

  for (const auto& [n, ell] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {-1, 2}}) {
    const GramReport r = gram_matrix(n, ell, 4);
    CHECK(r.orthogonal);
    CHECK(r.positive);
    CHECK(r.max_offdiag == 0);
  }
}

TEST_CASE("boundary condition") {
  for (int n = -2; n <= 2; ++n)
    for (int ell = 0; ell <= 3; ++ell)
      for (int k = 0; k <= ell; ++k) {
        const SFIndex idx{n, ell, 2, k};
        if (!idx.admissible()) continue;
        CHECK(boundary_check(series_solution(idx), n, ell).pass);
      }
  for (int n = 1; n <= 3; ++n) {
    const VectorSeries s = series_solution({n, 0, 1, 0});
    const BoundaryReport r = boundary_check(s, n, 0, -n);
    CHECK_FALSE(r.pass);
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].order == -n);
  }
  const BoundaryReport z = boundary_check(VectorSeries::zero(2, 3), 0, 2);
  CHECK(z.pass);
  CHECK_FALSE(z.components[0].order.has_value());
}
