#include <doctest.h>

#include "su3sf/eigen.hpp"
#include "su3sf/errors.hpp"
#include "su3sf/operators.hpp"

using namespace su3sf;

namespace {

// D0 - C0 A0^{-1} (B0 - lambda), written out from the coefficient matrices.
RatMatrix product_form(int n, int ell, const Rational& lambda) {
  const CoefficientMatrices cm = build_coefficient_matrices(n, ell);
  const auto a0inv = inverse(cm.a0);
  REQUIRE(a0inv);
  const RatMatrix shift = cm.b0 - RatMatrix::identity(cm.b0.rows()) * lambda;
  return cm.d0 - cm.c0 * (*a0inv * shift);
}

}  // namespace

TEST_CASE("L examples") {
  const Rational lam(5, 7);
  CHECK(build_L(0, 0, lam).entries == RatMatrix{{0}});
  CHECK(build_L(1, 0, lam).entries == RatMatrix{{lam}});
  const RatMatrix l = build_L(0, 1, lam).entries;
  CHECK(l == RatMatrix{{-3 - lam, 3 - 3 * lam}, {3, 2 * lam - 3}});
  CHECK(l.trace() == lam - 6);
  CHECK(determinant(l) == -2 * lam * lam + 6 * lam);
  CHECK_THROWS_AS(build_L(-1, 1, lam), ConstraintViolation);
}

TEST_CASE("L equals its product form and its band formulas") {
  for (int n = 0; n <= 3; ++n)
    for (int ell = 0; ell <= 5; ++ell)
      for (const Rational lam : {Rational(-7), Rational(2, 9), Rational(13, 4)}) {
        const RatMatrix l = build_L(n, ell, lam).entries;
        CHECK(l == product_form(n, ell, lam));
        CHECK(l == l_from_bands(n, ell, lam));
        CHECK(l.lower_bandwidth() <= 1);
        CHECK(l.upper_bandwidth() <= 2);
      }
}

TEST_CASE("mu spectrum") {
  const Rational lam(3, 2);
  CHECK(mu_spectrum(0, 1, lam) == RatVector{-lam, 2 * lam - 6});
  CHECK(mu_spectrum(0, 0, lam) == RatVector{0});
  const RatMatrix l = build_L(2, 3, -5).entries;
  for (const auto& mu : mu_spectrum(2, 3, -5))
    CHECK(determinant(l - RatMatrix::identity(4) * mu) == 0);
}

TEST_CASE("L eigenvectors") {
  const Rational lam(-11, 3);
  CHECK(l_eigenvector(0, 1, lam, 0) == RatVector{1 - lam, 1});
  CHECK(l_eigenvector(0, 1, lam, 1) == RatVector{-1, 1});
  for (int k = 0; k <= 2; ++k) {
    const RatVector v = l_eigenvector(1, 2, lam, k);
    CHECK(build_L(1, 2, lam).entries * v == scaled(v, mu_of_lambda(1, 2, k, lam)));
  }
}

TEST_CASE("degenerate lambdas") {
  for (int n = 0; n <= 2; ++n)
    for (int ell = 1; ell <= 3; ++ell)
      for (const auto& lam : degenerate_lambdas(n, ell)) {
        CHECK(is_degenerate(n, ell, lam));
        const RatVector mus = mu_spectrum(n, ell, lam);
        bool repeat = false;
        for (std::size_t a = 0; a < mus.size(); ++a)
          for (std::size_t b = a + 1; b < mus.size(); ++b) repeat = repeat || mus[a] == mus[b];
        CHECK(repeat);
      }
  CHECK_FALSE(is_degenerate(0, 1, Rational(1, 1000)));
}
