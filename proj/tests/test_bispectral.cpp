#include <doctest.h>

#include "su3sf/bispectral.hpp"
#include "su3sf/operators.hpp"
#include "su3sf/repr_core.hpp"
#include "su3sf/series.hpp"

using namespace su3sf;

namespace {

VectorSeries row_series(const PolyMatrix& phi, std::size_t k, std::size_t N) {
  std::vector<RatVector> coeffs(N + 1, RatVector(phi.cols()));
  for (std::size_t i = 0; i < phi.cols(); ++i)
    for (std::size_t e = 0; e < phi(k, i).coeffs().size(); ++e) coeffs[e][i] = phi(k, i).coeffs()[e];
  return VectorSeries(static_cast<int>(phi.cols()) - 1, coeffs);
}

}  // namespace

TEST_CASE("Phi is normalized at t = 1") {
  for (int n = 0; n <= 2; ++n)
    for (int w = 0; w <= 3; ++w) {
      const RatMatrix at1 = phi_matrix(n, 2, w).at(1);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) CHECK(at1(r, c) == 1);
    }
}

TEST_CASE("Phi rows are D and E eigenfunctions") {
  for (int n = 0; n <= 2; ++n)
    for (int w = 0; w <= 3; ++w) {
      const PolyMatrix phi = phi_matrix(n, 2, w);
      const RatVector lam = phi_lambda(n, 2, w), mu = phi_mu(n, 2, w);
      const CoefficientMatrices cm = build_coefficient_matrices(n, 2);
      for (int k = 0; k <= 2; ++k) {
        CHECK(lam[static_cast<std::size_t>(k)] == lambda_of(n, 2, w, k));
        CHECK(mu[static_cast<std::size_t>(k)] == mu_of_lambda(n, 2, k, lam[static_cast<std::size_t>(k)]));
        const VectorSeries s = row_series(phi, static_cast<std::size_t>(k), static_cast<std::size_t>(w) + 6);
        for (long j = 0; j < static_cast<long>(s.truncation()); ++j) {
          CHECK(is_zero(defect_D(cm, lam[static_cast<std::size_t>(k)], s, j)));
          CHECK(is_zero(defect_E(cm, mu[static_cast<std::size_t>(k)], s, j)));
        }
      }
      const VectorSeries row0 = normalize_at_one(closed_form_series({n, 2, w, 0}, static_cast<std::size_t>(w) + 6));
      CHECK(row_series(phi, 0, static_cast<std::size_t>(w) + 6) == row0);
    }
}

TEST_CASE("bispectral matrix entries") {
  for (int n = 0; n <= 3; ++n) CHECK(bispectral_matrices(n, 0).a.is_zero());
  CHECK(bispectral_matrices(0, 1).a(0, 0) == Rational(1, 15));
  CHECK(bispectral_matrices(0, 0).c(0, 0) == Rational(4, 15));
  for (int n = 0; n <= 3; ++n)
    for (int w = 1; w <= 4; ++w) {
      const BispectralTriple t = bispectral_matrices(n, w);
      const RatMatrix sum = t.a + t.b + t.c;
      for (std::size_t r = 0; r < 3; ++r) {
        Rational row = 0;
        for (std::size_t c = 0; c < 3; ++c) row += sum(r, c);
        CHECK(row == 1);
      }
    }
}

TEST_CASE("bispectral identity") {
  CHECK(verify_bispectral(0, 1) == 0);
  CHECK(verify_bispectral(2, 3) == 0);
  CHECK(verify_bispectral(0, 0) == 0);
  for (int n = 0; n <= 3; ++n)
    for (int w = 0; w <= 5; ++w) {
      CHECK(bispectral_defect(n, w).max_abs_coeff() == 0);
      CHECK(forward_generate(n, w) == phi_matrix(n, 2, w + 1));
    }
}

TEST_CASE("recursion matrices solved from Phi agree with the closed-form ones") {
  for (int n = 0; n <= 2; ++n)
    for (int w = 1; w <= 3; ++w) {
      const auto solved = solve_bispectral_matrices(n, 2, w);
      REQUIRE(solved);
      const BispectralTriple formula = bispectral_matrices(n, w);
      CHECK(solved->a == formula.a);
      CHECK(solved->b == formula.b);
      CHECK(solved->c == formula.c);
    }
}

TEST_CASE("PolyMatrix arithmetic") {
  PolyMatrix p(1, 2);
  p(0, 0) = Polynomial{1, 2};
  p(0, 1) = Polynomial{0, 0, 3};
  const PolyMatrix tp = p.times_t();
  CHECK(tp(0, 0) == Polynomial{0, 1, 2});
  CHECK((tp - tp).max_abs_coeff() == 0);
  CHECK(p.max_abs_coeff() == 3);
  const PolyMatrix q = RatMatrix{{2}} * p;
  CHECK(q(0, 1) == Polynomial{0, 0, 6});
  CHECK(p.at(Rational(1, 2))(0, 1) == Rational(3, 4));
}
