#include <doctest.h>

#include "su3sf/errors.hpp"
#include "su3sf/repr_core.hpp"

using namespace su3sf;

TEST_CASE("repr action examples") {
  const ReprAction triv = make_repr_action(0, 0);
  CHECK(triv.dim() == 1);
  CHECK(triv.h_alpha.is_zero());
  CHECK(triv.x_alpha.is_zero());
  CHECK(triv.z_scalar == 0);

  const ReprAction r = make_repr_action(0, 1);
  CHECK(r.h_alpha == RatMatrix{{1, 0}, {0, -1}});
  CHECK(r.x_alpha == RatMatrix{{0, 1}, {0, 0}});
  CHECK(r.z_scalar == 1);
}

TEST_CASE("sl2 commutation relations") {
  for (int n : {-2, 0, 2})
    for (int ell : {1, 3, 4}) {
      const ReprAction r = make_repr_action(n, ell);
      const RatMatrix comm = r.x_alpha * r.x_minus_alpha - r.x_minus_alpha * r.x_alpha;
      CHECK(comm == r.h_alpha);
      CHECK(r.h_alpha * r.x_alpha - r.x_alpha * r.h_alpha == r.x_alpha * Rational(2));
      for (int i = 0; i < ell; ++i) CHECK(r.up_coupling(i) == (i + 1) * (ell - i));
      for (std::size_t i = 0; i <= static_cast<std::size_t>(ell); ++i) {
        CHECK(r.h_gamma()(i, i) == n + ell - static_cast<int>(i));
        CHECK(r.h_tilde_2()(i, i) == n - ell + 3 * static_cast<int>(i));
      }
    }
}

TEST_CASE("index and restriction maps") {
  CHECK(index_to_restriction({0, 0, 0, 0}) == RestrictionParams{0, 0, 0, 0});
  CHECK(index_to_restriction({0, 1, 0, 0}) == RestrictionParams{1, 0, 1, 0});
  CHECK(index_to_restriction({-1, 2, 1, 1}) == RestrictionParams{2, 2, 3, 1});
  CHECK(restriction_to_index({0, 0, 0, 0}) == SFIndex{0, 0, 0, 0});
  CHECK(restriction_to_index({1, 0, 1, 0}) == SFIndex{0, 1, 0, 0});
  for (int n = -3; n <= 3; ++n)
    for (int ell = 0; ell <= 4; ++ell)
      for (int w = 0; w <= 5; ++w)
        for (int k = 0; k <= ell; ++k) {
          const SFIndex idx{n, ell, w, k};
          if (!idx.admissible()) continue;
          const RestrictionParams rp = index_to_restriction(idx);
          CHECK(rp.admissible());
          CHECK(restriction_to_index(rp) == idx);
        }
}

TEST_CASE("admissibility is enforced") {
  CHECK_THROWS_AS(SFIndex({-2, 1, 0, 0}).validate(), ConstraintViolation);
  CHECK_THROWS_AS(SFIndex({0, 1, 0, 2}).validate(), ConstraintViolation);
  CHECK_THROWS_AS(eigen_from_index({0, 1, -1, 0}), ConstraintViolation);
  CHECK_FALSE(SFIndex({0, 1, 0, 0}).violations().size());
  CHECK_THROWS_AS(RestrictionParams({0, 1, 0, 0}).validate(), ConstraintViolation);
}

TEST_CASE("Casimir eigenvalues") {
  CHECK(casimir_eigenvalues(0, 0) == CasimirPair{0, 0});
  CHECK(casimir_eigenvalues(1, 0) == CasimirPair{Rational(-16, 3), Rational(224, 9)});
}

TEST_CASE("eigenvalues from an index") {
  CHECK(eigen_from_index({0, 1, 0, 0}) == EigenPair{0, 0});
  CHECK(eigen_from_index({0, 0, 1, 0}) == EigenPair{-3, 0});
  // mu_1(lambda) = 2 lambda - 6 at n = 0, ell = 1
  CHECK(eigen_from_index({0, 1, 0, 1}) == EigenPair{-2, -10});
  CHECK(lambda_of(2, 3, 1, 2) == -1 * (1 + 2 + 3 + 2 + 2) - 2 * (2 + 2 + 1));
  CHECK(mu_of_lambda(2, 3, 2, Rational(-5)) == -5 * (2 - 3 + 6) - 6 * 2 * 5);
}

TEST_CASE("w reflection leaves lambda fixed") {
  for (int w = -6; w <= 6; ++w) {
    const int rw = reflected_w(1, 2, w, 1);
    CHECK(lambda_of(1, 2, rw, 1) == lambda_of(1, 2, w, 1));
    CHECK(reflected_w(1, 2, rw, 1) == w);
    const int cw = canonical_w(1, 2, w, 1);
    CHECK(lambda_of(1, 2, cw, 1) == lambda_of(1, 2, w, 1));
  }
}

TEST_CASE("K Casimir scalars") {
  const KCasimirScalars a = kcasimir_scalars(0, 0);
  CHECK(a.d2k == 0);
  CHECK(a.d3k == 0);
  const KCasimirScalars b = kcasimir_scalars(0, 1);
  CHECK(b.d2k == Rational(-16, 3));
  CHECK(b.d3k == Rational(224, 9));
}

TEST_CASE("eigenvalue conventions") {
  const EigenPair e{3, -5};
  CHECK(to_radial(e) == EigenPair{12, -20});
  for (int n = -2; n <= 2; ++n)
    for (int ell = 0; ell <= 3; ++ell)
      for (int w = 0; w <= 3; ++w)
        for (int k = 0; k <= ell; ++k) {
          const SFIndex idx{n, ell, w, k};
          if (!idx.admissible()) continue;
          const EigenPair ep = eigen_from_index(idx);
          const KCasimirScalars ks = kcasimir_scalars(n, ell);
          const CasimirPair cp = to_casimir(ep, n, ell);
          CHECK(cp.lambda_tilde == 4 * ep.lambda + ks.d2k);
          CHECK(cp.mu_tilde == 4 * ep.mu - 12 * ep.lambda + ks.d3k);
          const RestrictionParams rp = index_to_restriction(idx);
          CHECK(casimir_eigenvalues(rp.p, rp.q) == cp);
        }
}
