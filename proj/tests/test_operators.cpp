#include <doctest.h>

#include "su3sf/eigen.hpp"
#include "su3sf/errors.hpp"
#include "su3sf/operators.hpp"
#include "su3sf/series.hpp"

using namespace su3sf;

TEST_CASE("coefficient matrices at small K-types") {
  const CoefficientMatrices s = build_coefficient_matrices(0, 0);
  CHECK(s.a0 == RatMatrix{{1}});
  CHECK(s.a1 == RatMatrix{{3}});
  for (const RatMatrix* m : {&s.b0, &s.b1, &s.d0, &s.d1, &s.m, &s.c0, &s.c1}) CHECK(m->is_zero());

  const CoefficientMatrices v = build_coefficient_matrices(0, 1);
  CHECK(v.a0 == RatMatrix{{2, 0}, {0, 1}});
  CHECK(v.b0 == RatMatrix{{-1, 1}, {0, 0}});
  CHECK(v.c0 == RatMatrix{{-2, -3}, {0, 2}});
  CHECK(v.d0 == RatMatrix{{-2, 2}, {3, -3}});
}

TEST_CASE("one D recursion step") {
  const CoefficientMatrices cm = build_coefficient_matrices(0, 0);
  const RatVector h1 = recursion_step_D(cm, -3, 0, RatVector{0}, RatVector{1});
  CHECK(h1 == RatVector{-3});
  const RatVector h2 = recursion_step_D(cm, -3, 1, RatVector{1}, h1);
  CHECK(h2 == RatVector{0});
}

TEST_CASE("singular D step names the component") {
  const CoefficientMatrices cm = build_coefficient_matrices(-2, 0);
  try {
    recursion_step_D(cm, 0, 1, RatVector{0}, RatVector{1});
    FAIL("expected SingularStep");
  } catch (const SingularStep& e) {
    CHECK(e.component() == 0);
  }
}

TEST_CASE("E defect detects a non-eigenvector start") {
  const int n = 0, ell = 1;
  const Rational lambda(7, 3);
  const CoefficientMatrices cm = build_coefficient_matrices(n, ell);
  const VectorSeries bad = d_series_from(n, ell, lambda, {1, 0}, 6);
  CHECK(residual_D(cm, lambda, bad, 5) == 0);
  const RatVector e0 = defect_E(cm, -lambda, bad, 0);
  CHECK_FALSE(is_zero(e0));
  for (int k = 0; k <= ell; ++k) {
    const RatVector v = l_eigenvector(n, ell, lambda, k);
    const VectorSeries good = d_series_from(n, ell, lambda, v, 6);
    CHECK(residual_E(cm, mu_of_lambda(n, ell, k, lambda), good, 5) == 0);
  }
  CHECK(residual_E(cm, 3, VectorSeries::zero(ell, 4), 3) == 0);
}

TEST_CASE("radial functions") {
  const RadialFunction f(-1, {{0, 1}, {2, -1}});
  CHECK(f.eval(Rational(1)) == 0);
  CHECK(f.eval(Rational(2)) == Rational(-3, 5));
  // d/dr (1 - r^2)/(1 + r^2) = -4r/(1 + r^2)^2
  const RadialFunction g(-2, {{1, -4}});
  CHECK(f.derivative().equals(g));
  CHECK(f.with_alpha(-2).equals(f));
  CHECK(doctest::Approx(f.eval(0.5)) == 0.75 / 1.25);
}

TEST_CASE("radial systems on Psi") {
  const auto apply = [](int n, int ell, bool use_e) {
    const ReprAction ra = make_repr_action(n, ell);
    const auto psi = psi_closed_form(n, ell);
    return std::make_pair(use_e ? radial_apply_E(ra, psi) : radial_apply_D(ra, psi), psi);
  };
  {
    auto [out, psi] = apply(-1, 0, false);
    CHECK(is_radial_eigenfunction(out, psi, -8));
    CHECK_FALSE(is_radial_eigenfunction(out, psi, 8));
  }
  {
    auto [out, psi] = apply(-1, 1, false);
    CHECK(is_radial_eigenfunction(out, psi, -12));
    // pointwise at exact sample radii
    for (int r = 1; r <= 30; ++r)
      for (std::size_t i = 0; i < psi.size(); ++i)
        CHECK(out[i].eval(Rational(r, 7)) == -12 * RadialFunction::from(psi[i]).eval(Rational(r, 7)));
  }
  {
    auto [out, psi] = apply(-1, 0, true);
    CHECK(is_radial_eigenfunction(out, psi, 8));
  }
  {
    auto [out, psi] = apply(-2, 1, true);
    CHECK(is_radial_eigenfunction(out, psi, 72));
  }
  {
    const ReprAction ra = make_repr_action(0, 2);
    const std::vector<RadialPoly> one(3, RadialPoly{0, {1}});
    for (const auto& f : radial_apply_E(ra, one)) CHECK(f.is_zero());
  }
}

TEST_CASE("radial systems agree with the t-variable series") {
  for (const SFIndex idx : {SFIndex{0, 1, 2, 1}, SFIndex{1, 2, 1, 0}, SFIndex{-1, 2, 1, 2}, SFIndex{2, 3, 1, 3}}) {
    const VectorSeries s = series_solution(idx);
    const EigenPair radial = to_radial(eigen_from_index(idx));
    const ReprAction ra = make_repr_action(idx.n, idx.ell);
    const auto h = radial_components(s);
    CHECK(is_radial_eigenfunction(radial_apply_D(ra, h), h, radial.lambda));
    CHECK(is_radial_eigenfunction(radial_apply_E(ra, h), h, radial.mu));
  }
}
