#include "su3sf/analysis.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "su3sf/errors.hpp"
#include "su3sf/series.hpp"

namespace su3sf {

namespace {

void require_terminating(const VectorSeries& s) {
  if (!s.is_zero() && !s.terminates()) throw ConstraintViolation("inner product needs terminating series");
}

}  // namespace

Rational inner_product(const VectorSeries& a, const VectorSeries& b, int n, int ell) {
  if (a.ell() != ell || b.ell() != ell) throw ConstraintViolation("series do not match the K-type dimension");
  require_terminating(a);
  require_terminating(b);
  Rational total = 0;
  for (int i = 0; i <= ell; ++i) {
    const long e = static_cast<long>(n) + ell - i;
    const Polynomial prod = a.component(i) * b.component(i);
    for (long j = 0; j <= prod.degree(); ++j) {
      const Rational& c = prod.coeffs()[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      const long m = j + e;
      if (m < 0)
        throw ConstraintViolation("negative power t^" + std::to_string(m) + " under the integral in component " +
                                  std::to_string(i));
      total += c / Rational((m + 1) * (m + 2));
    }
  }
  return total;
}

double inner_product_approx(const VectorSeries& a, const VectorSeries& b, int n, int ell) {
  double total = 0;
  for (int i = 0; i <= ell; ++i) {
    const Polynomial pa = a.component(i), pb = b.component(i);
    const double e = n + ell - i;
    auto f = [&](double t) { return pa.eval(t) * pb.eval(t) * (1 - t) * std::pow(t, e); };
    total += boost::math::quadrature::gauss<double, 30>::integrate(f, 0.0, 1.0);
  }
  return total;
}

double r_form_monomial_approx(long e, long m) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double r) {
    const double u = std::log1p(r * r);
    return std::exp(3 * std::log(r) - static_cast<double>(e + 3 + m) * u);
  };
  return integrator.integrate(f);
}

GramReport gram_matrix(int n, int ell, int w_max) {
  GramReport rep;
  rep.n = n;
  rep.ell = ell;
  std::vector<VectorSeries> family;
  for (int w = 0; w <= w_max; ++w)
    for (int k = 0; k <= ell; ++k) {
      const SFIndex idx{n, ell, w, k};
      if (!idx.admissible()) continue;
      rep.indices.push_back(idx);
      family.push_back(normalize_at_one(series_solution(idx)));
    }
  const std::size_t m = family.size();
  rep.gram = RatMatrix(m, m);
  rep.max_offdiag = 0;
  rep.orthogonal = true;
  rep.positive = true;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x; y < m; ++y) {
      const Rational v = inner_product(family[x], family[y], n, ell);
      rep.gram(x, y) = v;
      rep.gram(y, x) = v;
      if (x == y) {
        rep.norms.push_back(v);
        if (v <= 0) rep.positive = false;
        continue;
      }
      rep.max_offdiag = std::max(rep.max_offdiag, abs(v));
      if (v != 0 && !(eigen_from_index(rep.indices[x]) == eigen_from_index(rep.indices[y]))) rep.orthogonal = false;
    }
  return rep;
}

BoundaryReport boundary_check(const VectorSeries& s, int n, int ell, long shift) {
  BoundaryReport rep;
  for (int i = 0; i <= s.ell(); ++i) {
    ComponentBoundary cb;
    cb.i = i;
    const long ord = s.component_order(i);
    if (ord >= 0) {
      cb.order = ord + shift;
      const long e = static_cast<long>(n) + ell - i;
      cb.pass = e == 0 ? *cb.order >= 0 : 2 * *cb.order + e > 0;
    }
    rep.pass = rep.pass && cb.pass;
    rep.components.push_back(cb);
  }
  return rep;
}

}  // namespace su3sf
