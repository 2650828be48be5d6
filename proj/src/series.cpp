#include "su3sf/series.hpp"

#include <algorithm>
#include <map>

#include "su3sf/eigen.hpp"
#include "su3sf/errors.hpp"

namespace su3sf {

std::size_t default_truncation(const SFIndex& idx) {
  return static_cast<std::size_t>(idx.w + idx.ell + std::max(-idx.n, 0) + 8);
}

long expected_leading_order(int n, int ell) { return std::max(0, -n - ell); }

namespace {

// Lowest j at which H_{i,j} may be nonzero for n < 0.
long first_free_order(int n, int ell, int i) {
  long lo = expected_leading_order(n, ell);
  const long e = static_cast<long>(n) + ell - i;
  if (e < 0) lo = std::max(lo, (-e + 1) / 2);  // j >= ceil(-e/2)
  return lo;
}

}  // namespace

VectorSeries d_series_from(int n, int ell, const Rational& lambda, const RatVector& h0, std::size_t N) {
  const CoefficientMatrices cm = build_coefficient_matrices(n, ell);
  std::vector<RatVector> coeffs{h0};
  RatVector prev(h0.size(), Rational(0));
  for (std::size_t j = 0; j < N; ++j) {
    RatVector next = recursion_step_D(cm, lambda, static_cast<long>(j), prev, coeffs.back());
    prev = coeffs.back();
    coeffs.push_back(std::move(next));
  }
  return VectorSeries(ell, std::move(coeffs));
}

VectorSeries joint_nullspace_solution(int n, int ell, const Rational& lambda, const Rational& mu, std::size_t N) {
  if (ell < 0) throw ConstraintViolation("ell must be nonnegative");
  const CoefficientMatrices cm = build_coefficient_matrices(n, ell);
  const auto d = static_cast<std::size_t>(ell) + 1;
  const RatMatrix id = RatMatrix::identity(d);

  std::map<std::pair<long, int>, std::size_t> column;
  std::vector<std::pair<long, int>> slots;
  for (long j = 0; j <= static_cast<long>(N); ++j)
    for (int i = 0; i <= ell; ++i)
      if (j >= first_free_order(n, ell, i)) {
        column[{j, i}] = slots.size();
        slots.emplace_back(j, i);
      }
  if (slots.empty()) throw InsufficientTruncation("truncation too short for any free coefficient");

  std::vector<RatVector> rows;
  auto emit = [&](long j, const RatMatrix& prev, const RatMatrix& cur, const RatMatrix& next) {
    for (std::size_t r = 0; r < d; ++r) {
      RatVector row(slots.size(), Rational(0));
      bool any = false;
      for (const auto& [off, mat] : {std::pair<long, const RatMatrix*>{-1, &prev}, {0, &cur}, {1, &next}}) {
        for (std::size_t c = 0; c < d; ++c) {
          if ((*mat)(r, c) == 0) continue;
          const auto it = column.find({j + off, static_cast<int>(c)});
          if (it == column.end()) continue;
          row[it->second] += (*mat)(r, c);
          any = true;
        }
      }
      if (any) rows.push_back(std::move(row));
    }
  };
  for (long j = 0; j < static_cast<long>(N); ++j) {
    emit(j, id * Rational((j - 1) * (j - 2)) + cm.a1 * Rational(j - 1) - cm.b1 + id * lambda,
         (id * Rational(2 * j * (j - 1)) + (cm.a0 + cm.a1) * Rational(j) - cm.b0 + id * lambda) * Rational(-1),
         (id * Rational(j) + cm.a0) * Rational(j + 1));
    emit(j, cm.m * Rational((j - 1) * (j - 2)) + cm.c1 * Rational(j - 1) + cm.d1 + id * mu,
         (cm.m * Rational(2 * j * (j - 1)) + (cm.c0 + cm.c1) * Rational(j) - cm.d0 + id * mu) * Rational(-1),
         (cm.m * Rational(j) + cm.c0) * Rational(j + 1));
  }

  RatMatrix sys(rows.size(), slots.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < slots.size(); ++c) sys(r, c) = rows[r][c];
  const auto basis = nullspace(sys);
  if (basis.size() != 1)
    throw NullspaceDimension("joint (D, E) system for n=" + std::to_string(n) + ", ell=" + std::to_string(ell) +
                                 ", lambda=" + to_string(lambda) + ", mu=" + to_string(mu) + " has solution space of dimension " +
                                 std::to_string(basis.size()),
                             basis.size());

  std::vector<RatVector> coeffs(N + 1, RatVector(d, Rational(0)));
  for (std::size_t c = 0; c < slots.size(); ++c)
    coeffs[static_cast<std::size_t>(slots[c].first)][static_cast<std::size_t>(slots[c].second)] = basis[0][c];
  VectorSeries s(ell, std::move(coeffs));
  const long ord = s.component_order(ell);
  if (ord < 0) throw ConsistencyError("joint solution has a vanishing last component");
  return s.scaled(1 / s.entry(ell, ord));
}

VectorSeries series_solution(const SFIndex& idx, std::optional<std::size_t> N) {
  idx.validate();
  const std::size_t trunc = N.value_or(default_truncation(idx));
  const EigenPair ep = eigen_from_index(idx);
  if (idx.n >= 0) {
    const RatVector h0 = l_eigenvector(idx.n, idx.ell, ep.lambda, idx.k);
    return d_series_from(idx.n, idx.ell, ep.lambda, h0, trunc);
  }
  return joint_nullspace_solution(idx.n, idx.ell, ep.lambda, ep.mu, trunc);
}

std::vector<std::pair<int, long>> structural_zero_violations(const VectorSeries& s, int n) {
  std::vector<std::pair<int, long>> bad;
  if (n >= 0) return bad;
  const int ell = s.ell();
  const long a = expected_leading_order(n, ell);
  auto must_vanish = [&](int i, long j) {
    if (j < a) return true;
    if (n <= -ell) return j < a + i;           // H_{i, a+k} = 0 for k < i
    return j <= -n - 1 && i >= n + ell + j + 1;  // H_{i,k} = 0 for k <= -n-1, i >= n+ell+k+1
  };
  for (int i = 0; i <= ell; ++i)
    for (long j = 0; j <= static_cast<long>(s.truncation()); ++j)
      if (must_vanish(i, j) && s.entry(i, j) != 0) bad.emplace_back(i, j);
  return bad;
}

// ------------------------------------------------------------------ Psi

std::vector<RadialPoly> psi_closed_form(int n, int ell) {
  if (n > 0) throw ConstraintViolation("Psi_{n,ell} requires n <= 0");
  if (ell < 0) throw ConstraintViolation("ell must be nonnegative");
  std::vector<RadialPoly> out;
  for (int i = 0; i <= ell; ++i) {
    RadialPoly p;
    p.alpha = n;
    const long top = std::min<long>(-n, ell - i);
    for (long j = 0; j <= top; ++j) p.coeffs.push_back((j % 2 ? -1 : 1) * binomial(-n, j) * binomial(ell - i, j));
    out.push_back(std::move(p));
  }
  return out;
}

EigenPair psi_radial_eigenvalues(int n, int ell) {
  return {Rational(4L * n * (ell + 2)), Rational(4L * n * (ell + 2) * (n - ell))};
}

// ------------------------------------------------------------ evaluation

RatVector evaluate_series(const VectorSeries& s, const Rational& t) {
  RatVector out(s.dim(), Rational(0));
  for (std::size_t j = s.truncation() + 1; j-- > 0;)
    for (std::size_t i = 0; i < s.dim(); ++i) out[i] = out[i] * t + s[j][i];
  return out;
}

std::vector<double> evaluate_series(const VectorSeries& s, double t) {
  std::vector<double> out(s.dim(), 0.0);
  for (std::size_t j = s.truncation() + 1; j-- > 0;)
    for (std::size_t i = 0; i < s.dim(); ++i) out[i] = out[i] * t + s[j][i].get_d();
  return out;
}

VectorSeries normalize_at_one(const VectorSeries& s) {
  if (!s.terminates()) throw ConstraintViolation("normalize_at_one needs a terminating series");
  const RatVector v = evaluate_series(s, Rational(1));
  if (v[0] == 0) throw ConstraintViolation("series vanishes at t = 1");
  for (const auto& x : v)
    if (x != v[0]) throw ConsistencyError("components differ at t = 1: not a spherical function");
  return s.scaled(1 / v[0]);
}

// ------------------------------------------------------------ probe

namespace {

struct LinearSolve {
  bool consistent = false;
  bool unique = false;
  RatVector x;
};

// Solves M x = rhs exactly, picking zeros for any free unknowns.
LinearSolve solve(const RatMatrix& m, const RatVector& rhs) {
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const auto pivots = rref(aug);
  LinearSolve out;
  out.consistent = std::find(pivots.begin(), pivots.end(), m.cols()) == pivots.end();
  out.unique = out.consistent && pivots.size() == m.cols();
  out.x.assign(m.cols(), Rational(0));
  if (out.consistent)
    for (std::size_t r = 0; r < pivots.size(); ++r) out.x[pivots[r]] = aug(r, m.cols());
  return out;
}

Rational power(const Rational& x, long m) {
  Rational r = 1;
  for (long e = 0; e < m; ++e) r *= x;
  return r;
}

}  // namespace

ProbeResult conjecture_probe(const VectorSeries& s, const SFIndex& idx, int i, int max_p) {
  idx.validate();
  if (idx.n < 0) throw ConstraintViolation("the conjectured shape is stated for n >= 0");
  if (i < 0 || i > idx.ell || s.ell() != idx.ell) throw ConstraintViolation("component index out of range");

  ProbeResult res;
  const int p = idx.ell - std::abs(i - idx.k);
  res.predicted_a = -idx.w - std::min(i, idx.k);
  res.predicted_b = idx.w + idx.n + idx.ell + 2 + idx.k - std::min(i, idx.k);
  res.predicted_c = idx.n + idx.ell + 1 - i;
  if (p > max_p) {
    res.message = "polynomial degree " + std::to_string(p) + " exceeds max_p";
    return res;
  }
  const long J = static_cast<long>(s.truncation());
  auto cj = [&](long j) { return j <= J ? s.entry(i, j) : Rational(0); };
  const Rational &pa = res.predicted_a, &pb = res.predicted_b, &pc = res.predicted_c;
  const long first = s.component_order(i);
  if (first < 0) {
    res.message = "component vanishes identically";
    return res;
  }

  // Anchored: c_j = prefactor * T_j * P(j), T_j = (a)_j (b)_j / (j! (c)_j),
  // with a, b, c fixed. Linear in the coefficients of P, and unlike the term
  // ratio it keeps the data at integer zeros of P. When the component
  // vanishes at t = 0, P(0) = 0 and P is scaled so its lowest coefficient is 1.
  res.mode = "anchored";
  HypergeometricSpec spec = HypergeometricSpec::gauss(1, 0, pa, pb, pc);
  const bool vanishing = first > 0;
  const auto cols = static_cast<std::size_t>(p);
  RatMatrix m(static_cast<std::size_t>(J) + 1, cols);
  RatVector rhs(static_cast<std::size_t>(J) + 1);
  Rational t = 1;
  for (long j = 0; j <= J; ++j) {
    if (j > 0) t *= (pa + j - 1) * (pb + j - 1) / (Rational(j) * (pc + j - 1));
    const Rational scale = vanishing ? t : cj(0) * t;
    for (long mm = 1; mm <= p; ++mm)
      m(static_cast<std::size_t>(j), static_cast<std::size_t>(mm - 1)) = scale * power(Rational(j), mm);
    rhs[static_cast<std::size_t>(j)] = vanishing ? cj(j) : cj(j) - scale;
  }
  const LinearSolve ls = solve(m, rhs);
  if (!ls.consistent) {
    res.message = "no polynomial P of degree " + std::to_string(p) + (vanishing ? " with P(0) = 0" : "") +
                  " fits the predicted a, b, c";
    res.spec = spec;
    return res;
  }
  res.underdetermined = !ls.unique;
  RatVector poly{vanishing ? Rational(0) : Rational(1)};
  poly.insert(poly.end(), ls.x.begin(), ls.x.end());
  spec.multiplier = Polynomial(poly);
  if (vanishing) {
    const auto& c = spec.multiplier.coeffs();
    const auto lead = std::find_if(c.begin(), c.end(), [](const Rational& x) { return x != 0; });
    if (lead == c.end()) {
      res.message = "fitted multiplier is identically zero";
      res.spec = spec;
      return res;
    }
    spec.prefactor = *lead;
    spec.multiplier = spec.multiplier * (1 / spec.prefactor);
  } else {
    spec.prefactor = cj(0);
  }
  res.spec = spec;

  // Reproduce the data from the fitted spec.
  RatVector fitted;
  try {
    fitted = hypergeometric_coeffs(spec, static_cast<std::size_t>(J));
  } catch (const ConstraintViolation& e) {
    res.message = std::string("fitted spec does not expand: ") + e.what();
    return res;
  }
  for (long j = 0; j <= J; ++j)
    if (fitted[static_cast<std::size_t>(j)] != cj(j)) {
      res.message = "fitted spec differs from the data at t^" + std::to_string(j);
      return res;
    }
  res.fitted = true;
  res.message = res.underdetermined ? "fits, but P is not determined uniquely by the data" : "fits";

  // Free fit: c_{j+1}(j+1)Q(j) = c_j R(j), deg Q = p+1, deg R = p+2.
  const std::size_t nq = static_cast<std::size_t>(p) + 2, nr = static_cast<std::size_t>(p) + 3;
  RatMatrix fm(static_cast<std::size_t>(J), nq + nr);
  for (long j = 0; j < J; ++j) {
    for (std::size_t e = 0; e < nq; ++e)
      fm(static_cast<std::size_t>(j), e) = cj(j + 1) * (j + 1) * power(Rational(j), static_cast<long>(e));
    for (std::size_t e = 0; e < nr; ++e)
      fm(static_cast<std::size_t>(j), nq + e) = -cj(j) * power(Rational(j), static_cast<long>(e));
  }
  const auto basis = nullspace(fm);
  if (basis.size() == 1) {
    const Polynomial qpoly(RatVector(basis[0].begin(), basis[0].begin() + static_cast<long>(nq)));
    const Polynomial rpoly(RatVector(basis[0].begin() + static_cast<long>(nq), basis[0].end()));
    const Polynomial g = Polynomial::gcd(qpoly, rpoly.shifted(Rational(-1)));
    if (g.degree() == p) {
      const Polynomial pp = g.coeff(0) != 0 ? g * (1 / g.coeff(0)) : g.monic();
      Polynomial lin, rem, quad;
      Polynomial::divide(qpoly, pp, lin, rem);
      Polynomial::divide(rpoly, pp.shifted(Rational(1)), quad, rem);
      const Rational alpha = lin.leading();
      const bool agrees = lin.degree() == 1 && quad.degree() == 2 && quad.leading() == alpha &&
                          lin.coeff(0) / alpha == pc && quad.coeff(1) / alpha == pa + pb &&
                          quad.coeff(0) / alpha == pa * pb && pp.monic() == spec.multiplier.monic();
      res.free_fit_agrees = agrees;
      if (!agrees) res.message += "; free fit disagrees with the predicted parameters";
    }
  }
  return res;
}

}  // namespace su3sf
