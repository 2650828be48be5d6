#include "su3sf/bispectral.hpp"

#include "su3sf/errors.hpp"
#include "su3sf/repr_core.hpp"
#include "su3sf/series.hpp"

namespace su3sf {

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  PolyMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  PolyMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
  return r;
}

PolyMatrix PolyMatrix::times_t() const {
  PolyMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].times_power(1);
  return r;
}

RatMatrix PolyMatrix::at(const Rational& t) const {
  RatMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j)(t);
  return m;
}

Rational PolyMatrix::max_abs_coeff() const {
  Rational worst = 0;
  for (const auto& p : data_)
    for (const auto& c : p.coeffs()) worst = std::max(worst, abs(c));
  return worst;
}

PolyMatrix operator*(const RatMatrix& m, const PolyMatrix& p) {
  PolyMatrix r(m.rows(), p.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (m(i, k) == 0) continue;
      for (std::size_t j = 0; j < p.cols(); ++j) r(i, j) = r(i, j) + p(k, j) * m(i, k);
    }
  return r;
}

PolyMatrix phi_matrix(int n, int ell, int w) {
  if (n < 0 || w < 0) throw ConstraintViolation("Phi(w, t) is built for n >= 0 and w >= 0");
  const auto d = static_cast<std::size_t>(ell) + 1;
  PolyMatrix phi(d, d);
  for (int k = 0; k <= ell; ++k) {
    const VectorSeries s = normalize_at_one(series_solution(SFIndex{n, ell, w, k}));
    for (int i = 0; i <= ell; ++i) phi(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) = s.component(i);
  }
  return phi;
}

RatVector phi_lambda(int n, int ell, int w) {
  RatVector out;
  for (long i = 1; i <= ell + 1; ++i) out.push_back(Rational(-w * (w + n + i + ell + 1) - (i - 1) * (n + i)));
  return out;
}

RatVector phi_mu(int n, int ell, int w) {
  const RatVector lam = phi_lambda(n, ell, w);
  RatVector out;
  for (long i = 1; i <= ell + 1; ++i)
    out.push_back(lam[static_cast<std::size_t>(i - 1)] * (n - ell + 3 * i - 3) -
                  Rational(3 * (i - 1) * (ell - i + 2) * (n + i)));
  return out;
}

BispectralTriple bispectral_matrices(int n, int w) {
  if (n < 0 || w < 0) throw ConstraintViolation("bispectral matrices need n >= 0 and w >= 0");
  const long N = n, W = w, L = 2;
  BispectralTriple t{n, w, RatMatrix(3, 3), RatMatrix(3, 3), RatMatrix(3, 3)};
  auto at = [](RatMatrix& m, long i, long j) -> Rational& {
    return m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  };
  for (long i = 1; i <= 3; ++i) {
    at(t.a, i, i) = Rational(W * (W + L + 1) * (W + N + i - 1) * (W + N + L + i)) /
                    Rational((W + L - i + 2) * (W + N + 2 * i - 1) * (2 * W + N + L + i) * (2 * W + N + L + i + 1));
    at(t.c, i, i) = Rational((W + 1) * (W + L + 2) * (W + N + i) * (W + N + L + i + 1)) /
                    Rational((W + L - i + 2) * (W + N + 2 * i - 1) * (2 * W + N + L + i + 1) * (2 * W + N + L + i + 2));
  }
  for (long i = 1; i <= 2; ++i) {
    at(t.a, i, i + 1) = Rational(2 * W * (W + L + 1)) /
                        Rational((W + L - i + 1) * (W + L - i + 2) * (W + N + 2 * i - 1) * (2 * W + N + L + i + 1));
    at(t.c, i + 1, i) = Rational(2 * (W + 1) * (W + L + 2)) /
                        Rational((W + L - i + 1) * (W + L - i + 2) * (W + N + 2 * i + 1) * (2 * W + N + L + i + 2));
    at(t.b, i + 1, i) = Rational(2 * (W + N + i) * (W + N + L + i + 1)) /
                        Rational((W + L - i + 1) * (W + N + 2 * i) * (W + N + 2 * i + 1) * (2 * W + N + L + i + 2));
  }
  for (long i = 2; i <= 3; ++i)
    at(t.b, i - 1, i) = Rational(2 * (W + N + i - 1) * (W + N + L + i)) /
                        Rational((W + L - i + 3) * (W + N + 2 * i - 3) * (W + N + 2 * i - 2) * (2 * W + N + L + i));

  const long z = W * (W + N + 4);
  at(t.b, 1, 1) = Rational(z * (2 * z + N * N + 10 * N + 13) + 2 * (N + 1) * (N + 3) * (N + 4)) /
                  Rational((W + 2) * (W + N + 2) * (2 * W + N + 3) * (2 * W + N + 5));
  const long q = W * (W + N + 5);
  const Rational num22 = Rational(q * (q * (2 * q + (N + 2) * (N + 12)) + 4 * (N * N * N + 10 * N * N + 28 * N + 28)) +
                                  (N + 4) * (3 * N * N * N + 24 * N * N + 56 * N + 56));
  at(t.b, 2, 2) = num22 / (Rational((W + 1) * (W + 3) * (W + N + 2)) *
                           Rational((W + N + 4) * (2 * W + N + 4) * (2 * W + N + 6)));
  const long y = W * (W + N + 6);
  at(t.b, 3, 3) = Rational(y * (2 * y + N * N + 10 * N + 29) + 2 * (N + 5) * (N * N + 5 * N + 10)) /
                  Rational((W + 2) * (W + N + 4) * (2 * W + N + 5) * (2 * W + N + 7));
  return t;
}

PolyMatrix bispectral_defect(int n, int w) {
  const BispectralTriple t = bispectral_matrices(n, w);
  const PolyMatrix phi = phi_matrix(n, 2, w);
  PolyMatrix lhs = t.b * phi + t.c * phi_matrix(n, 2, w + 1);
  if (w > 0) lhs = lhs + t.a * phi_matrix(n, 2, w - 1);
  return lhs - phi.times_t();
}

Rational verify_bispectral(int n, int w) { return bispectral_defect(n, w).max_abs_coeff(); }

PolyMatrix forward_generate(int n, int w) {
  const BispectralTriple t = bispectral_matrices(n, w);
  const auto c_inv = inverse(t.c);
  if (!c_inv) throw ConsistencyError("C_w is singular for n=" + std::to_string(n) + ", w=" + std::to_string(w));
  const PolyMatrix phi = phi_matrix(n, 2, w);
  PolyMatrix rhs = phi.times_t() - t.b * phi;
  if (w > 0) rhs = rhs - t.a * phi_matrix(n, 2, w - 1);
  return *c_inv * rhs;
}

std::optional<BispectralTriple> solve_bispectral_matrices(int n, int ell, int w) {
  const auto d = static_cast<std::size_t>(ell) + 1;
  const PolyMatrix cur = phi_matrix(n, ell, w);
  const PolyMatrix next = phi_matrix(n, ell, w + 1);
  const PolyMatrix prev = w > 0 ? phi_matrix(n, ell, w - 1) : PolyMatrix(d, d);
  BispectralTriple out{n, w, RatMatrix(d, d), RatMatrix(d, d), RatMatrix(d, d)};

  long max_deg = 0;
  for (const PolyMatrix* p : {&prev, &cur, &next})
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) max_deg = std::max(max_deg, (*p)(i, j).degree());
  const std::size_t eqs = d * static_cast<std::size_t>(max_deg + 2);

  for (std::size_t r = 0; r < d; ++r) {
    // Unknowns: (matrix, source row of Phi) pairs allowed by the band structure.
    struct Unknown {
      RatMatrix* target;
      const PolyMatrix* phi;
      std::size_t col;
    };
    std::vector<Unknown> unk;
    if (w > 0) {
      unk.push_back({&out.a, &prev, r});
      if (r + 1 < d) unk.push_back({&out.a, &prev, r + 1});
    }
    if (r > 0) unk.push_back({&out.b, &cur, r - 1});
    unk.push_back({&out.b, &cur, r});
    if (r + 1 < d) unk.push_back({&out.b, &cur, r + 1});
    if (r > 0) unk.push_back({&out.c, &next, r - 1});
    unk.push_back({&out.c, &next, r});

    RatMatrix sys(eqs, unk.size() + 1);
    for (std::size_t i = 0; i < d; ++i)
      for (long e = 0; e <= max_deg + 1; ++e) {
        const std::size_t row = i * static_cast<std::size_t>(max_deg + 2) + static_cast<std::size_t>(e);
        for (std::size_t u = 0; u < unk.size(); ++u)
          sys(row, u) = (*unk[u].phi)(unk[u].col, i).coeff(static_cast<std::size_t>(e));
        sys(row, unk.size()) = e == 0 ? Rational(0) : cur(r, i).coeff(static_cast<std::size_t>(e - 1));
      }
    const auto pivots = rref(sys);
    if (pivots.size() != unk.size() || pivots.back() != unk.size() - 1) return std::nullopt;
    for (std::size_t u = 0; u < unk.size(); ++u) (*unk[u].target)(r, unk[u].col) = sys(u, unk.size());
  }
  return out;
}

}  // namespace su3sf
