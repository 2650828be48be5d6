#include "su3sf/repr_core.hpp"

#include <algorithm>
#include <sstream>

#include "su3sf/errors.hpp"

namespace su3sf {

std::string SFIndex::violations() const {
  std::ostringstream os;
  if (w < 0) os << "w >= 0 violated (w=" << w << "); ";
  if (k < 0 || k > ell) os << "0 <= k <= ell violated (k=" << k << ", ell=" << ell << "); ";
  if (w + n + k < 0) os << "w + n + k >= 0 violated (w+n+k=" << w + n + k << "); ";
  if (ell < 0) os << "ell >= 0 violated; ";
  std::string out = os.str();
  if (out.size() >= 2) out.resize(out.size() - 2);
  return out;
}

void SFIndex::validate() const {
  if (ell < 0 || !admissible()) {
    std::ostringstream os;
    os << "inadmissible index (n=" << n << ", ell=" << ell << ", w=" << w << ", k=" << k
       << "): " << violations();
    throw ConstraintViolation(os.str());
  }
}

void RestrictionParams::validate() const {
  if (!admissible()) {
    std::ostringstream os;
    os << "chain p+q >= k1 >= q >= k2 >= 0 violated for (p=" << p << ", q=" << q
       << ", k1=" << k1 << ", k2=" << k2 << ")";
    throw ConstraintViolation(os.str());
  }
}

RatMatrix ReprAction::z() const { return RatMatrix::identity(dim()) * z_scalar; }
RatMatrix ReprAction::h_beta() const { return (z() - h_alpha) * Rational(1, 2); }
RatMatrix ReprAction::h_gamma() const { return (z() + h_alpha) * Rational(1, 2); }
RatMatrix ReprAction::h_tilde_1() const { return z() * Rational(1, 2) + h_alpha * Rational(3, 2); }
RatMatrix ReprAction::h_tilde_2() const { return z() * Rational(1, 2) - h_alpha * Rational(3, 2); }

Rational ReprAction::up_coupling(int i) const {
  return x_alpha.at_or_zero(i, i + 1) * x_minus_alpha.at_or_zero(i + 1, i);
}

Rational ReprAction::down_coupling(int i) const {
  return x_alpha.at_or_zero(i - 1, i) * x_minus_alpha.at_or_zero(i, i - 1);
}

ReprAction make_repr_action(int n, int ell) {
  if (ell < 0) throw ConstraintViolation("ell must be nonnegative");
  ReprAction ra;
  ra.n = n;
  ra.ell = ell;
  const std::size_t d = ra.dim();
  ra.h_alpha = RatMatrix(d, d);
  ra.x_alpha = RatMatrix(d, d);
  ra.x_minus_alpha = RatMatrix(d, d);
  for (int i = 0; i <= ell; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    ra.h_alpha(ui, ui) = ell - 2 * i;
    // Column i is the image of v_i.
    if (i >= 1) ra.x_alpha(ui - 1, ui) = ell - i + 1;
    if (i + 1 <= ell) ra.x_minus_alpha(ui + 1, ui) = i + 1;
  }
  ra.z_scalar = 2 * n + ell;
  return ra;
}

RestrictionParams index_to_restriction(const SFIndex& idx) {
  idx.validate();
  RestrictionParams rp;
  rp.k1 = idx.w + idx.n + idx.ell + idx.k;
  rp.k2 = idx.w + idx.n + idx.k;
  rp.p = idx.w + idx.ell - idx.k;
  rp.q = idx.w + idx.n + 2 * idx.k;
  return rp;
}

SFIndex restriction_to_index(const RestrictionParams& rp) {
  rp.validate();
  SFIndex idx;
  idx.ell = rp.k1 - rp.k2;
  idx.n = rp.k1 + 2 * rp.k2 - rp.p - 2 * rp.q;
  idx.k = rp.q - rp.k2;
  idx.w = rp.k2 - idx.n - idx.k;
  idx.validate();
  return idx;
}

CasimirPair casimir_eigenvalues(int p, int q) {
  if (p < 0 || q < 0) throw ConstraintViolation("highest weight labels must be nonnegative");
  const Rational P = p, Q = q;
  CasimirPair c;
  c.lambda_tilde = Rational(-4, 3) * (P * P + Q * Q + P * Q + 3 * P + 3 * Q);
  c.mu_tilde = 4 * (Rational(2, 9) * P * P * P - Rational(2, 9) * Q * Q * Q + Rational(1, 3) * P * P * Q -
                    Rational(1, 3) * P * Q * Q + 2 * P * P + P * Q + 4 * P + 2 * Q);
  return c;
}

Rational lambda_of(int n, int ell, int w, int k) {
  return Rational(-static_cast<long>(w) * (w + n + ell + k + 2) - static_cast<long>(k) * (n + k + 1));
}

Rational mu_of_lambda(int n, int ell, int k, const Rational& lambda) {
  return lambda * (n - ell + 3 * k) - Rational(3L * k * (ell - k + 1) * (n + k + 1));
}

EigenPair eigen_from_raw(int n, int ell, int w, int k) {
  const Rational lam = lambda_of(n, ell, w, k);
  return {lam, mu_of_lambda(n, ell, k, lam)};
}

EigenPair eigen_from_index(const SFIndex& idx) {
  idx.validate();
  return eigen_from_raw(idx.n, idx.ell, idx.w, idx.k);
}

int reflected_w(int n, int ell, int w, int k) { return -(w + n + ell + k + 2); }

int canonical_w(int n, int ell, int w, int k) { return std::max(w, reflected_w(n, ell, w, k)); }

KCasimirScalars kcasimir_scalars(int n, int ell) {
  const ReprAction ra = make_repr_action(n, ell);
  const RatMatrix& h = ra.h_alpha;
  const RatMatrix hb = ra.h_beta();
  const RatMatrix z = ra.z();
  const RatMatrix xx = ra.x_minus_alpha * ra.x_alpha;

  const RatMatrix d2 = Rational(-1) * (h * h) - Rational(1, 3) * (z * z) - Rational(2) * h - Rational(2) * z -
                       Rational(4) * xx;
  const RatMatrix d3 = Rational(8, 9) * (h * h * h) - Rational(8, 9) * (hb * hb * hb) +
                       Rational(4, 3) * (h * h * hb) - Rational(4, 3) * (h * hb * hb) + Rational(8) * (h * h) +
                       Rational(4) * (h * hb) + Rational(16) * h + Rational(8) * hb + Rational(4) * (xx * h) +
                       Rational(8) * (xx * hb) + Rational(24) * xx;

  // Both lie in the center of D(K), so on an irreducible K-type they must be
  // scalar; check every basis vector separately.
  KCasimirScalars out{d2(0, 0), d3(0, 0)};
  for (std::size_t i = 0; i < ra.dim(); ++i)
    for (std::size_t j = 0; j < ra.dim(); ++j) {
      const Rational e2 = i == j ? out.d2k : Rational(0);
      const Rational e3 = i == j ? out.d3k : Rational(0);
      if (d2(i, j) != e2 || d3(i, j) != e3)
        throw ConsistencyError("K-Casimir is not scalar on the K-type (n=" + std::to_string(n) +
                               ", ell=" + std::to_string(ell) + ")");
    }
  return out;
}

EigenPair to_radial(const EigenPair& scaled) { return {4 * scaled.lambda, 4 * scaled.mu}; }

CasimirPair to_casimir(const EigenPair& scaled, int n, int ell) {
  const auto k = kcasimir_scalars(n, ell);
  return {4 * scaled.lambda + k.d2k, 4 * scaled.mu - 12 * scaled.lambda + k.d3k};
}

}  // namespace su3sf
