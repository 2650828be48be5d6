#include "su3sf/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "su3sf/errors.hpp"

namespace su3sf {

namespace {

// E_{i,j} accumulation that ignores indices outside 0..ell.
void add_entry(RatMatrix& m, long i, long j, const Rational& v) {
  const long d = static_cast<long>(m.rows());
  if (i < 0 || j < 0 || i >= d || j >= d) return;
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += v;
}

Rational max_abs(const RatVector& v) {
  Rational m = 0;
  for (const auto& x : v) m = std::max(m, abs(x));
  return m;
}

}  // namespace

CoefficientMatrices build_coefficient_matrices(int n, int ell) {
  if (ell < 0) throw ConstraintViolation("ell must be nonnegative");
  const auto d = static_cast<std::size_t>(ell) + 1;
  CoefficientMatrices cm;
  cm.n = n;
  cm.ell = ell;
  for (RatMatrix* m : {&cm.a0, &cm.a1, &cm.b0, &cm.b1, &cm.m, &cm.c0, &cm.c1, &cm.d0, &cm.d1}) *m = RatMatrix(d, d);

  for (long i = 0; i <= ell; ++i) {
    const long up = (i + 1) * (ell - i);    // (i+1)(ell-i)
    const long down = i * (ell - i + 1);    // i(ell-i+1)
    const long shift = n - ell + 3 * i;     // n-ell+3i
    const long a0 = n + ell - i + 1;
    const long a1 = n + ell - i + 3;

    add_entry(cm.a0, i, i, a0);
    add_entry(cm.a1, i, i, a1);

    add_entry(cm.b0, i, i + 1, up);
    add_entry(cm.b0, i, i, -up);
    add_entry(cm.b1, i, i, down);
    add_entry(cm.b1, i, i - 1, -down);

    add_entry(cm.m, i, i, shift);

    add_entry(cm.c0, i, i, shift * a0);
    add_entry(cm.c0, i, i + 1, -3 * up);
    add_entry(cm.c1, i, i, shift * a1);
    add_entry(cm.c1, i, i - 1, -3 * down);

    const long e0 = (n + 2 * ell - 3 * i) * up;
    add_entry(cm.d0, i, i + 1, e0);
    add_entry(cm.d0, i, i, -e0);
    const long e1 = -3 * a0 * down;
    add_entry(cm.d0, i, i, e1);
    add_entry(cm.d0, i, i - 1, -e1);

    const long f1 = (2 * n + ell + 3) * down;
    add_entry(cm.d1, i, i, f1);
    add_entry(cm.d1, i, i - 1, -f1);
  }
  return cm;
}

RatVector recursion_step_D(const CoefficientMatrices& cm, const Rational& lambda, long j, const RatVector& h_prev,
                           const RatVector& h_cur) {
  const std::size_t d = cm.a0.rows();
  if (h_prev.size() != d || h_cur.size() != d) throw std::invalid_argument("recursion vectors have wrong length");
  const RatMatrix id = RatMatrix::identity(d);
  const RatMatrix cur = id * Rational(2 * j * (j - 1)) + (cm.a0 + cm.a1) * Rational(j) - cm.b0 + id * lambda;
  const RatMatrix prev = id * Rational((j - 1) * (j - 2)) + cm.a1 * Rational(j - 1) - cm.b1 + id * lambda;
  RatVector rhs = cur * h_cur - prev * h_prev;
  RatVector next(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Rational lead = Rational(j + 1) * (Rational(j) + cm.a0(i, i));
    if (lead == 0) {
      throw SingularStep("D-recursion leading coefficient vanishes at j=" + std::to_string(j) + ", component i=" +
                             std::to_string(i) + " (j + n + ell - i + 1 = 0)",
                         static_cast<long>(i));
    }
    next[i] = rhs[i] / lead;
  }
  return next;
}

RatVector defect_D(const CoefficientMatrices& cm, const Rational& lambda, const VectorSeries& s, long j) {
  const std::size_t d = cm.a0.rows();
  const RatMatrix id = RatMatrix::identity(d);
  const RatMatrix prev = id * Rational((j - 1) * (j - 2)) + cm.a1 * Rational(j - 1) - cm.b1 + id * lambda;
  const RatMatrix cur = id * Rational(2 * j * (j - 1)) + (cm.a0 + cm.a1) * Rational(j) - cm.b0 + id * lambda;
  const RatMatrix next = (id * Rational(j) + cm.a0) * Rational(j + 1);
  return prev * s.coeff(j - 1) - cur * s.coeff(j) + next * s.coeff(j + 1);
}

RatVector defect_E(const CoefficientMatrices& cm, const Rational& mu, const VectorSeries& s, long j) {
  const std::size_t d = cm.a0.rows();
  const RatMatrix id = RatMatrix::identity(d);
  const RatMatrix prev = cm.m * Rational((j - 1) * (j - 2)) + cm.c1 * Rational(j - 1) + cm.d1 + id * mu;
  const RatMatrix next = (cm.m * Rational(j) + cm.c0) * Rational(j + 1);
  const RatMatrix cur = cm.m * Rational(2 * j * (j - 1)) + (cm.c0 + cm.c1) * Rational(j) - cm.d0 + id * mu;
  return prev * s.coeff(j - 1) + next * s.coeff(j + 1) - cur * s.coeff(j);
}

Rational residual_D(const CoefficientMatrices& cm, const Rational& lambda, const VectorSeries& s, long j_max) {
  Rational worst = 0;
  for (long j = 0; j <= j_max; ++j) worst = std::max(worst, max_abs(defect_D(cm, lambda, s, j)));
  return worst;
}

Rational residual_E(const CoefficientMatrices& cm, const Rational& mu, const VectorSeries& s, long j_max) {
  Rational worst = 0;
  for (long j = 0; j <= j_max; ++j) worst = std::max(worst, max_abs(defect_E(cm, mu, s, j)));
  return worst;
}

// ------------------------------------------------------------ RadialFunction

RadialFunction::RadialFunction(int alpha, std::map<int, Rational> terms) : alpha_(alpha), terms_(std::move(terms)) {
  trim();
}

RadialFunction RadialFunction::from(const RadialPoly& p) {
  std::map<int, Rational> t;
  for (std::size_t m = 0; m < p.coeffs.size(); ++m)
    if (p.coeffs[m] != 0) t[2 * static_cast<int>(m)] = p.coeffs[m];
  return RadialFunction(p.alpha, std::move(t));
}

void RadialFunction::trim() {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

RadialFunction RadialFunction::derivative() const {
  // d/dr [u^a F] = u^{a-1} (2a r F + u F'),  u = 1 + r^2.
  std::map<int, Rational> out;
  for (const auto& [e, c] : terms_) {
    out[e + 1] += 2 * alpha_ * c;
    if (e != 0) {
      out[e - 1] += c * e;
      out[e + 1] += c * e;
    }
  }
  return RadialFunction(alpha_ - 1, std::move(out));
}

RadialFunction RadialFunction::times(const Rational& c, int r_power, int u_power) const {
  std::map<int, Rational> out;
  for (const auto& [e, v] : terms_) out[e + r_power] = v * c;
  return RadialFunction(alpha_ + u_power, std::move(out));
}

RadialFunction RadialFunction::with_alpha(int target) const {
  if (target > alpha_) throw std::invalid_argument("with_alpha can only lower the (1+r^2) exponent");
  const int k = alpha_ - target;
  std::map<int, Rational> out;
  for (const auto& [e, v] : terms_)
    for (int m = 0; m <= k; ++m) out[e + 2 * m] += v * binomial(k, m);
  return RadialFunction(target, std::move(out));
}

RadialFunction RadialFunction::operator+(const RadialFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int a = std::min(alpha_, o.alpha_);
  RadialFunction x = with_alpha(a);
  const RadialFunction y = o.with_alpha(a);
  for (const auto& [e, v] : y.terms_) x.terms_[e] += v;
  x.trim();
  return x;
}

RadialFunction RadialFunction::operator-(const RadialFunction& o) const { return *this + o * Rational(-1); }

RadialFunction RadialFunction::operator*(const Rational& s) const { return times(s, 0, 0); }

Rational RadialFunction::eval(const Rational& r) const {
  if (r == 0) throw std::domain_error("exact radial evaluation at r = 0");
  Rational sum = 0;
  for (const auto& [e, v] : terms_) {
    Rational p = 1;
    for (int k = 0; k < std::abs(e); ++k) p *= r;
    sum += e >= 0 ? Rational(v * p) : Rational(v / p);
  }
  const Rational u = 1 + r * r;
  Rational up = 1;
  for (int k = 0; k < std::abs(alpha_); ++k) up *= u;
  return alpha_ >= 0 ? Rational(sum * up) : Rational(sum / up);
}

double RadialFunction::eval(double r) const {
  double sum = 0.0;
  for (const auto& [e, v] : terms_) sum += v.get_d() * std::pow(r, e);
  return sum * std::pow(1.0 + r * r, alpha_);
}

std::vector<RadialPoly> radial_components(const VectorSeries& s) {
  // sum_j c_j u^{-j} = u^{-N} sum_j c_j (1 + x)^{N-j},  x = r^2.
  const long deg = std::max<long>(s.degree(), 0);
  std::vector<RadialPoly> out;
  for (int i = 0; i <= s.ell(); ++i) {
    RadialPoly p;
    p.alpha = -static_cast<int>(deg);
    p.coeffs.assign(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (long j = 0; j <= deg && j < static_cast<long>(s.coeffs().size()); ++j) {
      const Rational c = s.entry(i, j);
      if (c == 0) continue;
      for (long m = 0; m <= deg - j; ++m) p.coeffs[static_cast<std::size_t>(m)] += c * binomial(deg - j, m);
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::vector<RadialFunction> as_functions(const std::vector<RadialPoly>& h) {
  std::vector<RadialFunction> out;
  out.reserve(h.size());
  for (const auto& p : h) out.push_back(RadialFunction::from(p));
  return out;
}

const RadialFunction& component_or_zero(const std::vector<RadialFunction>& h, long i) {
  static const RadialFunction zero;
  if (i < 0 || i >= static_cast<long>(h.size())) return zero;
  return h[static_cast<std::size_t>(i)];
}

void check_size(const ReprAction& ra, std::size_t n) {
  if (n != ra.dim()) throw std::invalid_argument("radial operator needs ell+1 components");
}

// (u/r)(3 + r^2 - 2 r^2 g) f
RadialFunction first_order_term(const RadialFunction& f, const Rational& g) {
  return f.times(3, -1, 1) + f.times(1 - 2 * g, 1, 1);
}

// (4u/r^2)(up (h_{i+1} - h_i) + down (h_{i-1} - h_i))
RadialFunction coupling_term(const RadialFunction& next, const RadialFunction& cur, const RadialFunction& prev,
                             const Rational& up, const Rational& down) {
  const RadialFunction inner = (next - cur) * up + (prev - cur) * down;
  return inner.times(4, -2, 1);
}

}  // namespace

std::vector<RadialFunction> radial_apply_D(const ReprAction& ra, const std::vector<RadialFunction>& h) {
  check_size(ra, h.size());
  const RatMatrix hg = ra.h_gamma();
  std::vector<RadialFunction> out;
  for (long i = 0; i <= ra.ell; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const RadialFunction& cur = h[ui];
    const RadialFunction& prev = component_or_zero(h, i - 1);
    const RadialFunction& next = component_or_zero(h, i + 1);
    const Rational up = ra.up_coupling(static_cast<int>(i));
    const Rational down = ra.down_coupling(static_cast<int>(i));
    const RadialFunction d1 = cur.derivative();
    const RadialFunction d2 = d1.derivative();

    RadialFunction lhs = d2.times(1, 0, 2) + first_order_term(d1, hg(ui, ui)) - (prev - cur) * (4 * down) +
                         coupling_term(next, cur, prev, up, down);
    out.push_back(std::move(lhs));
  }
  return out;
}

std::vector<RadialFunction> radial_apply_D(const ReprAction& ra, const std::vector<RadialPoly>& h) {
  return radial_apply_D(ra, as_functions(h));
}

std::vector<RadialFunction> radial_apply_E(const ReprAction& ra, const std::vector<RadialFunction>& h) {
  check_size(ra, h.size());
  const RatMatrix hg = ra.h_gamma();
  const RatMatrix t1 = ra.h_tilde_1();
  const RatMatrix t2 = ra.h_tilde_2();
  std::vector<RadialFunction> out;
  for (long i = 0; i <= ra.ell; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const RadialFunction& cur = h[ui];
    const RadialFunction& prev = component_or_zero(h, i - 1);
    const RadialFunction& next = component_or_zero(h, i + 1);
    const Rational up = ra.up_coupling(static_cast<int>(i));
    const Rational down = ra.down_coupling(static_cast<int>(i));
    const Rational m = t2(ui, ui);   // n - ell + 3i
    const Rational nt = t1(ui, ui);  // n + 2 ell - 3i
    const RadialFunction d1 = cur.derivative();
    const RadialFunction d2 = d1.derivative();

    RadialFunction lhs = d2.times(m, 0, 2) + next.derivative().times(6 * up, -1, 2) -
                         prev.derivative().times(6 * down, -1, 1) + first_order_term(d1, hg(ui, ui)) * m +
                         coupling_term(next, cur, prev, up, down) * nt +
                         (prev - cur) * (4 * down * (ra.z_scalar + 3));
    out.push_back(std::move(lhs));
  }
  return out;
}

std::vector<RadialFunction> radial_apply_E(const ReprAction& ra, const std::vector<RadialPoly>& h) {
  return radial_apply_E(ra, as_functions(h));
}

bool is_radial_eigenfunction(const std::vector<RadialFunction>& out, const std::vector<RadialPoly>& h,
                             const Rational& eigenvalue) {
  if (out.size() != h.size()) return false;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!out[i].equals(RadialFunction::from(h[i]) * eigenvalue)) return false;
  return true;
}

}  // namespace su3sf
