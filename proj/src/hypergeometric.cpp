#include <algorithm>

#include "su3sf/errors.hpp"
#include "su3sf/series.hpp"

namespace su3sf {

namespace {

bool nonpositive_integer(const Rational& x) { return x.get_den() == 1 && x <= 0; }

}  // namespace

HypergeometricSpec HypergeometricSpec::gauss(const Rational& prefactor, int power_offset, const Rational& a,
                                             const Rational& b, const Rational& c) {
  HypergeometricSpec s;
  s.prefactor = prefactor;
  s.power_offset = power_offset;
  s.a = a;
  s.b = b;
  s.c = c;
  return s;
}

HypergeometricSpec& HypergeometricSpec::shift(const Rational& s) {
  if (s == 0) throw ConstraintViolation("shifted parameter s = 0 has no normalized form");
  multiplier = multiplier * Polynomial{Rational(1), Rational(1) / s};
  return *this;
}

HypergeometricSpec& HypergeometricSpec::shift_pair(const Rational& sum, const Rational& product) {
  if (product == 0) {
    multiplier = multiplier * Polynomial{Rational(0), sum, Rational(1)};
    return *this;
  }
  multiplier = multiplier * Polynomial{Rational(1), sum / product, Rational(1) / product};
  return *this;
}

RatVector HypergeometricSpec::d() const {
  if (!normalized()) throw ConstraintViolation("multiplier is not normalized to P(0) = 1");
  RatVector out;
  for (long m = 1; m <= multiplier.degree(); ++m) out.push_back(multiplier.coeff(static_cast<std::size_t>(m)));
  return out;
}

bool HypergeometricSpec::terminating() const { return nonpositive_integer(a) || nonpositive_integer(b); }

std::optional<long> HypergeometricSpec::termination_length() const {
  std::optional<long> len;
  for (const Rational* x : {&a, &b})
    if (nonpositive_integer(*x)) {
      const long l = 1 - x->get_num().get_si();
      len = len ? std::min(*len, l) : l;
    }
  return len;
}

RatVector hypergeometric_coeffs(const HypergeometricSpec& spec, std::size_t N) {
  RatVector out(N + 1, Rational(0));
  Rational term = spec.prefactor;
  for (long j = 0;; ++j) {
    const long pos = spec.power_offset + j;
    if (pos > static_cast<long>(N)) break;
    if (pos >= 0) out[static_cast<std::size_t>(pos)] = term * spec.multiplier(Rational(j));
    else if (term * spec.multiplier(Rational(j)) != 0)
      throw ConstraintViolation("hypergeometric series has a nonzero term at negative power t^" +
                                std::to_string(pos));
    const Rational num = (spec.a + j) * (spec.b + j);
    if (num == 0) break;
    const Rational den = (spec.c + j) * Rational(j + 1);
    if (den == 0)
      throw ConstraintViolation("lower parameter c = " + to_string(spec.c) + " meets (c)_j = 0 at j = " +
                                std::to_string(j + 1) + " before the series terminates");
    term = term * num / den;
  }
  return out;
}

std::optional<Rational> hypergeometric_term_ratio(const HypergeometricSpec& spec, long j) {
  const Rational den = (spec.c + j) * Rational(j + 1) * spec.multiplier(Rational(j));
  if (den == 0) return std::nullopt;
  return (spec.a + j) * (spec.b + j) * spec.multiplier(Rational(j + 1)) / den;
}

}  // namespace su3sf
