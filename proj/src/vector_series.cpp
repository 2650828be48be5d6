#include "su3sf/vector_series.hpp"

#include <stdexcept>

#include "su3sf/errors.hpp"

namespace su3sf {

VectorSeries::VectorSeries(int ell, std::vector<RatVector> coeffs) : ell_(ell), coeffs_(std::move(coeffs)) {
  if (ell < 0) throw ConstraintViolation("ell must be nonnegative");
  for (const auto& h : coeffs_)
    if (h.size() != dim()) throw std::invalid_argument("series coefficient has wrong length");
}

VectorSeries VectorSeries::zero(int ell, std::size_t truncation) {
  return VectorSeries(ell, std::vector<RatVector>(truncation + 1, RatVector(static_cast<std::size_t>(ell) + 1)));
}

RatVector VectorSeries::coeff(long j) const {
  if (j < 0) return RatVector(dim(), Rational(0));
  if (static_cast<std::size_t>(j) < coeffs_.size()) return coeffs_[static_cast<std::size_t>(j)];
  if (terminates() || is_zero()) return RatVector(dim(), Rational(0));
  throw InsufficientTruncation("coefficient t^" + std::to_string(j) + " is beyond the truncation order " +
                               std::to_string(truncation()) + " of a non-terminating series");
}

bool VectorSeries::is_zero() const {
  for (const auto& h : coeffs_)
    if (!su3sf::is_zero(h)) return false;
  return true;
}

long VectorSeries::leading_order() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (!su3sf::is_zero(coeffs_[j])) return static_cast<long>(j);
  return -1;
}

long VectorSeries::degree() const {
  for (std::size_t j = coeffs_.size(); j-- > 0;)
    if (!su3sf::is_zero(coeffs_[j])) return static_cast<long>(j);
  return -1;
}

bool VectorSeries::terminates() const {
  if (coeffs_.size() < 2) return false;
  return su3sf::is_zero(coeffs_[coeffs_.size() - 1]) && su3sf::is_zero(coeffs_[coeffs_.size() - 2]);
}

Polynomial VectorSeries::component(int i) const {
  RatVector c;
  c.reserve(coeffs_.size());
  for (const auto& h : coeffs_) c.push_back(h[static_cast<std::size_t>(i)]);
  return Polynomial(std::move(c));
}

long VectorSeries::component_order(int i) const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j][static_cast<std::size_t>(i)] != 0) return static_cast<long>(j);
  return -1;
}

VectorSeries VectorSeries::scaled(const Rational& s) const {
  std::vector<RatVector> out;
  out.reserve(coeffs_.size());
  for (const auto& h : coeffs_) out.push_back(su3sf::scaled(h, s));
  return VectorSeries(ell_, std::move(out));
}

VectorSeries VectorSeries::truncated(std::size_t n) const {
  std::vector<RatVector> out(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(n + 1, coeffs_.size())));
  return VectorSeries(ell_, std::move(out));
}

}  // namespace su3sf
