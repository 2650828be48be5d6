#pragma once

#include <vector>

#include "su3sf/algebra.hpp"

namespace su3sf {

/// Truncated power series H(t) = sum_{j=0}^{N} t^j H_j with H_j in Q^{ell+1}.
///
/// Coefficients are stored from j = 0 even when the leading order is
/// positive; the low coefficients are then exact zeros.
class VectorSeries {
 public:
  VectorSeries() = default;
  VectorSeries(int ell, std::vector<RatVector> coeffs);
  static VectorSeries zero(int ell, std::size_t truncation);

  int ell() const { return ell_; }
  std::size_t dim() const { return static_cast<std::size_t>(ell_) + 1; }
  /// N, the highest stored power.
  std::size_t truncation() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<RatVector>& coeffs() const { return coeffs_; }
  const RatVector& operator[](std::size_t j) const { return coeffs_[j]; }

  /// H_j; zero past the truncation only when the series terminates, otherwise
  /// throws InsufficientTruncation.
  RatVector coeff(long j) const;
  Rational entry(int i, long j) const { return coeff(j)[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  /// Smallest j with H_j != 0; -1 for the zero series.
  long leading_order() const;
  /// Largest j with H_j != 0; -1 for the zero series.
  long degree() const;
  /// True when the two highest stored coefficients vanish, so that a
  /// three-term recursion continues the series by zeros.
  bool terminates() const;

  Polynomial component(int i) const;
  /// Smallest j with H_{i,j} != 0; -1 if the component vanishes.
  long component_order(int i) const;

  VectorSeries scaled(const Rational& s) const;
  /// Copy with all coefficients above `n` dropped.
  VectorSeries truncated(std::size_t n) const;

  bool operator==(const VectorSeries& o) const = default;

 private:
  int ell_ = 0;
  std::vector<RatVector> coeffs_;
};

}  // namespace su3sf
