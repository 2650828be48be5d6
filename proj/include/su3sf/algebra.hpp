// Exact rational linear algebra and univariate polynomials.
//
// Everything in the library that claims an identity does so in these types;
// floating point only enters through the explicit *_approx evaluation paths.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace su3sf {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Canonical "p/q" (or "p") text form used by every serializer.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);
Rational abs(const Rational& q);

bool is_zero(const RatVector& v);
RatVector scaled(const RatVector& v, const Rational& s);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(const RatVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Entry lookup that returns zero outside the index range; convenient for
  /// banded formulas that reach past the edges.
  Rational at_or_zero(long i, long j) const;

  RatMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatVector operator*(const RatVector& v) const;
  RatMatrix operator*(const Rational& s) const;
  bool operator==(const RatMatrix& o) const;

  /// Width of the band: largest |i-j| over nonzero entries below (lower) and
  /// above (upper) the diagonal.
  std::size_t lower_bandwidth() const;
  std::size_t upper_bandwidth() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator*(const Rational& s, const RatMatrix& m);

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);
std::size_t rank(RatMatrix m);
Rational determinant(RatMatrix m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
/// Basis of the right nullspace, one vector per free column.
std::vector<RatVector> nullspace(RatMatrix m);

/// Univariate polynomial with rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RatVector coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const RatVector& coeffs() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  Polynomial derivative() const;
  /// p(x + s).
  Polynomial shifted(const Rational& s) const;
  Polynomial monic() const;
  /// Multiplication by x^k.
  Polynomial times_power(std::size_t k) const;

  /// Euclidean division; throws on a zero divisor.
  static void divide(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem);
  /// Monic gcd (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

 private:
  void trim();
  RatVector c_;
};

/// Coefficients of det(x I - m), lowest degree first (Faddeev-LeVerrier).
Polynomial characteristic_polynomial(const RatMatrix& m);

/// Expands prod_k (x - roots[k]).
Polynomial from_roots(const RatVector& roots);

/// Rising factorial (a)_j.
Rational pochhammer(const Rational& a, long j);
Rational binomial(long n, long k);

}  // namespace su3sf
