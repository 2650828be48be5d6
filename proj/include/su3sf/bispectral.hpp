// The matrix three-term recursion in w for ell = 2, n >= 0:
//
//   A_w Phi(w-1, t) + B_w Phi(w, t) + C_w Phi(w+1, t) = t Phi(w, t)
//
// where row k of Phi(w, t) is the k-branch spherical function normalized so
// that Phi(w, 1) is all ones. The entry formulas are 1-based
// (i = 1..3); storage here is 0-based, so formula index i sits at i-1.

#pragma once

#include <optional>
#include <vector>

#include "su3sf/algebra.hpp"

namespace su3sf {

/// Dense matrix of polynomials in t.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix times_t() const;
  RatMatrix at(const Rational& t) const;
  /// Largest |coefficient| over all entries; zero certifies the zero matrix.
  Rational max_abs_coeff() const;
  bool operator==(const PolyMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> data_;
};

PolyMatrix operator*(const RatMatrix& m, const PolyMatrix& p);

struct BispectralTriple {
  int n = 0;
  int w = 0;
  RatMatrix a, b, c;
};

/// Phi(w, t) for general ell (rows k = 0..ell), normalized at t = 1.
PolyMatrix phi_matrix(int n, int ell, int w);

/// Diagonal eigenvalue matrices of D and E on the columns of Phi(w, t)^T,
/// read from the 1-based formulas.
RatVector phi_lambda(int n, int ell, int w);
RatVector phi_mu(int n, int ell, int w);

/// The closed-form ell = 2 matrices. Requires n, w >= 0.
BispectralTriple bispectral_matrices(int n, int w);

/// A_w Phi(w-1) + B_w Phi(w) + C_w Phi(w+1) - t Phi(w) for ell = 2; the A
/// term is dropped at w = 0.
PolyMatrix bispectral_defect(int n, int w);
Rational verify_bispectral(int n, int w);

/// C_w^{-1}(t Phi(w) - B_w Phi(w) - A_w Phi(w-1)).
PolyMatrix forward_generate(int n, int w);

/// Solves the recursion for matrices with the same band structure directly
/// from Phi(w-1), Phi(w), Phi(w+1), for any ell. Returns nullopt when no
/// solution exists or it is not unique.
std::optional<BispectralTriple> solve_bispectral_matrices(int n, int ell, int w);

}  // namespace su3sf
