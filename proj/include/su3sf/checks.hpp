// Exact invariant checks over parameter grids, shared by the command-line
// `verify` command. Each check returns a report instead of throwing, so that
// one bad grid point does not hide the others.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace su3sf {

struct IntRange {
  int lo = 0;
  int hi = 0;
  /// "a..b" or a single integer.
  static IntRange parse(const std::string& text);
  bool empty() const { return hi < lo; }
};

struct CheckReport {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  void fail(std::string what) {
    pass = false;
    failures.push_back(std::move(what));
  }
};

struct Grid {
  IntRange n{0, 3};
  IntRange ell{0, 4};
  IntRange w{0, 5};
};

/// char poly of L(lambda) = prod_k (x - mu_k(lambda)) and the band formulas
/// agree with the product form, at `samples` seeded random rational lambdas.
CheckReport check_l_spectrum(IntRange n, IntRange ell, int samples, std::uint64_t seed);
/// Zero D and E recursion defects, termination, leading order, zero pattern.
CheckReport check_joint_defect(const Grid& g);
/// Closed forms agree with the solver up to one scalar (ell <= 2 part of g).
CheckReport check_closed_forms(const Grid& g);
/// Psi_{n,ell} is a radial eigenfunction with the stated eigenvalues (n <= 0 part).
CheckReport check_psi(IntRange n, IntRange ell);
/// Components agree at t = 1 and normalize to all ones.
CheckReport check_scalarity(const Grid& g);
/// Gram matrices over w <= w_max are diagonal with positive diagonal.
CheckReport check_orthogonality(const std::vector<std::pair<int, int>>& n_ell, int w_max);
/// Bispectral identity, forward generation and C_w invertibility for ell = 2.
CheckReport check_bispectral(IntRange n, IntRange w);
/// Casimir eigenvalues from (p, q) equal the converted (lambda, mu).
CheckReport check_casimir(const Grid& g);
/// Boundary condition at t = 0 for every spherical solution.
CheckReport check_boundary(const Grid& g);

/// Named suite: "all", "lspectrum", "defect", "closed", "psi", "scalar",
/// "gram", "bispectral", "casimir", "boundary".
std::vector<CheckReport> run_suite(const std::string& suite, const Grid& g);

}  // namespace su3sf
