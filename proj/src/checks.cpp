#include "su3sf/checks.hpp"

#include <random>
#include <stdexcept>

#include "su3sf/analysis.hpp"
#include "su3sf/bispectral.hpp"
#include "su3sf/eigen.hpp"
#include "su3sf/errors.hpp"
#include "su3sf/operators.hpp"
#include "su3sf/series.hpp"

namespace su3sf {

IntRange IntRange::parse(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (hi < lo) throw ConstraintViolation("empty range " + text);
    return {lo, hi};
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ConstraintViolation*>(&e)) throw;
    throw ConstraintViolation("cannot parse range '" + text + "' (expected an integer or a..b)");
  }
}

namespace {

std::string label(const SFIndex& idx) {
  return "(n=" + std::to_string(idx.n) + ", ell=" + std::to_string(idx.ell) + ", w=" + std::to_string(idx.w) +
         ", k=" + std::to_string(idx.k) + ")";
}

template <typename F>
void for_each_index(const Grid& g, int ell_cap, F&& f) {
  for (int n = g.n.lo; n <= g.n.hi; ++n)
    for (int ell = g.ell.lo; ell <= std::min(g.ell.hi, ell_cap); ++ell)
      for (int w = g.w.lo; w <= g.w.hi; ++w)
        for (int k = 0; k <= ell; ++k) {
          const SFIndex idx{n, ell, w, k};
          if (idx.admissible()) f(idx);
        }
}

template <typename F>
void guarded(CheckReport& rep, const std::string& where, F&& f) {
  ++rep.cases;
  try {
    f();
  } catch (const std::exception& e) {
    rep.fail(where + ": " + e.what());
  }
}

bool proportional(const VectorSeries& a, const VectorSeries& b) {
  if (a.dim() != b.dim() || a.truncation() != b.truncation()) return false;
  Rational ratio;
  bool have = false;
  for (std::size_t j = 0; j <= a.truncation(); ++j)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Rational &x = a[j][i], &y = b[j][i];
      if (x == 0 && y == 0) continue;
      if (x == 0 || y == 0) return false;
      if (!have) {
        ratio = x / y;
        have = true;
      } else if (x / y != ratio) {
        return false;
      }
    }
  return have;
}

}  // namespace

CheckReport check_l_spectrum(IntRange n, IntRange ell, int samples, std::uint64_t seed) {
  CheckReport rep{"L(lambda) spectrum", true, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 17);
  for (int nn = std::max(n.lo, 0); nn <= n.hi; ++nn)
    for (int l = ell.lo; l <= ell.hi; ++l)
      for (int s = 0; s < samples; ++s) {
        Rational lam(num(rng), den(rng));
        lam.canonicalize();
        guarded(rep, "n=" + std::to_string(nn) + ", ell=" + std::to_string(l) + ", lambda=" + to_string(lam), [&] {
          const LMatrix lm = build_L(nn, l, lam);
          if (characteristic_polynomial(lm.entries) != from_roots(mu_spectrum(nn, l, lam)))
            throw ConsistencyError("characteristic polynomial differs from prod (x - mu_k)");
          if (!(l_from_bands(nn, l, lam) == lm.entries)) throw ConsistencyError("band formulas differ from product form");
          if (lm.entries.lower_bandwidth() > 1 || lm.entries.upper_bandwidth() > 2)
            throw ConsistencyError("L is not four-diagonal");
        });
      }
  return rep;
}

CheckReport check_joint_defect(const Grid& g) {
  CheckReport rep{"joint eigen defect", true, 0, {}};
  for_each_index(g, 1 << 20, [&](const SFIndex& idx) {
    guarded(rep, label(idx), [&] {
      const VectorSeries s = series_solution(idx);
      const CoefficientMatrices cm = build_coefficient_matrices(idx.n, idx.ell);
      const EigenPair ep = eigen_from_index(idx);
      const long top = static_cast<long>(s.truncation()) - 1;
      if (residual_D(cm, ep.lambda, s, top) != 0) throw ConsistencyError("nonzero D defect");
      if (residual_E(cm, ep.mu, s, top) != 0) throw ConsistencyError("nonzero E defect");
      if (!s.terminates()) throw ConsistencyError("series does not terminate");
      if (s.leading_order() != expected_leading_order(idx.n, idx.ell))
        throw ConsistencyError("leading order " + std::to_string(s.leading_order()));
      if (!structural_zero_violations(s, idx.n).empty()) throw ConsistencyError("structural zero pattern violated");
    });
  });
  return rep;
}

CheckReport check_closed_forms(const Grid& g) {
  CheckReport rep{"closed forms (ell <= 2)", true, 0, {}};
  for_each_index(g, 2, [&](const SFIndex& idx) {
    guarded(rep, label(idx), [&] {
      const VectorSeries s = series_solution(idx);
      if (!proportional(s, closed_form_series(idx, s.truncation())))
        throw ConsistencyError("closed form " + closed_form_case(idx) + " is not proportional to the solver series");
    });
  });
  return rep;
}

CheckReport check_psi(IntRange n, IntRange ell) {
  CheckReport rep{"Psi eigenfunctions", true, 0, {}};
  for (int nn = n.lo; nn <= std::min(n.hi, 0); ++nn)
    for (int l = ell.lo; l <= ell.hi; ++l)
      guarded(rep, "n=" + std::to_string(nn) + ", ell=" + std::to_string(l), [&] {
        const auto psi = psi_closed_form(nn, l);
        const ReprAction ra = make_repr_action(nn, l);
        const EigenPair ev = psi_radial_eigenvalues(nn, l);
        if (!is_radial_eigenfunction(radial_apply_D(ra, psi), psi, ev.lambda))
          throw ConsistencyError("D Psi != 4n(ell+2) Psi");
        if (!is_radial_eigenfunction(radial_apply_E(ra, psi), psi, ev.mu))
          throw ConsistencyError("E Psi != 4n(ell+2)(n-ell) Psi");
      });
  return rep;
}

CheckReport check_scalarity(const Grid& g) {
  CheckReport rep{"scalarity at t = 1", true, 0, {}};
  for_each_index(g, 1 << 20, [&](const SFIndex& idx) {
    guarded(rep, label(idx), [&] {
      const VectorSeries h = normalize_at_one(series_solution(idx));
      for (const auto& v : evaluate_series(h, Rational(1)))
        if (v != 1) throw ConsistencyError("normalized value is not all ones");
    });
  });
  return rep;
}

CheckReport check_orthogonality(const std::vector<std::pair<int, int>>& n_ell, int w_max) {
  CheckReport rep{"orthogonality", true, 0, {}};
  for (const auto& [n, ell] : n_ell)
    guarded(rep, "n=" + std::to_string(n) + ", ell=" + std::to_string(ell), [&] {
      const GramReport gr = gram_matrix(n, ell, w_max);
      if (!gr.orthogonal) throw ConsistencyError("nonzero inner product between distinct eigenvalue pairs");
      if (gr.max_offdiag != 0) throw ConsistencyError("Gram matrix is not diagonal");
      if (!gr.positive) throw ConsistencyError("nonpositive norm");
    });
  return rep;
}

CheckReport check_bispectral(IntRange n, IntRange w) {
  CheckReport rep{"bispectral recursion (ell = 2)", true, 0, {}};
  for (int nn = std::max(n.lo, 0); nn <= n.hi; ++nn)
    for (int ww = std::max(w.lo, 0); ww <= w.hi; ++ww)
      guarded(rep, "n=" + std::to_string(nn) + ", w=" + std::to_string(ww), [&] {
        if (verify_bispectral(nn, ww) != 0) throw ConsistencyError("nonzero defect");
        if (determinant(bispectral_matrices(nn, ww).c) == 0) throw ConsistencyError("C_w singular");
        if (!(forward_generate(nn, ww) == phi_matrix(nn, 2, ww + 1)))
          throw ConsistencyError("forward generation differs from Phi(w+1)");
      });
  return rep;
}

CheckReport check_casimir(const Grid& g) {
  CheckReport rep{"Casimir chain", true, 0, {}};
  for_each_index(g, 1 << 20, [&](const SFIndex& idx) {
    guarded(rep, label(idx), [&] {
      const RestrictionParams rp = index_to_restriction(idx);
      if (!(restriction_to_index(rp) == idx)) throw ConsistencyError("index maps are not inverse");
      if (!(casimir_eigenvalues(rp.p, rp.q) == to_casimir(eigen_from_index(idx), idx.n, idx.ell)))
        throw ConsistencyError("Casimir eigenvalues disagree");
    });
  });
  return rep;
}

CheckReport check_boundary(const Grid& g) {
  CheckReport rep{"boundary condition", true, 0, {}};
  for_each_index(g, 1 << 20, [&](const SFIndex& idx) {
    guarded(rep, label(idx), [&] {
      if (!boundary_check(series_solution(idx), idx.n, idx.ell).pass) throw ConsistencyError("boundary condition fails");
    });
  });
  return rep;
}

std::vector<CheckReport> run_suite(const std::string& suite, const Grid& g) {
  const bool all = suite == "all";
  std::vector<CheckReport> out;
  bool known = all;
  auto want = [&](const char* name) {
    const bool hit = all || suite == name;
    known = known || hit;
    return hit;
  };
  if (want("lspectrum")) out.push_back(check_l_spectrum(g.n, g.ell, 5, 20240611));
  if (want("defect")) out.push_back(check_joint_defect(g));
  if (want("closed")) out.push_back(check_closed_forms(g));
  if (want("psi")) out.push_back(check_psi(g.n, g.ell));
  if (want("scalar")) out.push_back(check_scalarity(g));
  if (want("gram")) {
    std::vector<std::pair<int, int>> pairs;
    for (int n = g.n.lo; n <= g.n.hi; ++n)
      for (int ell = g.ell.lo; ell <= g.ell.hi; ++ell) pairs.emplace_back(n, ell);
    out.push_back(check_orthogonality(pairs, g.w.hi));
  }
  if (want("bispectral")) out.push_back(check_bispectral(g.n, g.w));
  if (want("casimir")) out.push_back(check_casimir(g));
  if (want("boundary")) out.push_back(check_boundary(g));
  if (!known) throw ConstraintViolation("unknown suite '" + suite + "'");
  return out;
}

}  // namespace su3sf
