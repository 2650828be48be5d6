// Command-line front end: compute, verify and export.
//
// Exit status: 0 when everything requested succeeded and all checks passed,
// 1 when a check failed or a computation could not be completed, 2 on usage
// errors (bad flags, bad ranges, inadmissible parameters).

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "su3sf/analysis.hpp"
#include "su3sf/bispectral.hpp"
#include "su3sf/checks.hpp"
#include "su3sf/eigen.hpp"
#include "su3sf/errors.hpp"
#include "su3sf/io.hpp"
#include "su3sf/series.hpp"

using namespace su3sf;
using io::json;

namespace {

struct Options {
  std::string n = "0", ell = "0", w = "0", k, N, t = "1", lambda;
  std::string wmax = "3", suite = "all", format, out;
  int samples = 21;
  int max_p = 10;
  bool approx = false;
  bool normalize = false;
};

class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + o.out);
  f << text;
  if (!f) throw std::runtime_error("failed writing " + o.out);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool csv(const Options& o, const char* fallback = "json") {
  const std::string f = o.format.empty() ? fallback : o.format;
  if (f != "json" && f != "csv") throw ConstraintViolation("format must be json or csv");
  return f == "csv";
}

int single(const std::string& text, const char* what) {
  const IntRange r = IntRange::parse(text);
  if (r.lo != r.hi) throw ConstraintViolation(std::string(what) + " must be a single value here");
  return r.lo;
}

SFIndex single_index(const Options& o) {
  const int ell = single(o.ell, "--ell");
  SFIndex idx{single(o.n, "--n"), ell, single(o.w, "--w"), o.k.empty() ? 0 : single(o.k, "--k")};
  idx.validate();
  return idx;
}

std::optional<std::size_t> truncation(const Options& o) {
  if (o.N.empty()) return std::nullopt;
  const int v = single(o.N, "--N");
  if (v < 0) throw ConstraintViolation("--N must be nonnegative");
  return static_cast<std::size_t>(v);
}

// All admissible indices in the requested ranges; k defaults to 0..ell.
std::vector<SFIndex> index_grid(const Options& o) {
  const IntRange n = IntRange::parse(o.n), ell = IntRange::parse(o.ell), w = IntRange::parse(o.w);
  std::vector<SFIndex> out;
  for (int l = ell.lo; l <= ell.hi; ++l) {
    if (l < 0) throw ConstraintViolation("ell must be nonnegative");
    const IntRange k = o.k.empty() ? IntRange{0, l} : IntRange::parse(o.k);
    for (int nn = n.lo; nn <= n.hi; ++nn)
      for (int ww = w.lo; ww <= w.hi; ++ww)
        for (int kk = k.lo; kk <= std::min(k.hi, l); ++kk) {
          const SFIndex idx{nn, l, ww, kk};
          if (idx.admissible()) out.push_back(idx);
        }
  }
  if (out.empty()) throw ConstraintViolation("no admissible (n, ell, w, k) in the requested ranges");
  return out;
}

void csv_rat(std::ostringstream& os, const Rational& q) { os << ',' << q.get_num() << ',' << q.get_den(); }

// ------------------------------------------------------------------ commands

void cmd_params(const Options& o) {
  const auto grid = index_grid(o);
  if (csv(o)) {
    std::ostringstream os;
    os << "n,ell,w,k,p,q,k1,k2,lambda_num,lambda_den,mu_num,mu_den,lambda_tilde_num,lambda_tilde_den,mu_tilde_num,"
          "mu_tilde_den\n";
    for (const auto& idx : grid) {
      const RestrictionParams rp = index_to_restriction(idx);
      const EigenPair ep = eigen_from_index(idx);
      const CasimirPair cp = to_casimir(ep, idx.n, idx.ell);
      os << idx.n << ',' << idx.ell << ',' << idx.w << ',' << idx.k << ',' << rp.p << ',' << rp.q << ',' << rp.k1 << ','
         << rp.k2;
      csv_rat(os, ep.lambda);
      csv_rat(os, ep.mu);
      csv_rat(os, cp.lambda_tilde);
      csv_rat(os, cp.mu_tilde);
      os << '\n';
    }
    emit(o, os.str());
    return;
  }
  json arr = json::array();
  for (const auto& idx : grid) {
    const RestrictionParams rp = index_to_restriction(idx);
    const EigenPair ep = eigen_from_index(idx);
    const CasimirPair cp = to_casimir(ep, idx.n, idx.ell);
    arr.push_back({{"index", io::to_json(idx)},
                   {"restriction", {{"p", rp.p}, {"q", rp.q}, {"k1", rp.k1}, {"k2", rp.k2}}},
                   {"scaled", io::to_json(ep)},
                   {"radial", io::to_json(to_radial(ep))},
                   {"casimir", {{"lambda_tilde", io::to_json(cp.lambda_tilde)}, {"mu_tilde", io::to_json(cp.mu_tilde)}}},
                   {"canonical_w", canonical_w(idx.n, idx.ell, idx.w, idx.k)}});
  }
  emit(o, dump(arr));
}

void cmd_lmatrix(const Options& o) {
  const int n = single(o.n, "--n"), ell = single(o.ell, "--ell");
  Rational lam;
  if (!o.lambda.empty()) lam = parse_rational(o.lambda);
  else lam = eigen_from_index(single_index(o)).lambda;
  const LMatrix lm = build_L(n, ell, lam);
  if (csv(o)) {
    emit(o, io::matrix_csv(lm.entries));
    return;
  }
  json vecs = json::object();
  for (int k = 0; k <= ell; ++k) {
    try {
      vecs[std::to_string(k)] = io::to_json(l_eigenvector(n, ell, lam, k));
    } catch (const SpectralDegeneracy&) {
      vecs[std::to_string(k)] = nullptr;
    }
  }
  emit(o, dump({{"n", n},
                {"ell", ell},
                {"lambda", io::to_json(lam)},
                {"L", io::to_json(lm.entries)},
                {"characteristic_polynomial", io::to_json(characteristic_polynomial(lm.entries))},
                {"mu_spectrum", io::to_json(mu_spectrum(n, ell, lam))},
                {"degenerate", is_degenerate(n, ell, lam)},
                {"eigenvectors", vecs}}));
}

double parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw ConstraintViolation("cannot parse '" + text + "' as a number");
}

json approx_values(const VectorSeries& s, double t) {
  json a = json::array();
  for (double v : evaluate_series(s, t)) a.push_back(v);
  return a;
}

void cmd_series(const Options& o) {
  const SFIndex idx = single_index(o);
  VectorSeries s = series_solution(idx, truncation(o));
  if (o.normalize) s = normalize_at_one(s);
  if (csv(o)) {
    emit(o, io::series_csv(s));
    return;
  }
  json j = {{"index", io::to_json(idx)}, {"eigen", io::to_json(eigen_from_index(idx))}, {"series", io::to_json(s)}};
  if (o.approx) j["approx_value_at_t"] = {{"t", parse_double(o.t)}, {"values", approx_values(s, parse_double(o.t))}};
  emit(o, dump(j));
}

void cmd_closed_form(const Options& o) {
  const SFIndex idx = single_index(o);
  const auto specs = closed_form(idx);
  json arr = json::array();
  for (const auto& s : specs) arr.push_back(io::to_json(s));
  const VectorSeries series = closed_form_series(idx, truncation(o).value_or(default_truncation(idx)));
  if (csv(o)) {
    emit(o, io::series_csv(series));
    return;
  }
  emit(o, dump({{"index", io::to_json(idx)}, {"case", closed_form_case(idx)}, {"components", arr}, {"series", io::to_json(series)}}));
}

void cmd_psi(const Options& o) {
  const int n = single(o.n, "--n"), ell = single(o.ell, "--ell");
  const auto psi = psi_closed_form(n, ell);
  const ReprAction ra = make_repr_action(n, ell);
  const EigenPair ev = psi_radial_eigenvalues(n, ell);
  const bool d_ok = is_radial_eigenfunction(radial_apply_D(ra, psi), psi, ev.lambda);
  const bool e_ok = is_radial_eigenfunction(radial_apply_E(ra, psi), psi, ev.mu);
  json comps = json::array();
  for (const auto& p : psi) comps.push_back({{"alpha", p.alpha}, {"coeffs_in_r2", io::to_json(p.coeffs)}});
  emit(o, dump({{"n", n},
                {"ell", ell},
                {"components", comps},
                {"radial_eigenvalues", io::to_json(ev)},
                {"D_identity_holds", d_ok},
                {"E_identity_holds", e_ok}}));
  if (!d_ok || !e_ok) throw CheckFailed("Psi eigen-identity failed");
}

void cmd_verify(const Options& o) {
  Grid g{IntRange::parse(o.n), IntRange::parse(o.ell), IntRange::parse(o.w)};
  const auto reports = run_suite(o.suite, g);
  bool pass = true;
  if (o.format == "csv") {
    std::ostringstream os;
    os << "check,pass,cases,failures\n";
    for (const auto& r : reports) {
      os << '"' << r.name << "\"," << (r.pass ? 1 : 0) << ',' << r.cases << ',' << r.failures.size() << '\n';
      pass = pass && r.pass;
    }
    emit(o, os.str());
  } else if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back({{"check", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"failures", r.failures}});
      pass = pass && r.pass;
    }
    emit(o, dump(arr));
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
      for (const auto& f : r.failures) os << "  " << f << '\n';
      pass = pass && r.pass;
    }
    emit(o, os.str());
  }
  if (!pass) throw CheckFailed("verification failed");
}

void cmd_gram(const Options& o) {
  const int n = single(o.n, "--n"), ell = single(o.ell, "--ell"), wmax = single(o.wmax, "--wmax");
  const GramReport g = gram_matrix(n, ell, wmax);
  if (csv(o, "csv")) emit(o, io::matrix_csv(g.gram));
  else emit(o, dump(io::to_json(g)));
  if (!g.orthogonal || !g.positive) throw CheckFailed("Gram matrix is not diagonal with positive diagonal");
}

void cmd_bispectral(const Options& o) {
  const int n = single(o.n, "--n"), w = single(o.w, "--w");
  const BispectralTriple t = bispectral_matrices(n, w);
  if (csv(o)) {
    emit(o, io::poly_matrix_csv(phi_matrix(n, 2, w)));
    return;
  }
  const Rational defect = verify_bispectral(n, w);
  const bool forward = forward_generate(n, w) == phi_matrix(n, 2, w + 1);
  const Rational det_c = determinant(t.c);
  emit(o, dump({{"matrices", io::to_json(t)},
                {"phi", io::to_json(phi_matrix(n, 2, w))},
                {"defect_max_abs_coeff", io::to_json(defect)},
                {"det_C", io::to_json(det_c)},
                {"forward_generation_matches", forward}}));
  if (defect != 0 || !forward || det_c == 0) throw CheckFailed("bispectral identity failed");
}

void cmd_probe(const Options& o) {
  json arr = json::array();
  for (const auto& idx : index_grid(o)) {
    if (idx.n < 0) continue;
    const VectorSeries s = series_solution(idx);
    for (int i = 0; i <= idx.ell; ++i) {
      json r = io::to_json(conjecture_probe(s, idx, i, o.max_p));
      r["index"] = io::to_json(idx);
      r["component"] = i;
      arr.push_back(r);
    }
  }
  emit(o, dump({{"disclaimer", ProbeResult::disclaimer}, {"results", arr}}));
}

void cmd_eval(const Options& o) {
  const SFIndex idx = single_index(o);
  VectorSeries s = series_solution(idx, truncation(o));
  if (o.normalize) s = normalize_at_one(s);
  json j = {{"index", io::to_json(idx)}, {"normalized", o.normalize}};
  if (o.approx) {
    const double t = parse_double(o.t);
    j["t"] = t;
    j["values_approx"] = approx_values(s, t);
  } else {
    const Rational t = parse_rational(o.t);
    if (!s.terminates()) throw ConstraintViolation("exact evaluation needs a terminating series");
    j["t"] = io::to_json(t);
    j["values"] = io::to_json(evaluate_series(s, t));
  }
  emit(o, dump(j));
}

void cmd_export(const Options& o) {
  const SFIndex idx = single_index(o);
  const VectorSeries s = normalize_at_one(series_solution(idx, truncation(o)));
  if (o.samples < 2) throw ConstraintViolation("--samples must be at least 2");
  std::ostringstream os;
  os << "t_approx";
  for (int i = 0; i <= idx.ell; ++i) os << ",h" << i << "_approx";
  os << '\n';
  char buf[64];
  for (int m = 0; m < o.samples; ++m) {
    const double t = static_cast<double>(m) / (o.samples - 1);
    std::snprintf(buf, sizeof buf, "%.6f", t);
    os << buf;
    for (double v : evaluate_series(s, t)) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      os << buf;
    }
    os << '\n';
  }
  emit(o, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-valued spherical functions of (SU(3), U(2)): exact series, closed forms and checks"};
  app.require_subcommand(1);
  Options o;

  auto index_opts = [&](CLI::App* c, bool ranges) {
    const std::string hint = ranges ? " (integer or a..b)" : "";
    c->add_option("--n", o.n, "K-type parameter n" + hint);
    c->add_option("--ell", o.ell, "K-type parameter ell" + hint);
    c->add_option("--w", o.w, "degree parameter w" + hint);
    c->add_option("--k", o.k, "branch k" + hint + "; default 0" + (ranges ? "..ell" : ""));
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--out", o.out, "write to this file instead of stdout");
  };

  std::vector<std::pair<CLI::App*, void (*)(const Options&)>> cmds;
  auto add = [&](const char* name, const char* desc, void (*fn)(const Options&)) {
    CLI::App* c = app.add_subcommand(name, desc);
    common(c);
    cmds.emplace_back(c, fn);
    return c;
  };

  index_opts(add("params", "restriction labels and every eigenvalue convention", cmd_params), true);
  {
    CLI::App* c = add("lmatrix", "L(lambda), its characteristic polynomial and eigenvectors", cmd_lmatrix);
    index_opts(c, false);
    c->add_option("--lambda", o.lambda, "rational lambda (overrides --w/--k)");
  }
  {
    CLI::App* c = add("series", "joint eigen-series for one index", cmd_series);
    index_opts(c, false);
    c->add_option("--N", o.N, "truncation order");
    c->add_option("--t", o.t, "point for --approx");
    c->add_flag("--approx", o.approx, "also print float values at --t");
    c->add_flag("--normalize", o.normalize, "normalize to H(1) = ones");
  }
  {
    CLI::App* c = add("closed-form", "hypergeometric closed form (ell <= 2)", cmd_closed_form);
    index_opts(c, false);
    c->add_option("--N", o.N, "truncation order of the expanded series");
  }
  {
    CLI::App* c = add("psi", "Psi_{n,ell} and its radial eigen-identities", cmd_psi);
    c->add_option("--n", o.n, "n <= 0");
    c->add_option("--ell", o.ell, "ell");
  }
  {
    CLI::App* c = add("verify", "run exact invariant checks over a grid", cmd_verify);
    index_opts(c, true);
    c->add_option("--suite", o.suite, "all, lspectrum, defect, closed, psi, scalar, gram, bispectral, casimir, boundary");
  }
  {
    CLI::App* c = add("gram", "Gram matrix of the spherical functions with w <= wmax", cmd_gram);
    c->add_option("--n", o.n, "n");
    c->add_option("--ell", o.ell, "ell");
    c->add_option("--wmax", o.wmax, "largest w");
  }
  {
    CLI::App* c = add("bispectral", "three-term recursion matrices for ell = 2", cmd_bispectral);
    c->add_option("--n", o.n, "n >= 0");
    c->add_option("--w", o.w, "w >= 0");
  }
  {
    CLI::App* c = add("probe", "fit the conjectured hypergeometric shape (n >= 0)", cmd_probe);
    index_opts(c, true);
    c->add_option("--maxp", o.max_p, "largest polynomial degree to fit");
  }
  {
    CLI::App* c = add("eval", "evaluate a series at t", cmd_eval);
    index_opts(c, false);
    c->add_option("--N", o.N, "truncation order");
    c->add_option("--t", o.t, "rational t (float with --approx)");
    c->add_flag("--approx", o.approx, "float evaluation");
    c->add_flag("--normalize", o.normalize, "normalize to H(1) = ones");
  }
  {
    CLI::App* c = add("export", "sample the normalized components on [0, 1] for plotting", cmd_export);
    index_opts(c, false);
    c->add_option("--N", o.N, "truncation order");
    c->add_option("--samples", o.samples, "number of sample points");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (const auto& [c, fn] : cmds)
      if (c->parsed()) fn(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
