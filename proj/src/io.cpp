#include "su3sf/io.hpp"

#include <sstream>

namespace su3sf::io {

namespace {

void csv_rational(std::ostringstream& os, const Rational& q) { os << q.get_num() << ',' << q.get_den() << '\n'; }

}  // namespace

json to_json(const Rational& q) { return su3sf::to_string(q); }

json to_json(const RatVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

json to_json(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json to_json(const Polynomial& p) { return to_json(p.coeffs()); }

json to_json(const SFIndex& idx) { return {{"n", idx.n}, {"ell", idx.ell}, {"w", idx.w}, {"k", idx.k}}; }

json to_json(const EigenPair& e) { return {{"lambda", to_json(e.lambda)}, {"mu", to_json(e.mu)}}; }

json to_json(const VectorSeries& s) {
  json coeffs = json::array();
  for (const auto& h : s.coeffs()) coeffs.push_back(to_json(h));
  return {{"ell", s.ell()},
          {"truncation", s.truncation()},
          {"leading_order", s.leading_order()},
          {"terminates", s.terminates()},
          {"coeffs", coeffs}};
}

json to_json(const HypergeometricSpec& spec) {
  json j = {{"prefactor", to_json(spec.prefactor)},
            {"power_offset", spec.power_offset},
            {"a", to_json(spec.a)},
            {"b", to_json(spec.b)},
            {"c", to_json(spec.c)},
            {"multiplier", to_json(spec.multiplier)}};
  if (spec.normalized()) j["d"] = to_json(spec.d());
  return j;
}

json to_json(const GramReport& g) {
  json idx = json::array();
  for (const auto& i : g.indices) idx.push_back(to_json(i));
  return {{"n", g.n},
          {"ell", g.ell},
          {"indices", idx},
          {"gram", to_json(g.gram)},
          {"max_offdiag", to_json(g.max_offdiag)},
          {"norms", to_json(g.norms)},
          {"orthogonal", g.orthogonal},
          {"positive", g.positive}};
}

json to_json(const BoundaryReport& b) {
  json comps = json::array();
  for (const auto& c : b.components)
    comps.push_back({{"i", c.i}, {"order", c.order ? json(*c.order) : json(nullptr)}, {"pass", c.pass}});
  return {{"pass", b.pass}, {"components", comps}};
}

json to_json(const BispectralTriple& t) {
  return {{"n", t.n}, {"w", t.w}, {"A", to_json(t.a)}, {"B", to_json(t.b)}, {"C", to_json(t.c)}};
}

json to_json(const PolyMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json to_json(const ProbeResult& p) {
  json j = {{"disclaimer", ProbeResult::disclaimer},
            {"fitted", p.fitted},
            {"underdetermined", p.underdetermined},
            {"mode", p.mode},
            {"predicted", {{"a", to_json(p.predicted_a)}, {"b", to_json(p.predicted_b)}, {"c", to_json(p.predicted_c)}}},
            {"free_fit_agrees", p.free_fit_agrees ? json(*p.free_fit_agrees) : json(nullptr)},
            {"message", p.message}};
  if (p.fitted) j["spec"] = to_json(p.spec);
  return j;
}

RatVector rat_vector_from_json(const json& j) {
  RatVector v;
  for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

VectorSeries series_from_json(const json& j) {
  std::vector<RatVector> coeffs;
  for (const auto& h : j.at("coeffs")) coeffs.push_back(rat_vector_from_json(h));
  return VectorSeries(j.at("ell").get<int>(), std::move(coeffs));
}

std::string matrix_csv(const RatMatrix& m) {
  std::ostringstream os;
  os << "row,col,num,den\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << i << ',' << j << ',';
      csv_rational(os, m(i, j));
    }
  return os.str();
}

std::string series_csv(const VectorSeries& s) {
  std::ostringstream os;
  os << "j,i,num,den\n";
  for (std::size_t j = 0; j <= s.truncation(); ++j)
    for (std::size_t i = 0; i < s.dim(); ++i) {
      os << j << ',' << i << ',';
      csv_rational(os, s[j][i]);
    }
  return os.str();
}

std::string poly_matrix_csv(const PolyMatrix& m) {
  std::ostringstream os;
  os << "k,i,power,num,den\n";
  for (std::size_t k = 0; k < m.rows(); ++k)
    for (std::size_t i = 0; i < m.cols(); ++i) {
      const auto& c = m(k, i).coeffs();
      for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e] == 0) continue;
        os << k << ',' << i << ',' << e << ',';
        csv_rational(os, c[e]);
      }
    }
  return os.str();
}

}  // namespace su3sf::io
