// JSON and CSV forms of the library's results. Rationals are written as
// "p/q" strings (or "p" for integers) and never as floats.

#pragma once

#include <json.hpp>
#include <string>

#include "su3sf/algebra.hpp"
#include "su3sf/analysis.hpp"
#include "su3sf/bispectral.hpp"
#include "su3sf/repr_core.hpp"
#include "su3sf/series.hpp"
#include "su3sf/vector_series.hpp"

namespace su3sf::io {

using json = nlohmann::ordered_json;

json to_json(const Rational& q);
json to_json(const RatVector& v);
json to_json(const RatMatrix& m);
json to_json(const Polynomial& p);
json to_json(const SFIndex& idx);
json to_json(const EigenPair& e);
json to_json(const VectorSeries& s);
json to_json(const HypergeometricSpec& spec);
json to_json(const GramReport& g);
json to_json(const BoundaryReport& b);
json to_json(const BispectralTriple& t);
json to_json(const PolyMatrix& m);
json to_json(const ProbeResult& p);

RatVector rat_vector_from_json(const json& j);
VectorSeries series_from_json(const json& j);

/// Header "row,col,num,den", one line per entry.
std::string matrix_csv(const RatMatrix& m);
/// Header "j,i,num,den": the coefficient of t^j in component i.
std::string series_csv(const VectorSeries& s);
/// Header "k,i,power,num,den", one line per nonzero coefficient.
std::string poly_matrix_csv(const PolyMatrix& m);

}  // namespace su3sf::io
