#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "laxalg/central.hpp"
#include "laxalg/graded.hpp"

namespace lax {

/// Key order follows insertion, so output is byte-stable.
using Json = nlohmann::ordered_json;

/// {"re": "p/q", "im": "p/q"}
Json to_json(const GaussianRational& z);
/// Accepts the object form, the shorthand string "a/b+c/d i", or a bare
/// integer. Throws ParseError naming `where`.
GaussianRational gaussian_from_json(const Json& j, const std::string& where = "value");

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j, std::size_t size, const std::string& where);
Json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j, std::size_t size, const std::string& where);

/// {"valuation", "trunc", "coeffs"}
Json to_json(const MatrixLaurentSeries& s);
MatrixLaurentSeries series_from_json(const Json& j, std::size_t size);

/// {"poly_min", "poly_coeffs", "principal": [{"point", "orders": {"1": M}}]};
/// points without a principal part are omitted.
Json to_json(const RationalMatrixFunction& f);
RationalMatrixFunction function_from_json(const ConfigPtr& config, const Json& j);

/// {"family", "n", "tyurin": [{"z", "alpha"}]}
Json to_json(const SphereConfig& config);

/// {"degree", "dim", "elements"}
Json to_json(const GradedSubspaceBasis& basis);
/// {"k", "l", "constants": [{"i", "j", "r", "value"}]}, nonzero entries only.
Json to_json(const StructureConstants& c);
std::string structure_to_csv(const StructureConstants& c);

Json to_json(const LocalityWindow& w);
Json to_json(const ConnectionForm& lambda);
/// Reads coefficient, pole_order, beta_tilde and kappa_tilde; the valuations
/// and the optional "window" entry of an export are recomputed from the
/// coefficient.
ConnectionForm connection_from_json(const ConfigPtr& config, const Json& j);

/// {"header": {..., "window"}, "lambda", "values"}
Json to_json(const CocycleTable& table);
/// Columns k,i,l,j,re,im.
std::string cocycle_table_to_csv(const CocycleTable& table);

}  // namespace lax
