#include "laxalg/serialize.hpp"

#include <sstream>

#include "laxalg/errors.hpp"

namespace lax {

namespace {

std::string rational_field(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(where + ": expected a rational string");
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

int require_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

void reject_unknown(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* k : keys) known |= key == k;
    if (!known) throw ParseError(where + ": unknown key \"" + key + "\"");
  }
}

}  // namespace

Json to_json(const GaussianRational& z) { return Json{{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

GaussianRational gaussian_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_object()) {
      reject_unknown(j, {"re", "im"}, where);
      Rational re = j.contains("re") ? parse_rational(rational_field(j.at("re"), where + ".re")) : Rational(0);
      Rational im = j.contains("im") ? parse_rational(rational_field(j.at("im"), where + ".im")) : Rational(0);
      return {re, im};
    }
    if (j.is_string()) return parse_gaussian(j.get<std::string>());
    if (j.is_number_integer()) return GaussianRational(static_cast<long>(j.get<long long>()));
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a number object or string");
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const Json& j, std::size_t size, const std::string& where) {
  if (!j.is_array() || j.size() != size)
    throw ParseError(where + ": expected an array of " + std::to_string(size) + " entries");
  Vector out;
  for (std::size_t k = 0; k < size; ++k) out.push_back(gaussian_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

Json to_json(const ExactMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

ExactMatrix matrix_from_json(const Json& j, std::size_t size, const std::string& where) {
  if (!j.is_array() || j.size() != size)
    throw ParseError(where + ": expected " + std::to_string(size) + " rows");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < size; ++r) rows.push_back(vector_from_json(j[r], size, where + "[" + std::to_string(r) + "]"));
  return ExactMatrix::from_rows(rows, size);
}

Json to_json(const MatrixLaurentSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"valuation", s.valuation()}, {"trunc", s.trunc()}, {"coeffs", coeffs}};
}

MatrixLaurentSeries series_from_json(const Json& j, std::size_t size) {
  const std::string where = "series";
  reject_unknown(j, {"valuation", "trunc", "coeffs"}, where);
  const int v = require_int(j, "valuation", where);
  const int t = require_int(j, "trunc", where);
  const Json& c = require(j, "coeffs", where);
  if (!c.is_array() || static_cast<int>(c.size()) != std::max(0, t - v + 1))
    throw ParseError(where + ".coeffs: expected trunc - valuation + 1 matrices");
  std::vector<ExactMatrix> coeffs;
  for (std::size_t k = 0; k < c.size(); ++k)
    coeffs.push_back(matrix_from_json(c[k], size, where + ".coeffs[" + std::to_string(k) + "]"));
  return MatrixLaurentSeries(v, t, std::move(coeffs));
}

Json to_json(const RationalMatrixFunction& f) {
  Json poly = Json::array();
  for (const auto& c : f.poly_coeffs()) poly.push_back(to_json(c));
  Json principal = Json::array();
  for (std::size_t s = 0; s < f.config().point_count(); ++s) {
    if (f.pole_order(s) == 0) continue;
    Json orders = Json::object();
    for (int j = 1; j <= f.pole_order(s); ++j)
      orders[std::to_string(j)] = to_json(f.principal(s)[static_cast<std::size_t>(j - 1)]);
    principal.push_back(Json{{"point", s}, {"orders", orders}});
  }
  return Json{{"poly_min", f.poly_min()}, {"poly_coeffs", poly}, {"principal", principal}};
}

RationalMatrixFunction function_from_json(const ConfigPtr& config, const Json& j) {
  const std::string where = "function";
  const std::size_t N = config->spec().size();
  reject_unknown(j, {"poly_min", "poly_coeffs", "principal"}, where);
  const int poly_min = j.contains("poly_min") ? require_int(j, "poly_min", where) : 0;
  std::vector<ExactMatrix> poly;
  if (j.contains("poly_coeffs")) {
    const Json& pc = j.at("poly_coeffs");
    if (!pc.is_array()) throw ParseError(where + ".poly_coeffs: expected an array");
    for (std::size_t k = 0; k < pc.size(); ++k)
      poly.push_back(matrix_from_json(pc[k], N, where + ".poly_coeffs[" + std::to_string(k) + "]"));
  }
  std::vector<std::vector<ExactMatrix>> principal(config->point_count());
  if (j.contains("principal")) {
    const Json& pp = j.at("principal");
    if (!pp.is_array()) throw ParseError(where + ".principal: expected an array");
    for (std::size_t k = 0; k < pp.size(); ++k) {
      const std::string at = where + ".principal[" + std::to_string(k) + "]";
      reject_unknown(pp[k], {"point", "orders"}, at);
      const int s = require_int(pp[k], "point", at);
      if (s < 0 || static_cast<std::size_t>(s) >= config->point_count())
        throw ParseError(at + ".point: no Tyurin point " + std::to_string(s));
      const Json& orders = require(pp[k], "orders", at);
      if (!orders.is_object()) throw ParseError(at + ".orders: expected an object");
      auto& slot = principal[static_cast<std::size_t>(s)];
      for (const auto& [key, value] : orders.items()) {
        int order = 0;
        try {
          std::size_t used = 0;
          order = std::stoi(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          throw ParseError(at + ".orders: bad pole order \"" + key + "\"");
        }
        if (order < 1 || order > 16) throw ParseError(at + ".orders: pole order out of range: " + key);
        if (slot.size() < static_cast<std::size_t>(order)) slot.resize(static_cast<std::size_t>(order), ExactMatrix(N, N));
        slot[static_cast<std::size_t>(order - 1)] = matrix_from_json(value, N, at + ".orders." + key);
      }
    }
  }
  return RationalMatrixFunction(config, poly_min, std::move(poly), std::move(principal));
}

Json to_json(const SphereConfig& config) {
  Json points = Json::array();
  for (const auto& p : config.points()) points.push_back(Json{{"z", to_json(p.z())}, {"alpha", to_json(p.alpha())}});
  return Json{{"family", std::string(family_name(config.spec().family()))},
              {"n", config.spec().n()},
              {"tyurin", points}};
}

Json to_json(const GradedSubspaceBasis& basis) {
  Json elements = Json::array();
  for (const auto& e : basis.elements) elements.push_back(to_json(e));
  return Json{{"degree", basis.degree}, {"dim", basis.dim()}, {"elements", elements}};
}

Json to_json(const StructureConstants& c) {
  Json constants = Json::array();
  for (std::size_t i = 0; i < c.values.size(); ++i)
    for (std::size_t j = 0; j < c.values[i].size(); ++j)
      for (std::size_t r = 0; r < c.values[i][j].size(); ++r)
        if (!c.values[i][j][r].is_zero())
          constants.push_back(Json{{"i", i}, {"j", j}, {"r", r}, {"value", to_json(c.values[i][j][r])}});
  return Json{{"k", c.k}, {"l", c.l}, {"constants", constants}};
}

std::string structure_to_csv(const StructureConstants& c) {
  std::ostringstream out;
  out << "k,l,i,j,r,re,im\n";
  for (std::size_t i = 0; i < c.values.size(); ++i)
    for (std::size_t j = 0; j < c.values[i].size(); ++j)
      for (std::size_t r = 0; r < c.values[i][j].size(); ++r) {
        const auto& v = c.values[i][j][r];
        if (v.is_zero()) continue;
        out << c.k << ',' << c.l << ',' << i << ',' << j << ',' << r << ',' << to_string(v.re()) << ','
            << to_string(v.im()) << '\n';
      }
  return out.str();
}

Json to_json(const LocalityWindow& w) {
  return Json{{"lower", w.lower}, {"upper", w.upper}, {"lower_alt", w.lower_alt}};
}

Json to_json(const ConnectionForm& lambda) {
  Json betas = Json::array();
  for (const auto& b : lambda.beta_tilde) betas.push_back(to_json(b));
  Json kappas = Json::array();
  for (const auto& k : lambda.kappa_tilde) kappas.push_back(to_json(k));
  auto order = [](const std::optional<int>& m) { return m ? Json(*m) : Json(nullptr); };
  return Json{{"pole_order", lambda.pole_order},
              {"m_plus", order(lambda.m_plus)},
              {"m_minus", order(lambda.m_minus)},
              {"beta_tilde", betas},
              {"kappa_tilde", kappas},
              {"coefficient", to_json(lambda.coefficient)}};
}

ConnectionForm connection_from_json(const ConfigPtr& config, const Json& j) {
  const std::string where = "lambda";
  reject_unknown(j, {"pole_order", "m_plus", "m_minus", "beta_tilde", "kappa_tilde", "coefficient", "window"}, where);
  const std::size_t K = config->point_count();
  const std::size_t N = config->spec().size();
  ConnectionForm out;
  out.config = config;
  out.pole_order = j.contains("pole_order") ? require_int(j, "pole_order", where) : 0;
  out.coefficient = function_from_json(config, require(j, "coefficient", where));
  const Json& betas = require(j, "beta_tilde", where);
  const Json& kappas = require(j, "kappa_tilde", where);
  if (!betas.is_array() || betas.size() != K || !kappas.is_array() || kappas.size() != K)
    throw ParseError(where + ": beta_tilde and kappa_tilde need one entry per Tyurin point");
  for (std::size_t s = 0; s < K; ++s) {
    out.beta_tilde.push_back(vector_from_json(betas[s], N, where + ".beta_tilde[" + std::to_string(s) + "]"));
    out.kappa_tilde.push_back(gaussian_from_json(kappas[s], where + ".kappa_tilde[" + std::to_string(s) + "]"));
  }
  record_valuations(out);
  return out;
}

Json to_json(const CocycleTable& table) {
  Json values = Json::array();
  for (const auto& e : table.values)
    values.push_back(Json{{"k", e.k}, {"i", e.i}, {"l", e.l}, {"j", e.j}, {"value", to_json(e.value)}});
  Json header{{"config", to_json(*table.lambda.config)},
              {"degrees", Json::array({table.lo, table.hi})},
              {"window", to_json(table.window)},
              {"antisymmetric", table.antisymmetric},
              {"local", table.local},
              {"regular", table.regular}};
  return Json{{"header", header}, {"lambda", to_json(table.lambda)}, {"values", values}};
}

std::string cocycle_table_to_csv(const CocycleTable& table) {
  std::ostringstream out;
  out << "k,i,l,j,re,im\n";
  for (const auto& e : table.values)
    out << e.k << ',' << e.i << ',' << e.l << ',' << e.j << ',' << to_string(e.value.re()) << ','
        << to_string(e.value.im()) << '\n';
  return out.str();
}

}  // namespace lax
