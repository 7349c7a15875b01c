#include "laxalg/export.hpp"

#include <fstream>
#include <iostream>

#include "laxalg/errors.hpp"

namespace lax {

namespace {

void require_json(ExportFormat format, const char* what) {
  if (format != ExportFormat::json) throw ValidationError(std::string(what) + " export supports json only");
}

}  // namespace

ExportFormat parse_format(std::string_view text) {
  if (text == "json") return ExportFormat::json;
  if (text == "csv") return ExportFormat::csv;
  throw ParseError("unknown format '" + std::string(text) + "' (expected json or csv)");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string export_basis(BasisCache& cache, DegreeRange degrees, ExportFormat format) {
  require_json(format, "basis");
  if (degrees.lo == degrees.hi) return dump(to_json(cache.at(degrees.lo)));
  Json bases = Json::array();
  for (int m = degrees.lo; m <= degrees.hi; ++m) bases.push_back(to_json(cache.at(m)));
  return dump(Json{{"bases", bases}});
}

std::string export_structure(BasisCache& cache, int k, int l, ExportFormat format) {
  const auto constants = structure_constants(cache, k, l);
  if (!constants.closed || !constants.graded) throw RegularityViolation("structure constants: " + constants.first_violation);
  return format == ExportFormat::csv ? structure_to_csv(constants) : dump(to_json(constants));
}

std::string export_lambda(const ConnectionForm& lambda, ExportFormat format) {
  require_json(format, "lambda");
  Json j = to_json(lambda);
  j["window"] = to_json(locality_window(lambda));
  return dump(j);
}

std::string export_cocycle_table(BasisCache& cache, const ConnectionForm& lambda, DegreeRange degrees,
                                 ExportFormat format) {
  const auto table = cocycle_table(cache, lambda, degrees.lo, degrees.hi);
  return format == ExportFormat::csv ? cocycle_table_to_csv(table) : dump(to_json(table));
}

void write_output(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace lax
