#pragma once

#include <string>
#include <string_view>

#include "laxalg/config.hpp"

namespace lax {

enum class ExportFormat { json, csv };

/// "json" | "csv"; throws ParseError.
ExportFormat parse_format(std::string_view text);

/// Pretty JSON with a trailing newline.
std::string dump(const Json& j);

/// One object for a single degree, {"bases": [...]} otherwise. JSON only.
std::string export_basis(BasisCache& cache, DegreeRange degrees, ExportFormat format);
std::string export_structure(BasisCache& cache, int k, int l, ExportFormat format);
/// JSON only; includes the locality window.
std::string export_lambda(const ConnectionForm& lambda, ExportFormat format);
std::string export_cocycle_table(BasisCache& cache, const ConnectionForm& lambda, DegreeRange degrees,
                                 ExportFormat format);

/// Writes to `path`, or stdout when path is empty or "-". Throws
/// std::runtime_error on IO failure.
void write_output(const std::string& content, const std::string& path);

}  // namespace lax
