#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laxalg/config.hpp"

namespace lax {

struct SuiteResult {
  std::string name;
  /// The property the suite checks, in words.
  std::string property;
  bool passed = false;
  std::size_t checks = 0;
  /// First failure, or a short summary when passed.
  std::string detail;
};

struct VerifyReport {
  Json config;
  /// Configurations tried (1 unless degenerate data forced a reseed).
  std::size_t attempts = 0;
  Json configuration;
  Json lambda;
  std::vector<SuiteResult> suites;

  bool passed() const;
};

/// closure, grading-dimension, residue-eigenvalue, regularity,
/// cocycle-identity, locality, loop-reduction, gl-split.
const std::vector<std::string>& suite_names();

/// Runs every suite. DegenerateConfiguration or NoConnectionFound on random
/// Tyurin data triggers up to 5 reseeds. A given `lambda` (JSON of a
/// connection form) replaces the constructed one.
VerifyReport run_verify(const RunConfig& config, const std::optional<Json>& lambda = std::nullopt);

Json to_json(const VerifyReport& report);

}  // namespace lax
