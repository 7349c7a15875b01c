#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laxalg/serialize.hpp"
#include "laxalg/sphere.hpp"

namespace lax {

struct DegreeRange {
  int lo = -3;
  int hi = 3;

  friend bool operator==(const DegreeRange&, const DegreeRange&) = default;
};

/// "a..b" with a <= b; throws ParseError.
DegreeRange parse_degrees(std::string_view text);

struct RunConfig {
  AlgebraSpec spec{Family::sl, 2};
  /// Explicit Tyurin data; when absent, random_points points are drawn from seed.
  std::optional<std::vector<TyurinPoint>> tyurin;
  std::size_t random_points = 1;
  std::uint64_t seed = 42;
  DegreeRange degrees;
  int max_pole = 6;
  /// Random samples per property in run_verify.
  std::size_t trials = 20;
};

/// Keys: family, n, tyurin, random_points, seed, degrees, max_pole, trials.
/// Unknown keys raise ParseError; invalid Tyurin data raises ValidationError.
RunConfig parse_config(const Json& j);
RunConfig parse_config_file(const std::string& path);

/// K random points: distinct nonzero Gaussian integer positions, random
/// nonzero alpha (isotropic for so).
std::vector<TyurinPoint> random_tyurin_points(const AlgebraSpec& spec, std::size_t count, std::uint64_t seed);

/// The configuration for a run; `attempt` reseeds random points only.
ConfigPtr materialize(const RunConfig& config, std::size_t attempt = 0);

Json to_json(const RunConfig& config);

}  // namespace lax
