#pragma once

#include <cstdint>
#include <random>

#include "laxalg/algebra.hpp"

namespace lax {

/// Deterministic generator used for every random draw in the project.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Ranges are reduced by modulo instead of
/// std::uniform_int_distribution, whose algorithm is implementation defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// a + b i with a, b integers in [-bound, bound].
  GaussianRational gaussian(int bound = 3);
  /// Like gaussian() but never zero.
  GaussianRational nonzero_gaussian(int bound = 3);
  Vector vector(std::size_t n, int bound = 3);
  /// Random element of the algebra (random coordinates in its basis).
  ExactMatrix element(const AlgebraSpec& spec, int bound = 3);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer of seed + counter; sub-streams are derived this way.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter);

}  // namespace lax
