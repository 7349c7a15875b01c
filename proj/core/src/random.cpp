#include "laxalg/random.hpp"

namespace lax {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

GaussianRational Rng::gaussian(int bound) {
  long re = uniform(-bound, bound);
  long im = uniform(-bound, bound);
  return {Rational(re), Rational(im)};
}

GaussianRational Rng::nonzero_gaussian(int bound) {
  for (;;) {
    GaussianRational z = gaussian(bound);
    if (!z.is_zero()) return z;
  }
}

Vector Rng::vector(std::size_t n, int bound) {
  Vector v(n);
  for (auto& x : v) x = gaussian(bound);
  return v;
}

ExactMatrix Rng::element(const AlgebraSpec& spec, int bound) {
  return spec.from_coordinates(vector(spec.dim(), bound));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace lax
