#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laxalg/sphere.hpp"

namespace lax {

struct MembershipReport {
  bool member = false;
  /// Empty when member; otherwise the first failed condition, e.g. "pole bound".
  std::string reason;
};

/// L in g_m: ord_{P+} L >= m, deg_{P-} L <= m, pole order at each Tyurin
/// point within the family bound, every coefficient in the algebra, and the
/// local constraints at each point.
MembershipReport membership(const SphereConfig& config, int m, const RationalMatrixFunction& L);

struct GradedSubspaceBasis {
  ConfigPtr config;
  int degree = 0;
  std::vector<RationalMatrixFunction> elements;

  std::size_t dim() const { return elements.size(); }
};

/// Scalar functions spanning the degree m functions allowed by the divisor:
/// z^m and z^m (z - z_s)^{-j} for j up to the family pole bound, carried as
/// multiples of the identity.
std::vector<RationalMatrixFunction> raw_scalar_functions(const ConfigPtr& config, int m);

/// Homogeneous constraint matrix on the raw parameters (unknown r * dim g + a
/// multiplies X_a f_r).
ExactMatrix graded_constraint_matrix(const ConfigPtr& config, int m);

/// Basis of g_m from the nullspace of graded_constraint_matrix. Throws
/// DegenerateConfiguration when the dimension is not dim g.
GradedSubspaceBasis graded_basis(const ConfigPtr& config, int m);

/// Lazily built bases for one configuration. Not thread-safe.
class BasisCache {
 public:
  explicit BasisCache(ConfigPtr config) : config_(std::move(config)) {}

  const ConfigPtr& config() const { return config_; }
  const GradedSubspaceBasis& at(int m);

 private:
  ConfigPtr config_;
  std::map<int, GradedSubspaceBasis> bases_;
};

struct GradedComponent {
  Vector coefficients;  // in the basis of g_m
  RationalMatrixFunction element;
};

/// Coordinates of L in the basis, or nullopt when L is outside its span.
std::optional<Vector> coordinates_in(const GradedSubspaceBasis& basis, const RationalMatrixFunction& L);

/// L = sum of its components over degrees lo..hi; zero components are
/// omitted. A single homogeneous component is returned whenever one exists.
/// With one Tyurin point neighbouring pieces intersect (z^{m+1} alpha beta^t /
/// (z - z_1) lies in g_m and g_{m+1}), and the decomposition is then one
/// deterministic choice among several. Throws WindowTooSmall if L is not in
/// the span.
std::map<int, GradedComponent> graded_decompose(BasisCache& cache, const RationalMatrixFunction& L, int lo, int hi);

/// Rank of the union of the bases of g_lo..g_hi; equals the total dimension
/// exactly when the sum is direct.
std::size_t graded_span_rank(BasisCache& cache, int lo, int hi);

struct StructureConstants {
  int k = 0;
  int l = 0;
  /// values[i][j] = coordinates of [b_i^(k), b_j^(l)] in the basis of g_{k+l}.
  std::vector<std::vector<Vector>> values;
  /// Every bracket passed membership at degree k + l.
  bool closed = true;
  /// Every bracket lies in the span of the basis of g_{k+l}.
  bool graded = true;
  std::string first_violation;
};

StructureConstants structure_constants(BasisCache& cache, int k, int l);

struct GlSplit {
  RationalMatrixFunction traceless;
  /// (tr L / N) id; only a polynomial part in z, z^{-1}.
  RationalMatrixFunction scalar;
};

/// Requires a gl configuration and a trace without residues at the Tyurin
/// points; throws MalformedInput otherwise.
GlSplit gl_split(const RationalMatrixFunction& L);

/// Flattens functions into coordinate vectors over a common frame of
/// polynomial exponents and pole orders.
class FunctionFrame {
 public:
  explicit FunctionFrame(const std::vector<const RationalMatrixFunction*>& functions);
  Vector flatten(const RationalMatrixFunction& f) const;
  std::size_t length() const;

 private:
  std::size_t n2_ = 0;
  int lo_ = 0;
  int hi_ = -1;
  std::vector<int> poles_;
};

}  // namespace lax
