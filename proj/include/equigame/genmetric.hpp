#ifndef EQUIGAME_GENMETRIC_HPP
#define EQUIGAME_GENMETRIC_HPP

#include <Eigen/Core>
#include <limits>
#include <string>
#include <vector>

namespace equigame::metric {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Finite generalized metric space: zero self-distance and the triangle
// inequality, with no symmetry, separation or finiteness requirements.
// Entries may be +infinity.
struct GenMetricSpace {
  std::vector<std::string> points;
  Eigen::MatrixXd d;

  int size() const { return static_cast<int>(points.size()); }
};

struct AxiomViolation {
  enum class Kind { Shape, SelfDistance, Negative, Triangle };
  Kind kind;
  int x = -1, y = -1, z = -1;
  double lhs = 0.0, rhs = 0.0;
  std::string describe(const GenMetricSpace& space) const;
};

// Empty result iff the space satisfies both axioms (exactly, up to tol).
std::vector<AxiomViolation> validate(const GenMetricSpace& space, double tol = 1e-12);

// Copresheaf over the space: a [0, inf]-valued function on points.
struct Presheaf {
  Eigen::VectorXd values;
};

// y(x) = d(-, x).
Presheaf yoneda_embed(const GenMetricSpace& space, int x);

// Internal distance of [0, inf]: 0 if u >= v, else v - u. Saturating on
// infinities; inf - inf is 0.
double interval_distance(double u, double v);

// sup over points of the truncated pointwise difference.
double presheaf_distance(const GenMetricSpace& space, const Presheaf& phi, const Presheaf& psi);

struct IsometryReport {
  bool isometric = false;
  double max_deviation = 0.0;
  int worst_x = -1, worst_y = -1;
};

// Checks d(x, x') = dhat(y(x), y(x')) over all ordered pairs. tol 0 gives the
// exact comparison used for rational-valued golden fixtures.
IsometryReport check_isometry(const GenMetricSpace& space, double tol = 1e-9);

// Two-sided zero distance; with the isometry this coincides with mutual zero
// distance of the embedded presheaves.
bool weakly_isomorphic(const GenMetricSpace& space, int x, int y);

// d(p, q) = 0 if p <= q else inf. The relation must be reflexive and
// transitive (throws std::invalid_argument otherwise).
GenMetricSpace preorder_space(const std::vector<std::string>& elements,
                              const std::vector<std::pair<int, int>>& leq);

// d(u, v) = 0 when u is a prefix of v, else 2^-(longest common prefix).
GenMetricSpace string_prefix_space(const std::vector<std::string>& strings);

// d(u, v) = 0 if u >= v else v - u, on a finite list of nonnegative reals.
GenMetricSpace nonneg_real_space(const std::vector<double>& values);

// Non-symmetric Hausdorff distance between subsets of a base space:
// d(V, W) = sup over v in V of inf over w in W of base(v, w).
GenMetricSpace hausdorff_powerset_space(const GenMetricSpace& base,
                                        const std::vector<std::vector<int>>& subsets);

// Zeroes the diagonal and applies the min-plus transitive closure, turning
// any nonnegative matrix into a valid space. Used by generators.
GenMetricSpace min_plus_closure(GenMetricSpace space);

}  // namespace equigame::metric

#endif
