#ifndef EQUIGAME_FIXPOINT_HPP
#define EQUIGAME_FIXPOINT_HPP

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace equigame::fixpoint {

// Self-map on R^n with an optional claimed contraction modulus. The map must
// be side-effect-free; instances may then be shared freely across workers.
struct ContractiveMap {
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> apply;
  std::optional<double> modulus;  // claimed c in [0, 1)
  Eigen::Index dimension = 0;
};

struct IterateOptions {
  double tol = 1e-10;
  long max_iter = 100000;
  // Steps exempt from the modulus check, for maps that are only eventually
  // contractive.
  long warmup = 0;
  double divergence_threshold = 1e12;
};

struct FixpointResult {
  Eigen::VectorXd point;
  long iterations = 0;
  // Value of the active convergence criterion at the returned point. With the
  // default criterion this is |point - H(point)|.
  double final_residual = 0.0;
  bool converged = false;
  std::vector<double> step_sizes;  // |x_{k+1} - x_k| for each step taken
  // Steps past warmup where |x_{k+1}-x_k| > c*|x_k-x_{k-1}| + 1e-12 despite a
  // claimed modulus c.
  long modulus_violations = 0;
};

// Iterate x_{k+1} = H(x_k) until |x - H(x)| <= tol or max_iter steps.
// Throws DivergenceError if an iterate goes non-finite or the step size
// exceeds the divergence threshold.
FixpointResult iterate_to_fixpoint(const ContractiveMap& map, const Eigen::VectorXd& x0,
                                   const IterateOptions& opts = {});

// Same iteration, convergence judged by a caller-supplied residual function.
FixpointResult iterate_to_fixpoint(const ContractiveMap& map, const Eigen::VectorXd& x0,
                                   const IterateOptions& opts,
                                   const std::function<double(const Eigen::VectorXd&)>& residual);

struct PreservationReport {
  bool preserved = false;      // membership held at every iterate visited
  bool holds_at_final = false;
  long first_violation = -1;   // index of the first iterate outside the set
  FixpointResult run;
};

// Runtime check of the coinduction premise: iterate the map and verify the
// membership predicate pointwise along the orbit and at the final point.
PreservationReport check_closed_property_preserved(
    const ContractiveMap& map, const std::function<bool(const Eigen::VectorXd&)>& membership,
    const Eigen::VectorXd& x0, long steps, double tol = 1e-10);

// Max over pairs of |H(u)-H(v)| / |u-v|; coincident pairs are skipped.
// Throws std::invalid_argument if no pair is usable.
double estimate_modulus(const ContractiveMap& map,
                        const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& pairs);

}  // namespace equigame::fixpoint

#endif
