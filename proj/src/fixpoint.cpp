#include "equigame/fixpoint.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "equigame/errors.hpp"

namespace equigame::fixpoint {

namespace {

FixpointResult run_iteration(const ContractiveMap& map, const Eigen::VectorXd& x0,
                             const IterateOptions& opts,
                             const std::function<double(const Eigen::VectorXd&)>* residual,
                             std::vector<Eigen::VectorXd>* orbit) {
  if (x0.size() != map.dimension)
    throw std::invalid_argument("iterate_to_fixpoint: x0 has dimension " +
                                std::to_string(x0.size()) + ", map expects " +
                                std::to_string(map.dimension));
  if (!(opts.tol > 0.0)) throw std::invalid_argument("iterate_to_fixpoint: tol must be > 0");

  FixpointResult out;
  Eigen::VectorXd x = x0;
  if (orbit) orbit->push_back(x);
  double prev_step = -1.0;
  for (long k = 0;; ++k) {
    Eigen::VectorXd hx = map.apply(x);
    if (!hx.allFinite())
      throw DivergenceError("map produced a non-finite value at iteration " + std::to_string(k),
                            k);
    const double step = (hx - x).norm();
    const double crit = residual ? (*residual)(x) : step;
    if (crit <= opts.tol) {
      out.point = std::move(x);
      out.iterations = k;
      out.final_residual = crit;
      out.converged = true;
      return out;
    }
    if (k >= opts.max_iter) {
      out.point = std::move(x);
      out.iterations = k;
      out.final_residual = crit;
      out.converged = false;
      return out;
    }
    if (step > opts.divergence_threshold)
      throw DivergenceError("step size " + std::to_string(step) +
                                " exceeded divergence threshold at iteration " + std::to_string(k),
                            k);
    out.step_sizes.push_back(step);
    if (map.modulus && k > opts.warmup && prev_step >= 0.0 &&
        step > *map.modulus * prev_step + 1e-12)
      ++out.modulus_violations;
    prev_step = step;
    x = std::move(hx);
    if (orbit) orbit->push_back(x);
  }
}

}  // namespace

FixpointResult iterate_to_fixpoint(const ContractiveMap& map, const Eigen::VectorXd& x0,
                                   const IterateOptions& opts) {
  return run_iteration(map, x0, opts, nullptr, nullptr);
}

FixpointResult iterate_to_fixpoint(const ContractiveMap& map, const Eigen::VectorXd& x0,
                                   const IterateOptions& opts,
                                   const std::function<double(const Eigen::VectorXd&)>& residual) {
  return run_iteration(map, x0, opts, &residual, nullptr);
}

PreservationReport check_closed_property_preserved(
    const ContractiveMap& map, const std::function<bool(const Eigen::VectorXd&)>& membership,
    const Eigen::VectorXd& x0, long steps, double tol) {
  if (!membership(x0))
    throw std::invalid_argument("check_closed_property_preserved: x0 is not in the set");
  IterateOptions opts;
  opts.tol = tol;
  opts.max_iter = steps;
  std::vector<Eigen::VectorXd> orbit;
  PreservationReport rep;
  rep.run = run_iteration(map, x0, opts, nullptr, &orbit);
  rep.preserved = true;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    if (!membership(orbit[k])) {
      rep.preserved = false;
      rep.first_violation = static_cast<long>(k);
      break;
    }
  }
  rep.holds_at_final = membership(rep.run.point);
  return rep;
}

double estimate_modulus(const ContractiveMap& map,
                        const std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("estimate_modulus: no sample pairs");
  double worst = -1.0;
  for (const auto& [u, v] : pairs) {
    const double duv = (u - v).norm();
    if (duv == 0.0) continue;  // coincident pair, skip
    worst = std::max(worst, (map.apply(u) - map.apply(v)).norm() / duv);
  }
  if (worst < 0.0) throw std::invalid_argument("estimate_modulus: all sample pairs coincident");
  return worst;
}

}  // namespace equigame::fixpoint
