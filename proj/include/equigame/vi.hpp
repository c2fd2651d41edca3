#ifndef EQUIGAME_VI_HPP
#define EQUIGAME_VI_HPP

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "equigame/feasible.hpp"
#include "equigame/rng.hpp"
#include "equigame/schedule.hpp"

namespace equigame::vi {

// Finite-dimensional variational inequality: find x* in K with
// <F(x*), y - x*> >= 0 for all y in K.
struct VIProblem {
  Eigen::Index n = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> F;
  FeasibleSet feasible;
  // Optional analytic Jacobian of F; empty std::function if unknown.
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;
  std::optional<double> mu;  // strong-monotonicity constant
  std::optional<double> L;   // Lipschitz constant
};

struct Solution {
  Eigen::VectorXd point;
  double residual = 0.0;  // natural residual at alpha = 1
  long iterations = 0;
  bool converged = false;
  std::vector<double> trace;  // natural residual per iterate
};

// |x - P_K(x - alpha F(x))|; zero exactly at VI solutions for any alpha > 0.
double natural_residual(const VIProblem& p, const Eigen::Ref<const Eigen::VectorXd>& x,
                        double alpha);

struct MonotonicityReport {
  bool monotone = false;           // empirical mu >= -1e-9
  double mu_lower = 0.0;           // min <F(x)-F(y), x-y> / |x-y|^2 over samples
  double lipschitz_upper = 0.0;    // max |F(x)-F(y)| / |x-y| over samples
  long pairs = 0;
};

// Samples point pairs in K (random draws projected onto K) and estimates the
// monotonicity and Lipschitz moduli empirically.
MonotonicityReport check_monotonicity(const VIProblem& p, int samples, std::uint64_t seed,
                                      double radius = 10.0);

struct SolveOptions {
  double tol = 1e-10;
  long max_iter = 200000;
  Eigen::VectorXd x0;  // empty: start from the projection of the origin
};

// x_{k+1} = P_K(x_k - alpha D^{-1} F(x_k)); needs strong monotonicity.
Solution solve_basic_projection(const VIProblem& p, const Eigen::VectorXd& d_diag, double alpha,
                                const SolveOptions& opts = {});

// Predictor step y_k = P_K(x_k - alpha F(x_k)), then
// x_{k+1} = P_K(x_k - alpha F(y_k)); converges under plain monotonicity.
// alpha <= 0 selects the default mu/L^2 (requires both constants).
Solution solve_extragradient(const VIProblem& p, double alpha, const SolveOptions& opts = {});

// Noise model for stochastic VIs: F_noisy(x, v) with E_v F_noisy(x, v) = F(x),
// plus a sampler for the projected constraint block.
struct StochasticSampler {
  std::function<Eigen::VectorXd(Rng&)> draw_noise;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, const Eigen::VectorXd&)> f_noisy;
  // Empty: block sampled uniformly from the feasible product.
  std::function<int(Rng&)> draw_block;

  // Additive i.i.d. Gaussian noise per coordinate.
  static StochasticSampler additive_gaussian(const VIProblem& p, double sigma);
};

// Two-step update z_k = x_k - alpha_k F_noisy(x_k, v_k),
// x_{k+1} = z_k - beta_k (z_k - P_{w_k} z_k) with sampled block w_k.
// Iterates may leave K; the returned residual is measured against the
// deterministic F. Requires a product feasible set. An empty x0 starts from
// the projection of the origin.
Solution solve_stochastic_two_step(const VIProblem& p, const StochasticSampler& sampler,
                                   const StepSchedule& sched, std::uint64_t seed, long iterations,
                                   const Eigen::VectorXd& x0 = Eigen::VectorXd());

}  // namespace equigame::vi

#endif
