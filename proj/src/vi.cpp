#include "equigame/vi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "equigame/errors.hpp"
#include "equigame/fixpoint.hpp"

namespace equigame::vi {

double natural_residual(const VIProblem& p, const Eigen::Ref<const Eigen::VectorXd>& x,
                        double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("natural_residual: alpha must be > 0");
  if (!x.allFinite()) throw std::invalid_argument("natural_residual: x must be finite");
  return (x - p.feasible.project(x - alpha * p.F(x))).norm();
}

MonotonicityReport check_monotonicity(const VIProblem& p, int samples, std::uint64_t seed,
                                      double radius) {
  if (samples < 2) throw std::invalid_argument("check_monotonicity: need at least 2 samples");
  Rng rng(seed);
  MonotonicityReport rep;
  rep.mu_lower = std::numeric_limits<double>::infinity();
  rep.lipschitz_upper = 0.0;
  auto draw = [&] {
    Eigen::VectorXd v(p.n);
    for (Eigen::Index i = 0; i < p.n; ++i) v[i] = rng.uniform(-radius, radius);
    return p.feasible.project(v);
  };
  for (int s = 0; s < samples; ++s) {
    const Eigen::VectorXd x = draw();
    const Eigen::VectorXd y = draw();
    const double d2 = (x - y).squaredNorm();
    if (d2 == 0.0) continue;
    const Eigen::VectorXd df = p.F(x) - p.F(y);
    rep.mu_lower = std::min(rep.mu_lower, df.dot(x - y) / d2);
    rep.lipschitz_upper = std::max(rep.lipschitz_upper, df.norm() / std::sqrt(d2));
    ++rep.pairs;
  }
  if (rep.pairs == 0) throw std::runtime_error("check_monotonicity: no usable sample pairs");
  rep.monotone = rep.mu_lower >= -1e-9;
  return rep;
}

namespace {

Eigen::VectorXd starting_point(const VIProblem& p, const SolveOptions& opts) {
  if (opts.x0.size() > 0) {
    if (opts.x0.size() != p.n) throw std::invalid_argument("solve: x0 dimension mismatch");
    return p.feasible.project(opts.x0);
  }
  return p.feasible.project(Eigen::VectorXd::Zero(p.n));
}

Solution run_projection_type(const VIProblem& p,
                             const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& step,
                             const SolveOptions& opts, const char* name) {
  fixpoint::ContractiveMap map{step, std::nullopt, p.n};
  fixpoint::IterateOptions fopts;
  fopts.tol = opts.tol;
  fopts.max_iter = opts.max_iter;
  Solution sol;
  auto residual = [&](const Eigen::VectorXd& x) {
    const double r = natural_residual(p, x, 1.0);
    sol.trace.push_back(r);
    return r;
  };
  fixpoint::FixpointResult res;
  try {
    res = fixpoint::iterate_to_fixpoint(map, starting_point(p, opts), fopts, residual);
  } catch (const DivergenceError& e) {
    throw DivergenceError(std::string(name) + " diverged (" + e.what() +
                              "); try a smaller alpha",
                          e.iteration());
  }
  sol.point = res.point;
  sol.residual = res.final_residual;
  sol.iterations = res.iterations;
  sol.converged = res.converged;
  return sol;
}

}  // namespace

Solution solve_basic_projection(const VIProblem& p, const Eigen::VectorXd& d_diag, double alpha,
                                const SolveOptions& opts) {
  if (!(alpha > 0.0)) throw std::invalid_argument("solve_basic_projection: alpha must be > 0");
  if (d_diag.size() != p.n)
    throw std::invalid_argument("solve_basic_projection: D diagonal dimension mismatch");
  if ((d_diag.array() <= 0.0).any())
    throw std::invalid_argument("solve_basic_projection: D must be positive definite");
  const Eigen::VectorXd d_inv = d_diag.cwiseInverse();
  auto step = [&p, d_inv, alpha](const Eigen::VectorXd& x) {
    return p.feasible.project(x - alpha * d_inv.cwiseProduct(p.F(x)));
  };
  return run_projection_type(p, step, opts, "basic projection");
}

Solution solve_extragradient(const VIProblem& p, double alpha, const SolveOptions& opts) {
  if (alpha <= 0.0) {
    if (!p.mu || !p.L)
      throw std::invalid_argument(
          "solve_extragradient: no alpha given and mu/L unknown; pass alpha explicitly");
    alpha = *p.mu / (*p.L * *p.L);
  }
  auto step = [&p, alpha](const Eigen::VectorXd& x) {
    const Eigen::VectorXd y = p.feasible.project(x - alpha * p.F(x));
    return p.feasible.project(x - alpha * p.F(y));
  };
  return run_projection_type(p, step, opts, "extragradient");
}

StochasticSampler StochasticSampler::additive_gaussian(const VIProblem& p, double sigma) {
  StochasticSampler s;
  const Eigen::Index n = p.n;
  s.draw_noise = [n, sigma](Rng& rng) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = sigma * rng.normal();
    return v;
  };
  auto F = p.F;
  s.f_noisy = [F](const Eigen::VectorXd& x, const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return F(x) + v;
  };
  return s;
}

Solution solve_stochastic_two_step(const VIProblem& p, const StochasticSampler& sampler,
                                   const StepSchedule& sched, std::uint64_t seed, long iterations,
                                   const Eigen::VectorXd& x0) {
  if (p.feasible.kind() != FeasibleSet::Kind::Blocks)
    throw std::invalid_argument(
        "solve_stochastic_two_step: feasible set must be a product of blocks");
  if (x0.size() != 0 && x0.size() != p.n)
    throw std::invalid_argument("solve_stochastic_two_step: x0 dimension mismatch");
  const int m = p.feasible.num_blocks();
  Rng rng(seed);
  Eigen::VectorXd x =
      x0.size() == p.n ? x0 : Eigen::VectorXd(p.feasible.project(Eigen::VectorXd::Zero(p.n)));
  for (long k = 0; k < iterations; ++k) {
    const double alpha = sched.alpha(k);
    const double beta = sched.beta(k);
    const Eigen::VectorXd v = sampler.draw_noise(rng);
    const Eigen::VectorXd z = x - alpha * sampler.f_noisy(x, v);
    if (!z.allFinite())
      throw DivergenceError("stochastic iterate went non-finite at iteration " + std::to_string(k),
                            k);
    const int w = sampler.draw_block ? sampler.draw_block(rng)
                                     : static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    const Eigen::VectorXd pz = p.feasible.project_block(w, z);
    // beta = 1 collapses to the projected point exactly.
    x = (beta == 1.0) ? pz : Eigen::VectorXd(z - beta * (z - pz));
  }
  Solution sol;
  sol.point = x;
  sol.residual = natural_residual(p, x, 1.0);
  sol.iterations = iterations;
  sol.converged = true;  // fixed-horizon method; certificate is the residual
  return sol;
}

}  // namespace equigame::vi
