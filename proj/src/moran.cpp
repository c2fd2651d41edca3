#include "equigame/moran.hpp"

#include <Eigen/Dense>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace equigame::evo {

double reproduction_probability(const MoranState& s) {
  const double ri = s.fitness * s.mutants;
  return ri / (ri + (s.population - s.mutants));
}

MoranState moran_step(const MoranState& s, Rng& rng) {
  if (s.population < 1 || s.mutants < 0 || s.mutants > s.population)
    throw std::invalid_argument("moran_step: invalid state");
  if (!(s.fitness > 0.0)) throw std::invalid_argument("moran_step: fitness must be > 0");
  if (s.absorbing()) throw std::invalid_argument("moran_step: state is absorbing");
  const bool mutant_born = rng.bernoulli(reproduction_probability(s));
  const bool mutant_dies =
      static_cast<int>(rng.below(static_cast<std::uint64_t>(s.population))) < s.mutants;
  MoranState next = s;
  next.mutants += (mutant_born ? 1 : 0) - (mutant_dies ? 1 : 0);
  return next;
}

double fixation_probability_exact(int population, double fitness, int initial_mutants) {
  if (population < 1) throw std::invalid_argument("fixation: population must be >= 1");
  if (!(fitness > 0.0)) throw std::invalid_argument("fixation: fitness must be > 0");
  if (initial_mutants < 0 || initial_mutants > population)
    throw std::invalid_argument("fixation: initial mutant count out of range");
  if (initial_mutants == 0) return 0.0;
  if (initial_mutants == population) return 1.0;

  // rho_i = p+ rho_{i+1} + p- rho_{i-1} + (1 - p+ - p-) rho_i for the
  // transient states 1..N-1, boundary rho_0 = 0, rho_N = 1.
  const int n = population - 1;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  for (int i = 1; i <= n; ++i) {
    const MoranState s{population, i, fitness};
    const double p = reproduction_probability(s);
    const double up = p * (population - i) / population;
    const double down = (1.0 - p) * i / population;
    const int row = i - 1;
    a(row, row) = up + down;
    if (i + 1 <= n)
      a(row, row + 1) = -up;
    else
      b(row) += up;  // rho_N = 1
    if (i - 1 >= 1) a(row, row - 1) = -down;
  }
  const Eigen::VectorXd rho = a.partialPivLu().solve(b);
  return rho[initial_mutants - 1];
}

namespace {

bool run_replica(int population, double fitness, int initial_mutants, Rng& rng) {
  MoranState s{population, initial_mutants, fitness};
  while (!s.absorbing()) s = moran_step(s, rng);
  return s.mutants == s.population;
}

}  // namespace

FixationEstimate simulate_fixation(int population, double fitness, int initial_mutants,
                                   long replicas, std::uint64_t seed, int threads) {
  if (replicas < 1) throw std::invalid_argument("simulate_fixation: replicas must be >= 1");
  if (initial_mutants < 0 || initial_mutants > population)
    throw std::invalid_argument("simulate_fixation: initial mutant count out of range");
  threads = std::max(1, threads);

  std::atomic<long> fixations{0};
  auto worker = [&](long lo, long hi) {
    long local = 0;
    for (long j = lo; j < hi; ++j) {
      Rng rng(seed, static_cast<std::uint64_t>(j));
      if (initial_mutants == population ||
          (initial_mutants > 0 && run_replica(population, fitness, initial_mutants, rng)))
        ++local;
    }
    fixations += local;
  };
  if (threads == 1 || replicas < 2 * threads) {
    worker(0, replicas);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (replicas + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const long lo = t * chunk;
      const long hi = std::min(replicas, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  FixationEstimate est;
  est.replicas = replicas;
  est.seed = seed;
  est.rate = static_cast<double>(fixations.load()) / static_cast<double>(replicas);
  est.standard_error = std::sqrt(est.rate * (1.0 - est.rate) / static_cast<double>(replicas));
  return est;
}

}  // namespace equigame::evo
