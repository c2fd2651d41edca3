#ifndef EQUIGAME_MORAN_HPP
#define EQUIGAME_MORAN_HPP

#include <cstdint>

#include "equigame/rng.hpp"

namespace equigame::evo {

// Birth-death process on a fixed population of size N with i mutants of
// relative fitness r (residents normalized to 1). Absorbing at i = 0 and N.
struct MoranState {
  int population = 0;  // N
  int mutants = 0;     // i
  double fitness = 1.0;  // r

  bool absorbing() const { return mutants == 0 || mutants == population; }
};

// p_i = r i / (r i + N - i): probability the reproducer is a mutant.
double reproduction_probability(const MoranState& s);

// One step: reproducer chosen fitness-weighted, dying individual uniform
// over the N pre-existing individuals. Throws std::invalid_argument on an
// absorbing input.
MoranState moran_step(const MoranState& s, Rng& rng);

// Absorption probability at i = N from i0, via the (N-1)-state linear system
// of the embedded birth-death chain.
double fixation_probability_exact(int population, double fitness, int initial_mutants);

struct FixationEstimate {
  double rate = 0.0;
  double standard_error = 0.0;
  long replicas = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo fixation estimate; replica j draws from stream (seed, j), so
// the result is independent of worker count.
FixationEstimate simulate_fixation(int population, double fitness, int initial_mutants,
                                   long replicas, std::uint64_t seed, int threads = 1);

}  // namespace equigame::evo

#endif
