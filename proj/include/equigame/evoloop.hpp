#ifndef EQUIGAME_EVOLOOP_HPP
#define EQUIGAME_EVOLOOP_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

#include "equigame/netecon.hpp"
#include "equigame/rng.hpp"
#include "equigame/vi.hpp"

namespace equigame::evo {

// Multiplicative jitter applied to the production-cost coefficients of a
// cloned producer: each coefficient scales by (1 + eps), eps ~ U(-delta, delta).
struct MutationPolicy {
  double delta = 0.05;
};

struct EvolutionRound {
  int round = 0;
  Eigen::VectorXd equilibrium;
  double residual = 0.0;
  Eigen::VectorXd fitness;  // producer utilities at equilibrium
  int extinct = -1;         // producer replaced after this round
  int parent = -1;          // survivor it was cloned from
};

struct EvolutionTrace {
  std::vector<EvolutionRound> rounds;
  bool truncated = false;
  std::string diagnostic;
  netecon::Model final_model;
};

// Repeated equilibrium-selection-replacement: solve the economy's VI by
// extragradient, score producers by utility at equilibrium, drop the least
// fit, and clone a uniformly chosen survivor into the freed slot (production
// cost and demand rows relabeled to the slot, cost coefficients jittered).
// Population size stays fixed. Deterministic given the rng state. A solver
// failure truncates the trace with a diagnostic instead of throwing.
EvolutionTrace evolutionary_vi_loop(netecon::Model model, const MutationPolicy& mutation,
                                    int rounds, Rng& rng, const vi::SolveOptions& solve_opts,
                                    double alpha);

}  // namespace equigame::evo

#endif
