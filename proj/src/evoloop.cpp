#include "equigame/evoloop.hpp"

#include <numeric>
#include <stdexcept>

#include "equigame/errors.hpp"

namespace equigame::evo {

namespace {

using netecon::Block;
using netecon::Model;
using netecon::Polynomial;

// Variable map swapping producer slots a and b across the whole economy.
std::vector<int> swap_producers(const Model& model, int a, int b) {
  std::vector<int> map(static_cast<std::size_t>(model.dimension()));
  for (int v = 0; v < model.dimension(); ++v) map[static_cast<std::size_t>(v)] = v;
  for (auto block : {Block::Q, Block::Quality, Block::Price})
    for (int j = 0; j < model.n; ++j)
      for (int k = 0; k < model.o; ++k) {
        const int va = model.var_index(block, a, j, k);
        const int vb = model.var_index(block, b, j, k);
        std::swap(map[static_cast<std::size_t>(va)], map[static_cast<std::size_t>(vb)]);
      }
  return map;
}

// Clone producer `parent` into slot `dead`: production cost and demand-price
// rows are copied with the two slots' variables swapped, then the production
// cost coefficients are jittered.
void replace_producer(Model& model, int dead, int parent, double delta, Rng& rng) {
  if (dead == parent) return;
  const std::vector<int> relabel = swap_producers(model, dead, parent);
  if (!model.f[static_cast<std::size_t>(parent)].analytic())
    throw std::invalid_argument("evolutionary loop needs polynomial production costs");
  Polynomial cost = model.f[static_cast<std::size_t>(parent)].poly().relabeled(relabel);
  for (auto& term : cost.terms()) term.coef *= 1.0 + rng.uniform(-delta, delta);
  model.f[static_cast<std::size_t>(dead)] = netecon::CostFn(std::move(cost));
  for (int j = 0; j < model.n; ++j)
    for (int k = 0; k < model.o; ++k) {
      const auto dst = static_cast<std::size_t>(model.link_index(dead, j, k));
      const auto src = static_cast<std::size_t>(model.link_index(parent, j, k));
      model.rho[dst] = netecon::CostFn(model.rho[src].poly().relabeled(relabel));
    }
}

}  // namespace

EvolutionTrace evolutionary_vi_loop(Model model, const MutationPolicy& mutation, int rounds,
                                    Rng& rng, const vi::SolveOptions& solve_opts, double alpha) {
  if (model.m < 2)
    throw std::invalid_argument("evolutionary loop needs at least two service providers");
  if (rounds < 1) throw std::invalid_argument("evolutionary loop: rounds must be >= 1");

  EvolutionTrace trace;
  for (int t = 0; t < rounds; ++t) {
    EvolutionRound round;
    round.round = t;
    try {
      const vi::VIProblem problem = netecon::assemble_vi(model);
      const vi::Solution sol = vi::solve_extragradient(problem, alpha, solve_opts);
      if (!sol.converged) {
        trace.truncated = true;
        trace.diagnostic = "solver failed to converge at round " + std::to_string(t) +
                           " (residual " + std::to_string(sol.residual) + ")";
        break;
      }
      round.equilibrium = sol.point;
      round.residual = sol.residual;
      round.fitness = netecon::utilities(model, sol.point).producers;
    } catch (const DivergenceError& e) {
      trace.truncated = true;
      trace.diagnostic = "solver diverged at round " + std::to_string(t) + ": " + e.what();
      break;
    }

    // Selection: the least-fit producer goes extinct (lowest index on ties),
    // replaced by a clone of a uniformly chosen survivor.
    Eigen::Index dead = 0;
    round.fitness.minCoeff(&dead);
    int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(model.m - 1)));
    if (parent >= static_cast<int>(dead)) ++parent;
    round.extinct = static_cast<int>(dead);
    round.parent = parent;
    trace.rounds.push_back(round);

    if (t + 1 < rounds)
      replace_producer(model, static_cast<int>(dead), parent, mutation.delta, rng);
  }
  trace.final_model = std::move(model);
  return trace;
}

}  // namespace equigame::evo
