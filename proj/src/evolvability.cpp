#include "equigame/evolvability.hpp"

#include <cmath>

namespace equigame::evo {

std::vector<Conjunction> Conjunction::neighbors() const {
  std::vector<Conjunction> out;
  for (int v = 0; v < n_; ++v) {
    const std::uint32_t bit = 1u << v;
    out.emplace_back(n_, literals_ ^ bit);  // toggles: delete if present, add if absent
  }
  return out;
}

AssignmentDist AssignmentDist::uniform(int vars) {
  if (vars < 0 || vars > 24) throw std::invalid_argument("distribution: need 0 <= n <= 24");
  AssignmentDist d;
  d.n_ = vars;
  d.uniform_p_ = std::ldexp(1.0, -vars);
  return d;
}

AssignmentDist AssignmentDist::table(int vars, std::vector<double> probs) {
  if (vars < 0 || vars > 24) throw std::invalid_argument("distribution: need 0 <= n <= 24");
  if (probs.size() != (std::size_t{1} << vars))
    throw std::invalid_argument("distribution: table must have 2^n entries");
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw std::invalid_argument("distribution: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("distribution: table sums to " + std::to_string(sum) +
                                ", expected 1");
  AssignmentDist d;
  d.n_ = vars;
  d.table_ = std::move(probs);
  return d;
}

std::uint32_t AssignmentDist::sample(Rng& rng) const {
  if (table_.empty()) return static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n_));
  double u = rng.uniform();
  for (std::uint32_t x = 0; x + 1 < table_.size(); ++x) {
    u -= table_[x];
    if (u < 0.0) return x;
  }
  return static_cast<std::uint32_t>(table_.size() - 1);
}

std::vector<EvolutionStep> evolve_conjunction(const Conjunction& target,
                                              const AssignmentDist& dist, int generations,
                                              double tolerance, Rng& rng,
                                              const Conjunction& start) {
  const int n = dist.vars();
  if (target.vars() != n) throw std::invalid_argument("evolve_conjunction: target arity mismatch");
  if (tolerance <= 0.0) tolerance = std::ldexp(1.0, -(n + 1));

  Conjunction current = start.vars() == n ? start : Conjunction(n, 0);
  std::vector<EvolutionStep> trace;
  trace.push_back({current, perf(current, target, dist)});
  for (int g = 0; g < generations; ++g) {
    const double base = trace.back().performance;
    if (base == 1.0) break;  // optimum is absorbing: every edit is deleterious
    std::vector<EvolutionStep> beneficial, neutral;
    for (const Conjunction& cand : current.neighbors()) {
      const double score = perf(cand, target, dist);
      if (score >= base + tolerance)
        beneficial.push_back({cand, score});
      else if (score > base - tolerance)
        neutral.push_back({cand, score});
    }
    const std::vector<EvolutionStep>* pool =
        !beneficial.empty() ? &beneficial : (!neutral.empty() ? &neutral : nullptr);
    if (pool) {
      const auto& pick = (*pool)[rng.below(pool->size())];
      current = pick.hypothesis;
      trace.push_back(pick);
    } else {
      trace.push_back({current, base});
    }
  }
  return trace;
}

}  // namespace equigame::evo
