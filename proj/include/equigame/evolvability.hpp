#ifndef EQUIGAME_EVOLVABILITY_HPP
#define EQUIGAME_EVOLVABILITY_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "equigame/rng.hpp"

namespace equigame::evo {

// Monotone conjunction over n boolean variables, evaluating to +1 exactly
// when every literal is set. The empty conjunction is identically +1.
class Conjunction {
 public:
  Conjunction() = default;
  Conjunction(int vars, std::uint32_t literal_mask) : n_(vars), literals_(literal_mask) {
    if (vars < 0 || vars > 24) throw std::invalid_argument("conjunction: need 0 <= n <= 24");
    if (vars < 32 && (literal_mask >> vars) != 0)
      throw std::invalid_argument("conjunction: literal outside variable range");
  }
  static Conjunction of(int vars, std::initializer_list<int> literals) {
    std::uint32_t mask = 0;
    for (int v : literals) mask |= 1u << v;
    return Conjunction(vars, mask);
  }

  int vars() const { return n_; }
  std::uint32_t literals() const { return literals_; }
  int size() const { return __builtin_popcount(literals_); }

  int operator()(std::uint32_t assignment) const {
    return (assignment & literals_) == literals_ ? +1 : -1;
  }

  // All single-literal additions and deletions.
  std::vector<Conjunction> neighbors() const;

  bool operator==(const Conjunction& other) const = default;

 private:
  int n_ = 0;
  std::uint32_t literals_ = 0;
};

// Distribution over the 2^n assignments: uniform or an explicit table.
class AssignmentDist {
 public:
  static AssignmentDist uniform(int vars);
  // Throws std::invalid_argument unless the table sums to 1 within 1e-9.
  static AssignmentDist table(int vars, std::vector<double> probs);

  int vars() const { return n_; }
  double prob(std::uint32_t assignment) const {
    return table_.empty() ? uniform_p_ : table_[assignment];
  }
  std::uint32_t sample(Rng& rng) const;

 private:
  int n_ = 0;
  double uniform_p_ = 0.0;
  std::vector<double> table_;
};

// Perf_f(r, D) = sum_x f(x) r(x) D(x): the correlation between hypothesis
// and target under D. Exact enumeration; n <= 24.
template <class R, class F>
double perf(const R& hypothesis, const F& target, const AssignmentDist& dist) {
  if (dist.vars() > 24) throw std::invalid_argument("perf: exact mode needs n <= 24");
  double s = 0.0;
  const std::uint32_t count = 1u << dist.vars();
  for (std::uint32_t x = 0; x < count; ++x)
    s += static_cast<double>(hypothesis(x) * target(x)) * dist.prob(x);
  return s;
}

// Seeded sampling estimator for larger n.
template <class R, class F>
double perf_sampled(const R& hypothesis, const F& target, const AssignmentDist& dist,
                    long samples, Rng& rng) {
  if (samples < 1) throw std::invalid_argument("perf_sampled: samples must be >= 1");
  double s = 0.0;
  for (long i = 0; i < samples; ++i) {
    const std::uint32_t x = dist.sample(rng);
    s += hypothesis(x) * target(x);
  }
  return s / static_cast<double>(samples);
}

struct EvolutionStep {
  Conjunction hypothesis;
  double performance = 0.0;
};

// Single-literal mutation walk. Each generation scores every add/delete
// neighbor exactly: a uniformly random neighbor gaining at least `tolerance`
// is taken; failing that, a uniformly random neighbor within the tolerance
// band; otherwise the hypothesis stays. tolerance <= 0 selects 1/2^(n+1).
std::vector<EvolutionStep> evolve_conjunction(const Conjunction& target,
                                              const AssignmentDist& dist, int generations,
                                              double tolerance, Rng& rng,
                                              const Conjunction& start = {});

}  // namespace equigame::evo

#endif
