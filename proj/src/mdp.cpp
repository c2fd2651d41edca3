#include "equigame/mdp.hpp"

#include <cmath>

#include "equigame/errors.hpp"

namespace equigame::coalg {

double MDP::p(int s, int a, int t) const {
  const auto it = prob.find({s, a, t});
  return it == prob.end() ? 0.0 : it->second;
}

void MDP::validate(double tol) const {
  const int ns = static_cast<int>(states.size());
  const int na = static_cast<int>(actions.size());
  for (const auto& [s, a] : admissible)
    if (s < 0 || s >= ns || a < 0 || a >= na)
      throw ValidationError("mdp: admissible pair references unknown state or action");
  for (const auto& [key, value] : prob) {
    const auto& [s, a, t] = key;
    if (!admissible.count({s, a}))
      throw ValidationError("mdp: transition on non-admissible pair (" + states.at(s) + ", " +
                            actions.at(a) + ")");
    if (t < 0 || t >= ns) throw ValidationError("mdp: transition to unknown state");
    if (value < -tol || value > 1.0 + tol)
      throw ValidationError("mdp: probability out of [0,1]");
  }
  for (const auto& [s, a] : admissible) {
    double row = 0.0;
    for (int t = 0; t < ns; ++t) row += p(s, a, t);
    if (std::abs(row - 1.0) > tol)
      throw ValidationError("mdp: row (" + states.at(static_cast<std::size_t>(s)) + ", " +
                            actions.at(static_cast<std::size_t>(a)) + ") sums to " +
                            std::to_string(row));
  }
}

MdpHomCheck check_mdp_homomorphism(const MDP& m, const MDP& target, const std::vector<int>& f,
                                   const std::vector<std::vector<int>>& g, double tol) {
  const int ns = static_cast<int>(m.states.size());
  const int nsp = static_cast<int>(target.states.size());
  if (static_cast<int>(f.size()) != ns || static_cast<int>(g.size()) != ns)
    throw ValidationError("mdp homomorphism: f and g must be total on source states");
  for (int img : f)
    if (img < 0 || img >= nsp) throw ValidationError("mdp homomorphism: f hits unknown state");

  // The definition requires surjections onto the target components.
  std::vector<char> state_hit(static_cast<std::size_t>(nsp), 0);
  for (int img : f) state_hit[static_cast<std::size_t>(img)] = 1;
  for (char hit : state_hit)
    if (!hit) throw ValidationError("mdp homomorphism: f is not surjective onto target states");
  for (int s = 0; s < ns; ++s) {
    std::set<int> mapped;
    for (int a = 0; a < static_cast<int>(m.actions.size()); ++a) {
      if (!m.admissible.count({s, a})) continue;
      const int ap = g[static_cast<std::size_t>(s)].at(static_cast<std::size_t>(a));
      if (!target.admissible.count({f[static_cast<std::size_t>(s)], ap}))
        throw ValidationError("mdp homomorphism: g maps outside admissible target pairs");
      mapped.insert(ap);
    }
    std::set<int> wanted;
    for (const auto& [sp, ap] : target.admissible)
      if (sp == f[static_cast<std::size_t>(s)]) wanted.insert(ap);
    if (mapped != wanted)
      throw ValidationError("mdp homomorphism: g_s is not surjective onto the target's actions at " +
                            target.states.at(static_cast<std::size_t>(f[static_cast<std::size_t>(s)])));
  }

  for (const auto& [s, a] : m.admissible) {
    const int sp = f[static_cast<std::size_t>(s)];
    const int ap = g[static_cast<std::size_t>(s)].at(static_cast<std::size_t>(a));
    // Reward equation.
    const double r = m.reward.count({s, a}) ? m.reward.at({s, a}) : 0.0;
    const double rp = target.reward.count({sp, ap}) ? target.reward.at({sp, ap}) : 0.0;
    if (std::abs(r - rp) > tol) {
      MdpHomCheck out;
      out.detail = "reward mismatch at (" + m.states.at(static_cast<std::size_t>(s)) + ", " +
                   m.actions.at(static_cast<std::size_t>(a)) + "): " + std::to_string(r) +
                   " vs " + std::to_string(rp);
      return out;
    }
    // Aggregated transition equation, one check per f-block.
    for (int tp = 0; tp < static_cast<int>(target.states.size()); ++tp) {
      double block_sum = 0.0;
      for (int t = 0; t < static_cast<int>(m.states.size()); ++t)
        if (f[static_cast<std::size_t>(t)] == tp) block_sum += m.p(s, a, t);
      if (std::abs(block_sum - target.p(sp, ap, tp)) > tol) {
        MdpHomCheck out;
        out.detail = "transition mismatch at (" + m.states.at(static_cast<std::size_t>(s)) + ", " +
                     m.actions.at(static_cast<std::size_t>(a)) + ") toward block of " +
                     target.states.at(static_cast<std::size_t>(tp)) + ": " +
                     std::to_string(block_sum) + " vs " + std::to_string(target.p(sp, ap, tp));
        return out;
      }
    }
  }
  return {true, ""};
}

}  // namespace equigame::coalg
