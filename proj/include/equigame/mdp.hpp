#ifndef EQUIGAME_MDP_HPP
#define EQUIGAME_MDP_HPP

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace equigame::coalg {

// Markov decision process (S, A, Psi, P, R) with admissible pairs Psi and
// sparse transition probabilities.
struct MDP {
  std::vector<std::string> states;
  std::vector<std::string> actions;
  std::set<std::pair<int, int>> admissible;             // Psi
  std::map<std::tuple<int, int, int>, double> prob;     // (s,a,s') -> P
  std::map<std::pair<int, int>, double> reward;         // (s,a) -> R

  double p(int s, int a, int t) const;
  // Throws ValidationError unless every admissible row sums to 1 within tol.
  void validate(double tol = 1e-9) const;
};

struct MdpHomCheck {
  bool ok = false;
  std::string detail;
};

// Verifies the aggregated-transition and reward equations of an MDP
// homomorphism (f, {g_s}): for every (s, a) in Psi and every block [t'] of f,
//   P'(f(s), g_s(a), t') = sum over the block of P(s, a, .)
//   R'(f(s), g_s(a)) = R(s, a)
// f and each g_s must be total and surjective onto the target components.
MdpHomCheck check_mdp_homomorphism(const MDP& m, const MDP& target, const std::vector<int>& f,
                                   const std::vector<std::vector<int>>& g, double tol = 1e-9);

}  // namespace equigame::coalg

#endif
