#ifndef EQUIGAME_LTS_HPP
#define EQUIGAME_LTS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace equigame::coalg {

// Finite labeled transition system (S, A, ->) as a P(A x S)-coalgebra.
struct LTS {
  std::vector<std::string> states;
  std::vector<std::string> labels;
  // (state index, label index, state index)
  std::set<std::array<int, 3>> transitions;

  int state_index(const std::string& name) const;
  int label_index(const std::string& name) const;
  LTS& add(const std::string& s, const std::string& a, const std::string& t);
  // Successors of s as (label name, successor index) pairs.
  std::set<std::pair<std::string, int>> successors(int s) const;
  void validate() const;  // throws ValidationError on dangling references
};

// Relation between the state sets of two systems, as index pairs.
struct StateRelation {
  std::set<std::pair<int, int>> pairs;

  bool contains(int s, int t) const { return pairs.count({s, t}) > 0; }
  StateRelation inverse() const;
  static StateRelation compose(const StateRelation& r, const StateRelation& q);
  static StateRelation unite(const StateRelation& r, const StateRelation& q);
};

struct BisimWitness {
  int s = -1, t = -1;        // related pair where matching failed
  std::string label;
  int successor = -1;        // unmatched successor state
  bool forward = true;       // true: left move unmatched, false: right move
};

struct BisimCheck {
  bool ok = false;
  std::optional<BisimWitness> witness;
};

// Mutual step-matching closed under successors, both clauses. The systems
// must share a label alphabet; labels are matched by name.
BisimCheck is_bisimulation(const LTS& a, const LTS& b, const StateRelation& rel);

// Union of all bisimulations, computed as the greatest fixed point of the
// pair-deletion refinement operator starting from the full relation.
StateRelation greatest_bisimulation(const LTS& a, const LTS& b);

struct HomCheck {
  bool ok = false;
  std::string detail;  // counterexample description when not ok
};

// F(f) . alpha_A = alpha_B . f for the powerset functor: for every state s,
// the f-image of its successor set equals the successor set of f(s).
HomCheck check_homomorphism(const std::vector<int>& f, const LTS& a, const LTS& b);

// Image {(f(t), g(t))} of a span of homomorphisms f: T -> S, g: T -> U.
// Throws std::invalid_argument unless both maps are homomorphisms.
StateRelation span_image_bisimulation(const std::vector<int>& f, const std::vector<int>& g,
                                      const LTS& t, const LTS& s, const LTS& u);

// Kernel {(s, s') : f(s) = f(s')} of a state map.
StateRelation kernel(const std::vector<int>& f, const LTS& a);

// Quotient of a system by a bisimulation equivalence on itself; `classes`
// receives the canonical map onto class indices. The quotient map is a
// coalgebra homomorphism.
LTS quotient(const LTS& a, const StateRelation& equivalence, std::vector<int>* classes);

}  // namespace equigame::coalg

#endif
