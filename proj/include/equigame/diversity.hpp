#ifndef EQUIGAME_DIVERSITY_HPP
#define EQUIGAME_DIVERSITY_HPP

#include <string>
#include <vector>

namespace equigame::diversity {

// Moore-style environment (Q, B, P, q0, delta, gamma): actions drive the
// state, predicates are sensed at the current state.
struct MooreEnv {
  int num_states = 0;
  std::vector<std::string> actions;     // B
  std::vector<std::string> predicates;  // P
  int initial_state = 0;
  std::vector<std::vector<int>> delta;   // [state][action] -> state
  std::vector<std::vector<char>> gamma;  // [state][predicate] -> 0/1

  void validate() const;  // throws ValidationError on ragged or dangling tables
};

// A test: run an action string, then sense one predicate.
struct Test {
  std::vector<int> actions;  // applied left to right
  int predicate = 0;

  std::string describe(const MooreEnv& env) const;
};

// qt = q(ap) = (qa)p: drive delta along the actions, then apply gamma.
bool test_value(const MooreEnv& env, int state, const Test& t);

// True iff every pair of distinct states is split by some test.
bool is_reduced(const MooreEnv& env);

// Quotient of the test set by value-equivalence. Classes carry their value
// vector over Q and one representative test; edge[c][b] is the class of the
// prepended test (b t), so stepping the environment by b moves each class's
// value from that source class.
struct DiversityAutomaton {
  std::vector<std::vector<char>> class_values;  // [class][state]
  std::vector<Test> representatives;            // one per class
  std::vector<std::vector<int>> edge;           // [class][action] -> class of (b t)
  std::vector<int> predicate_class;             // [predicate] -> class of the bare test

  int diversity() const { return static_cast<int>(class_values.size()); }
  // Test values at a concrete state, indexed by class.
  std::vector<char> signature(int state) const;
};

// Closure from the bare predicate tests under prepending single actions;
// terminates because at most 2^|Q| distinct value vectors exist.
DiversityAutomaton compute_classes(const MooreEnv& env);

// Number of test equivalence classes.
int diversity(const MooreEnv& env);

// Runs the update graph: after each action, class [t] takes the previous
// value of class [b t]. Returns the predicted predicate values after each
// action. init_values must match the signature of some state.
std::vector<std::vector<char>> simulate(const DiversityAutomaton& da,
                                        const std::vector<char>& init_values,
                                        const std::vector<int>& actions);

// n-bit register: states {0,1}^n, actions rotate-left, rotate-right and
// flip-leftmost, one predicate sensing the leftmost bit. Diversity is 2n
// while the state space is 2^n. n is capped at 20.
MooreEnv make_register_env(int bits);

}  // namespace equigame::diversity

#endif
