#include "equigame/diversity.hpp"

#include <map>
#include <stdexcept>

#include "equigame/errors.hpp"

namespace equigame::diversity {

void MooreEnv::validate() const {
  if (num_states < 1) throw ValidationError("env: need at least one state");
  if (actions.empty() || predicates.empty())
    throw ValidationError("env: need at least one action and one predicate");
  if (static_cast<int>(delta.size()) != num_states ||
      static_cast<int>(gamma.size()) != num_states)
    throw ValidationError("env: delta/gamma must have one row per state");
  for (int q = 0; q < num_states; ++q) {
    if (delta[static_cast<std::size_t>(q)].size() != actions.size())
      throw ValidationError("env: delta row " + std::to_string(q) + " is ragged");
    if (gamma[static_cast<std::size_t>(q)].size() != predicates.size())
      throw ValidationError("env: gamma row " + std::to_string(q) + " is ragged");
    for (int next : delta[static_cast<std::size_t>(q)])
      if (next < 0 || next >= num_states)
        throw ValidationError("env: delta row " + std::to_string(q) + " leaves the state set");
  }
}

std::string Test::describe(const MooreEnv& env) const {
  std::string s;
  for (int a : actions) s += env.actions.at(static_cast<std::size_t>(a));
  s += env.predicates.at(static_cast<std::size_t>(predicate));
  return s;
}

bool test_value(const MooreEnv& env, int state, const Test& t) {
  if (state < 0 || state >= env.num_states) throw std::invalid_argument("test_value: bad state");
  int q = state;
  for (int a : t.actions) q = env.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(a)];
  return env.gamma[static_cast<std::size_t>(q)][static_cast<std::size_t>(t.predicate)] != 0;
}

std::vector<char> DiversityAutomaton::signature(int state) const {
  std::vector<char> sig(class_values.size());
  for (std::size_t c = 0; c < class_values.size(); ++c)
    sig[c] = class_values[c][static_cast<std::size_t>(state)];
  return sig;
}

DiversityAutomaton compute_classes(const MooreEnv& env) {
  env.validate();
  DiversityAutomaton da;
  std::map<std::vector<char>, int> seen;
  const auto nq = static_cast<std::size_t>(env.num_states);

  auto intern = [&](std::vector<char> values, Test rep) {
    const auto it = seen.find(values);
    if (it != seen.end()) return it->second;
    const int id = static_cast<int>(da.class_values.size());
    seen.emplace(values, id);
    da.class_values.push_back(std::move(values));
    da.representatives.push_back(std::move(rep));
    return id;
  };

  // Seed with the bare predicate tests.
  da.predicate_class.resize(env.predicates.size());
  for (std::size_t p = 0; p < env.predicates.size(); ++p) {
    std::vector<char> values(nq);
    for (std::size_t q = 0; q < nq; ++q) values[q] = env.gamma[q][p];
    da.predicate_class[p] = intern(std::move(values), Test{{}, static_cast<int>(p)});
  }

  // Prepending b to t evaluates t after delta(., b), so new vectors are
  // compositions of known ones with delta; close until nothing new appears.
  for (std::size_t c = 0; c < da.class_values.size(); ++c) {
    da.edge.emplace_back(env.actions.size(), -1);
    for (std::size_t b = 0; b < env.actions.size(); ++b) {
      std::vector<char> values(nq);
      for (std::size_t q = 0; q < nq; ++q)
        values[q] = da.class_values[c][static_cast<std::size_t>(env.delta[q][b])];
      Test rep = da.representatives[c];
      rep.actions.insert(rep.actions.begin(), static_cast<int>(b));
      da.edge[c][b] = intern(std::move(values), std::move(rep));
    }
  }
  return da;
}

int diversity(const MooreEnv& env) { return compute_classes(env).diversity(); }

bool is_reduced(const MooreEnv& env) {
  const DiversityAutomaton da = compute_classes(env);
  std::map<std::vector<char>, int> sigs;
  for (int q = 0; q < env.num_states; ++q)
    if (!sigs.emplace(da.signature(q), q).second) return false;
  return true;
}

std::vector<std::vector<char>> simulate(const DiversityAutomaton& da,
                                        const std::vector<char>& init_values,
                                        const std::vector<int>& actions) {
  if (init_values.size() != da.class_values.size())
    throw std::invalid_argument("simulate: init_values must cover every class");
  // Values must be realizable as some state's signature.
  const std::size_t nq = da.class_values.empty() ? 0 : da.class_values.front().size();
  bool realizable = false;
  for (std::size_t q = 0; q < nq && !realizable; ++q) {
    realizable = true;
    for (std::size_t c = 0; c < da.class_values.size(); ++c)
      if ((da.class_values[c][q] != 0) != (init_values[c] != 0)) {
        realizable = false;
        break;
      }
  }
  if (!realizable)
    throw std::invalid_argument("simulate: init_values match no state signature");

  std::vector<char> values = init_values;
  std::vector<std::vector<char>> out;
  out.reserve(actions.size());
  for (int b : actions) {
    std::vector<char> next(values.size());
    for (std::size_t c = 0; c < values.size(); ++c)
      next[c] = values[static_cast<std::size_t>(
          da.edge[c][static_cast<std::size_t>(b)])];
    values = std::move(next);
    std::vector<char> sensed(da.predicate_class.size());
    for (std::size_t p = 0; p < da.predicate_class.size(); ++p)
      sensed[p] = values[static_cast<std::size_t>(da.predicate_class[p])];
    out.push_back(std::move(sensed));
  }
  return out;
}

MooreEnv make_register_env(int bits) {
  if (bits < 1) throw std::invalid_argument("register env: need at least one bit");
  if (bits > 20) throw std::invalid_argument("register env: size capped at 20 bits");
  MooreEnv env;
  env.num_states = 1 << bits;
  env.actions = {"L", "R", "F"};
  env.predicates = {"1"};  // leftmost bit is set
  env.initial_state = 0;
  const int top = 1 << (bits - 1);
  const int mask = (1 << bits) - 1;
  env.delta.resize(static_cast<std::size_t>(env.num_states));
  env.gamma.resize(static_cast<std::size_t>(env.num_states));
  for (int q = 0; q < env.num_states; ++q) {
    const int left = ((q << 1) & mask) | ((q & top) ? 1 : 0);
    const int right = (q >> 1) | ((q & 1) ? top : 0);
    const int flip = q ^ top;
    env.delta[static_cast<std::size_t>(q)] = {left, right, flip};
    env.gamma[static_cast<std::size_t>(q)] = {static_cast<char>((q & top) ? 1 : 0)};
  }
  return env;
}

}  // namespace equigame::diversity
