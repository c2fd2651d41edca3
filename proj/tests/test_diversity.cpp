#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "equigame/diversity.hpp"
#include "equigame/errors.hpp"
#include "equigame/json_io.hpp"
#include "testutil.hpp"

using equigame::Rng;
using equigame::ValidationError;
using namespace equigame::diversity;

namespace {

// Oracle: value of a test by literally running the true environment.
std::vector<char> run_env(const MooreEnv& env, int start, const std::vector<int>& actions,
                          int predicate) {
  std::vector<char> out;
  int q = start;
  for (int b : actions) {
    q = env.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(b)];
    out.push_back(env.gamma[static_cast<std::size_t>(q)][static_cast<std::size_t>(predicate)]);
  }
  return out;
}

// Random environment, rejection-sampled until reduced.
MooreEnv random_reduced_env(Rng& rng, int states, int actions, int predicates) {
  while (true) {
    MooreEnv env;
    env.num_states = states;
    for (int a = 0; a < actions; ++a) env.actions.push_back(std::string(1, 'a' + a));
    for (int p = 0; p < predicates; ++p) env.predicates.push_back("p" + std::to_string(p));
    env.initial_state = 0;
    env.delta.resize(static_cast<std::size_t>(states));
    env.gamma.resize(static_cast<std::size_t>(states));
    for (int q = 0; q < states; ++q) {
      for (int a = 0; a < actions; ++a)
        env.delta[static_cast<std::size_t>(q)].push_back(
            static_cast<int>(rng.below(static_cast<std::uint64_t>(states))));
      for (int p = 0; p < predicates; ++p)
        env.gamma[static_cast<std::size_t>(q)].push_back(rng.bernoulli(0.5) ? 1 : 0);
    }
    if (is_reduced(env)) return env;
  }
}

int leftmost_bit_state(int bits, const std::string& pattern) {
  // "101" -> integer state with the leftmost character as most significant bit
  int q = 0;
  for (char ch : pattern) q = (q << 1) | (ch == '1');
  REQUIRE(static_cast<int>(pattern.size()) == bits);
  return q;
}

}  // namespace

TEST_CASE("test_value runs actions then senses") {
  const MooreEnv env = make_register_env(3);
  const int s101 = leftmost_bit_state(3, "101");
  SUBCASE("empty action string is gamma") {
    CHECK(test_value(env, s101, Test{{}, 0}));
    CHECK_FALSE(test_value(env, leftmost_bit_state(3, "001"), Test{{}, 0}));
  }
  SUBCASE("the three canonical tests all hold at 101") {
    const int L = 0, R = 1, F = 2;
    CHECK(test_value(env, s101, Test{{}, 0}));      // "1"
    CHECK(test_value(env, s101, Test{{R}, 0}));     // "R1"
    CHECK(test_value(env, s101, Test{{L, F}, 0}));  // "LF1"
  }
}

TEST_CASE("register environments") {
  for (int bits : {1, 2, 3, 4}) {
    const MooreEnv env = make_register_env(bits);
    CHECK(env.num_states == (1 << bits));
    CHECK(diversity(env) == 2 * bits);
    CHECK(is_reduced(env));
  }
  CHECK_THROWS_AS(make_register_env(0), std::invalid_argument);
  CHECK_THROWS_AS(make_register_env(21), std::invalid_argument);
}

TEST_CASE("diversity bounds on random reduced environments") {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const MooreEnv env = random_reduced_env(rng, 4, 2 + static_cast<int>(rng.below(2)),
                                            1 + static_cast<int>(rng.below(2)));
    const int d = diversity(env);
    CHECK(d >= static_cast<int>(std::ceil(std::log2(env.num_states))));
    CHECK(d <= 1 << env.num_states);
  }
}

TEST_CASE("update graph is total and sound") {
  Rng rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const MooreEnv env = random_reduced_env(rng, 4, 2, 2);
    const DiversityAutomaton da = compute_classes(env);
    for (std::size_t c = 0; c < da.edge.size(); ++c)
      for (std::size_t b = 0; b < env.actions.size(); ++b) {
        const int src = da.edge[c][b];
        REQUIRE(src >= 0);
        // Prepending b to class c's representative realizes class src:
        // value of (b t) at q is the value of t at delta(q, b).
        for (int q = 0; q < env.num_states; ++q)
          CHECK(da.class_values[static_cast<std::size_t>(src)][static_cast<std::size_t>(q)] ==
                da.class_values[c][static_cast<std::size_t>(
                    env.delta[static_cast<std::size_t>(q)][b])]);
      }
  }
}

TEST_CASE("duplicated state breaks reducedness") {
  MooreEnv env = make_register_env(2);
  // Add a clone of state 0 reachable nowhere: same outputs, same moves.
  env.num_states += 1;
  env.delta.push_back(env.delta[0]);
  env.gamma.push_back(env.gamma[0]);
  CHECK_FALSE(is_reduced(env));
}

TEST_CASE("simulation by the diversity automaton") {
  SUBCASE("empty action string leaves the initial senses") {
    const MooreEnv env = make_register_env(2);
    const DiversityAutomaton da = compute_classes(env);
    const auto out = simulate(da, da.signature(env.initial_state), {});
    CHECK(out.empty());
  }
  SUBCASE("register from 101 over random strings of length 50") {
    const MooreEnv env = make_register_env(3);
    const DiversityAutomaton da = compute_classes(env);
    const int start = leftmost_bit_state(3, "101");
    Rng rng(16);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> actions;
      for (int k = 0; k < 50; ++k) actions.push_back(static_cast<int>(rng.below(3)));
      const auto predicted = simulate(da, da.signature(start), actions);
      const auto truth = run_env(env, start, actions, 0);
      REQUIRE(predicted.size() == truth.size());
      for (std::size_t k = 0; k < truth.size(); ++k) CHECK(predicted[k][0] == truth[k]);
    }
  }
  SUBCASE("2-bit register exhaustively over all strings up to length 4") {
    const MooreEnv env = make_register_env(2);
    const DiversityAutomaton da = compute_classes(env);
    for (int start = 0; start < env.num_states; ++start) {
      std::vector<std::vector<int>> frontier{{}};
      for (int len = 1; len <= 4; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : frontier)
          for (int b = 0; b < 3; ++b) {
            auto actions = prefix;
            actions.push_back(b);
            next.push_back(actions);
            const auto predicted = simulate(da, da.signature(start), actions);
            const auto truth = run_env(env, start, actions, 0);
            for (std::size_t k = 0; k < truth.size(); ++k) CHECK(predicted[k][0] == truth[k]);
          }
        frontier = std::move(next);
      }
    }
  }
  SUBCASE("random reduced envs agree with ground truth") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      const MooreEnv env = random_reduced_env(rng, 4, 2, 2);
      const DiversityAutomaton da = compute_classes(env);
      for (int run = 0; run < 50; ++run) {
        const int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(env.num_states)));
        std::vector<int> actions;
        for (int k = 0; k < 50; ++k)
          actions.push_back(static_cast<int>(rng.below(env.actions.size())));
        const auto predicted = simulate(da, da.signature(start), actions);
        for (std::size_t p = 0; p < env.predicates.size(); ++p) {
          const auto truth = run_env(env, start, actions, static_cast<int>(p));
          for (std::size_t k = 0; k < truth.size(); ++k) CHECK(predicted[k][p] == truth[k]);
        }
      }
    }
  }
  SUBCASE("inconsistent initial values are rejected") {
    const MooreEnv env = make_register_env(2);
    const DiversityAutomaton da = compute_classes(env);
    // 2-bit register classes: p, Lp, Fp, LFp; (p true, Fp true) is impossible
    // because F flips the sensed bit.
    auto sig = da.signature(0);
    std::vector<char> impossible(sig.size(), 1);
    impossible[static_cast<std::size_t>(da.predicate_class[0])] = 1;
    bool found_impossible = false;
    // Search for a value vector matching no state.
    for (std::uint32_t mask = 0; mask < (1u << sig.size()) && !found_impossible; ++mask) {
      std::vector<char> candidate(sig.size());
      for (std::size_t c = 0; c < sig.size(); ++c) candidate[c] = (mask >> c) & 1;
      bool matches = false;
      for (int q = 0; q < env.num_states && !matches; ++q) matches = candidate == da.signature(q);
      if (!matches) {
        found_impossible = true;
        CHECK_THROWS_AS(static_cast<void>(simulate(da, candidate, {0})), std::invalid_argument);
      }
    }
    CHECK(found_impossible);
  }
  SUBCASE("reduced environments identify states by their signatures") {
    Rng rng(18);
    for (int trial = 0; trial < 20; ++trial) {
      const MooreEnv env = random_reduced_env(rng, 5, 2, 2);
      const DiversityAutomaton da = compute_classes(env);
      std::set<std::vector<char>> seen;
      for (int q = 0; q < env.num_states; ++q) CHECK(seen.insert(da.signature(q)).second);
    }
  }
}

TEST_CASE("environment specs and JSON") {
  SUBCASE("builder strings") {
    CHECK(equigame::io::parse_env_spec("register:3").num_states == 8);
    CHECK(equigame::io::parse_env_spec("register:n=2").num_states == 4);
    CHECK_THROWS_AS(equigame::io::parse_env_spec("cube:2"), ValidationError);
  }
  SUBCASE("explicit tables") {
    nlohmann::json j;
    j["states"] = 2;
    j["actions"] = {"t"};
    j["predicates"] = {"on"};
    j["q0"] = 0;
    j["delta"] = {{1}, {0}};
    j["gamma"] = {{0}, {1}};
    const MooreEnv env = equigame::io::read_env(j);
    CHECK(diversity(env) == 2);
    SUBCASE("ragged tables are reported") {
      j["delta"] = {{1}};
      CHECK_THROWS_AS(static_cast<void>(equigame::io::read_env(j)), ValidationError);
    }
  }
  SUBCASE("automaton export carries the update graph") {
    const MooreEnv env = make_register_env(2);
    const auto j = equigame::io::write_diversity_automaton(compute_classes(env), env);
    CHECK(j["diversity"] == 4);
    CHECK(j["classes"].size() == 4);
    CHECK(j["edges"].size() == 4 * 3);
  }
}
