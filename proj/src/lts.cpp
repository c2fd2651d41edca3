#include "equigame/lts.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "equigame/errors.hpp"

namespace equigame::coalg {

int LTS::state_index(const std::string& name) const {
  const auto it = std::find(states.begin(), states.end(), name);
  return it == states.end() ? -1 : static_cast<int>(it - states.begin());
}

int LTS::label_index(const std::string& name) const {
  const auto it = std::find(labels.begin(), labels.end(), name);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

LTS& LTS::add(const std::string& s, const std::string& a, const std::string& t) {
  auto intern = [](std::vector<std::string>& pool, const std::string& name) {
    const auto it = std::find(pool.begin(), pool.end(), name);
    if (it != pool.end()) return static_cast<int>(it - pool.begin());
    pool.push_back(name);
    return static_cast<int>(pool.size() - 1);
  };
  const int si = intern(states, s);
  const int ai = intern(labels, a);
  const int ti = intern(states, t);
  transitions.insert({si, ai, ti});
  return *this;
}

std::set<std::pair<std::string, int>> LTS::successors(int s) const {
  std::set<std::pair<std::string, int>> out;
  for (const auto& [src, lab, dst] : transitions)
    if (src == s) out.insert({labels[static_cast<std::size_t>(lab)], dst});
  return out;
}

void LTS::validate() const {
  const int ns = static_cast<int>(states.size());
  const int nl = static_cast<int>(labels.size());
  for (const auto& [src, lab, dst] : transitions)
    if (src < 0 || src >= ns || dst < 0 || dst >= ns || lab < 0 || lab >= nl)
      throw ValidationError("lts: transition references undeclared state or label");
}

StateRelation StateRelation::inverse() const {
  StateRelation out;
  for (const auto& [s, t] : pairs) out.pairs.insert({t, s});
  return out;
}

StateRelation StateRelation::compose(const StateRelation& r, const StateRelation& q) {
  StateRelation out;
  for (const auto& [s, t] : r.pairs)
    for (const auto& [t2, u] : q.pairs)
      if (t == t2) out.pairs.insert({s, u});
  return out;
}

StateRelation StateRelation::unite(const StateRelation& r, const StateRelation& q) {
  StateRelation out = r;
  out.pairs.insert(q.pairs.begin(), q.pairs.end());
  return out;
}

namespace {

void check_relation_bounds(const LTS& a, const LTS& b, const StateRelation& rel) {
  for (const auto& [s, t] : rel.pairs)
    if (s < 0 || s >= static_cast<int>(a.states.size()) || t < 0 ||
        t >= static_cast<int>(b.states.size()))
      throw ValidationError("relation references unknown states");
}

// Forward clause at (s, t): every s -a-> s' in `a` has t -a-> t' in `b`
// with (s', t') in rel. The backward clause is the same call with the
// systems swapped and the relation inverted.
bool clause_holds(const LTS& a, const LTS& b, const StateRelation& rel, int s, int t,
                  BisimWitness* witness, bool forward_report) {
  for (const auto& [lab, succ] : a.successors(s)) {
    bool matched = false;
    for (const auto& [lab2, succ2] : b.successors(t)) {
      if (lab == lab2 && rel.contains(succ, succ2)) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      if (witness)
        *witness = {forward_report ? s : t, forward_report ? t : s, lab, succ, forward_report};
      return false;
    }
  }
  return true;
}

bool pair_ok(const LTS& a, const LTS& b, const StateRelation& rel, const StateRelation& rel_inv,
             int s, int t, BisimWitness* witness) {
  return clause_holds(a, b, rel, s, t, witness, true) &&
         clause_holds(b, a, rel_inv, t, s, witness, false);
}

}  // namespace

BisimCheck is_bisimulation(const LTS& a, const LTS& b, const StateRelation& rel) {
  check_relation_bounds(a, b, rel);
  const StateRelation rel_inv = rel.inverse();
  BisimCheck out;
  BisimWitness w;
  for (const auto& [s, t] : rel.pairs) {
    if (!pair_ok(a, b, rel, rel_inv, s, t, &w)) {
      out.ok = false;
      out.witness = w;
      return out;
    }
  }
  out.ok = true;
  return out;
}

StateRelation greatest_bisimulation(const LTS& a, const LTS& b) {
  StateRelation rel;
  for (int s = 0; s < static_cast<int>(a.states.size()); ++s)
    for (int t = 0; t < static_cast<int>(b.states.size()); ++t) rel.pairs.insert({s, t});
  // Pair-deletion refinement: drop pairs violating either clause until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    const StateRelation rel_inv = rel.inverse();
    for (auto it = rel.pairs.begin(); it != rel.pairs.end();) {
      const auto [s, t] = *it;
      if (!pair_ok(a, b, rel, rel_inv, s, t, nullptr)) {
        it = rel.pairs.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return rel;
}

HomCheck check_homomorphism(const std::vector<int>& f, const LTS& a, const LTS& b) {
  if (f.size() != a.states.size())
    throw ValidationError("homomorphism check: map must be total on source states");
  for (int img : f)
    if (img < 0 || img >= static_cast<int>(b.states.size()))
      throw ValidationError("homomorphism check: map hits unknown target state");
  for (int s = 0; s < static_cast<int>(a.states.size()); ++s) {
    std::set<std::pair<std::string, int>> image;
    for (const auto& [lab, succ] : a.successors(s))
      image.insert({lab, f[static_cast<std::size_t>(succ)]});
    const auto target = b.successors(f[static_cast<std::size_t>(s)]);
    if (image != target) {
      HomCheck out;
      out.ok = false;
      out.detail = "structure maps disagree at state '" + a.states[static_cast<std::size_t>(s)] +
                   "' (mapped to '" + b.states[static_cast<std::size_t>(f[static_cast<std::size_t>(s)])] + "')";
      return out;
    }
  }
  return {true, ""};
}

StateRelation span_image_bisimulation(const std::vector<int>& f, const std::vector<int>& g,
                                      const LTS& t, const LTS& s, const LTS& u) {
  if (!check_homomorphism(f, t, s).ok)
    throw std::invalid_argument("span image: left leg is not a homomorphism");
  if (!check_homomorphism(g, t, u).ok)
    throw std::invalid_argument("span image: right leg is not a homomorphism");
  StateRelation rel;
  for (std::size_t i = 0; i < t.states.size(); ++i) rel.pairs.insert({f[i], g[i]});
  return rel;
}

StateRelation kernel(const std::vector<int>& f, const LTS& a) {
  StateRelation rel;
  for (std::size_t s = 0; s < a.states.size(); ++s)
    for (std::size_t t = 0; t < a.states.size(); ++t)
      if (f[s] == f[t]) rel.pairs.insert({static_cast<int>(s), static_cast<int>(t)});
  return rel;
}

LTS quotient(const LTS& a, const StateRelation& equivalence, std::vector<int>* classes) {
  const int ns = static_cast<int>(a.states.size());
  std::vector<int> cls(static_cast<std::size_t>(ns), -1);
  int next = 0;
  for (int s = 0; s < ns; ++s) {
    if (cls[static_cast<std::size_t>(s)] >= 0) continue;
    cls[static_cast<std::size_t>(s)] = next;
    for (int t = s + 1; t < ns; ++t)
      if (equivalence.contains(s, t)) cls[static_cast<std::size_t>(t)] = next;
    ++next;
  }
  LTS q;
  for (int c = 0; c < next; ++c) q.states.push_back("[" + std::to_string(c) + "]");
  q.labels = a.labels;
  for (const auto& [src, lab, dst] : a.transitions)
    q.transitions.insert(
        {cls[static_cast<std::size_t>(src)], lab, cls[static_cast<std::size_t>(dst)]});
  if (classes) *classes = cls;
  return q;
}

}  // namespace equigame::coalg
