#include "equigame/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "equigame/errors.hpp"

namespace equigame::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

Eigen::VectorXd read_vector(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) fail(where + "[" + std::to_string(i) + "]", "expected a number");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

Eigen::MatrixXd read_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of rows");
  const std::size_t cols = j[0].size();
  Eigen::MatrixXd m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      fail(where + "[" + std::to_string(r) + "]", "ragged or non-array row");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = j[r][c].get<double>();
  }
  return m;
}

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

}  // namespace

vi::VIProblem read_affine_vi(const json& j) {
  const std::string where = "vi problem";
  const auto n = field(j, "n", where).get<Eigen::Index>();
  const Eigen::MatrixXd m = read_matrix(field(j, "M", where), where + ".M");
  const Eigen::VectorXd q = read_vector(field(j, "q", where), where + ".q");
  if (m.rows() != n || m.cols() != n) fail(where + ".M", "must be n x n");
  if (q.size() != n) fail(where + ".q", "must have n entries");

  const json& set = field(j, "set", where);
  const std::string kind = field(set, "kind", where + ".set").get<std::string>();
  vi::VIProblem p;
  p.n = n;
  if (kind == "orthant") {
    p.feasible = vi::FeasibleSet::nonnegative_orthant(n);
  } else if (kind == "box") {
    const Eigen::VectorXd lo = read_vector(field(set, "lo", where + ".set"), where + ".set.lo");
    const Eigen::VectorXd hi = read_vector(field(set, "hi", where + ".set"), where + ".set.hi");
    if (lo.size() != n || hi.size() != n) fail(where + ".set", "bounds must have n entries");
    p.feasible = vi::FeasibleSet::box(lo, hi);
  } else {
    fail(where + ".set.kind", "expected \"orthant\" or \"box\", got \"" + kind + "\"");
  }
  p.F = [m, q](const Eigen::VectorXd& x) -> Eigen::VectorXd { return m * x + q; };
  p.jacobian = [m](const Eigen::VectorXd&) { return m; };
  return p;
}

json write_affine_vi(const Eigen::MatrixXd& m, const Eigen::VectorXd& q,
                     const vi::FeasibleSet& set) {
  json j;
  j["n"] = m.rows();
  j["M"] = matrix_json(m);
  j["q"] = vector_json(q);
  if (set.kind() == vi::FeasibleSet::Kind::Orthant) {
    j["set"] = {{"kind", "orthant"}};
  } else if (set.kind() == vi::FeasibleSet::Kind::Box) {
    j["set"] = {{"kind", "box"}, {"lo", vector_json(set.lower())}, {"hi", vector_json(set.upper())}};
  } else {
    throw std::invalid_argument("write_affine_vi: only orthant and box sets are serializable");
  }
  return j;
}

json write_solution(const vi::Solution& sol) {
  json j;
  j["point"] = vector_json(sol.point);
  j["residual"] = sol.residual;
  j["iterations"] = sol.iterations;
  j["converged"] = sol.converged;
  return j;
}

void write_trace_csv(std::ostream& os, const std::vector<double>& residuals) {
  os << "k,residual\n";
  char buf[32];
  for (std::size_t k = 0; k < residuals.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", residuals[k]);
    os << k << ',' << buf << '\n';
  }
}

namespace {

// "Q[1,1,1]" -> flat variable index (1-based indices in files).
int parse_var(const std::string& name, const netecon::Model& model, const std::string& where) {
  netecon::Block block;
  std::size_t pos;
  if (name.rfind("Q[", 0) == 0) {
    block = netecon::Block::Q;
    pos = 2;
  } else if (name.rfind("q[", 0) == 0) {
    block = netecon::Block::Quality;
    pos = 2;
  } else if (name.rfind("pi[", 0) == 0) {
    block = netecon::Block::Price;
    pos = 3;
  } else {
    fail(where, "unknown variable \"" + name + "\" (expected Q[i,j,k], q[i,j,k] or pi[i,j,k])");
  }
  int idx[3];
  for (int part = 0; part < 3; ++part) {
    std::size_t end = name.find(part == 2 ? ']' : ',', pos);
    if (end == std::string::npos) fail(where, "malformed variable \"" + name + "\"");
    idx[part] = std::stoi(name.substr(pos, end - pos));
    pos = end + 1;
  }
  const int i = idx[0] - 1, j = idx[1] - 1, k = idx[2] - 1;
  if (i < 0 || i >= model.m || j < 0 || j >= model.n || k < 0 || k >= model.o)
    fail(where, "variable \"" + name + "\" out of range for the declared tiers");
  return model.var_index(block, i, j, k);
}

netecon::Polynomial read_polynomial(const json& j, const netecon::Model& model,
                                    const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of terms");
  netecon::Polynomial poly;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string term_where = where + "[" + std::to_string(t) + "]";
    const json& term = j[t];
    if (!term.is_object()) fail(term_where, "expected a term object");
    const double coef = field(term, "coef", term_where).get<double>();
    if (term.contains("var")) {
      const int var = parse_var(term["var"].get<std::string>(), model, term_where);
      const int pow = term.value("pow", 1);
      if (pow < 0) fail(term_where, "negative power");
      poly.add(coef, var, pow);
    } else {
      poly.add(coef);
    }
  }
  return poly;
}

std::string var_name(const netecon::Model& model, int var) {
  const int l = model.links();
  const char* blocks[] = {"Q", "q", "pi"};
  const int b = var / l, rest = var % l;
  const int i = rest / (model.n * model.o);
  const int j = (rest / model.o) % model.n;
  const int k = rest % model.o;
  return std::string(blocks[b]) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
         std::to_string(k + 1) + "]";
}

json polynomial_json(const netecon::Polynomial& poly, const netecon::Model& model) {
  json terms = json::array();
  for (const auto& t : poly.terms()) {
    json term;
    term["coef"] = t.coef;
    if (t.var >= 0) {
      term["var"] = var_name(model, t.var);
      term["pow"] = t.pow;
    }
    terms.push_back(term);
  }
  return terms;
}

}  // namespace

netecon::Model read_economy(const json& j) {
  const std::string where = "economy model";
  netecon::Model model;
  model.m = field(j, "m", where).get<int>();
  model.n = field(j, "n", where).get<int>();
  model.o = field(j, "o", where).get<int>();
  if (model.m < 1 || model.n < 1 || model.o < 1) fail(where, "tier counts must be positive");
  const json& f = field(j, "f", where);
  const json& rho = field(j, "rho", where);
  const json& c = field(j, "c", where);
  const json& oc = field(j, "oc", where);
  if (static_cast<int>(f.size()) != model.m) fail(where + ".f", "expected one entry per provider");
  const auto links = static_cast<std::size_t>(model.links());
  if (rho.size() != links || c.size() != links || oc.size() != links)
    fail(where, "rho/c/oc must each have m*n*o entries in (i,j,k) order");
  for (int i = 0; i < model.m; ++i)
    model.f.emplace_back(read_polynomial(f[static_cast<std::size_t>(i)], model,
                                         where + ".f[" + std::to_string(i) + "]"));
  for (std::size_t idx = 0; idx < links; ++idx) {
    const std::string suffix = "[" + std::to_string(idx) + "]";
    model.rho.emplace_back(read_polynomial(rho[idx], model, where + ".rho" + suffix));
    model.c.emplace_back(read_polynomial(c[idx], model, where + ".c" + suffix));
    model.oc.emplace_back(read_polynomial(oc[idx], model, where + ".oc" + suffix));
  }
  model.validate();
  return model;
}

json write_economy(const netecon::Model& model) {
  if (!model.analytic())
    throw std::invalid_argument("write_economy: only polynomial models are serializable");
  json j;
  j["m"] = model.m;
  j["n"] = model.n;
  j["o"] = model.o;
  for (const auto& fn : model.f) j["f"].push_back(polynomial_json(fn.poly(), model));
  for (const auto& fn : model.rho) j["rho"].push_back(polynomial_json(fn.poly(), model));
  for (const auto& fn : model.c) j["c"].push_back(polynomial_json(fn.poly(), model));
  for (const auto& fn : model.oc) j["oc"].push_back(polynomial_json(fn.poly(), model));
  return j;
}

coalg::LTS read_lts(const json& j) {
  const std::string where = "lts";
  coalg::LTS lts;
  for (const auto& s : field(j, "states", where)) lts.states.push_back(s.get<std::string>());
  for (const auto& a : field(j, "labels", where)) lts.labels.push_back(a.get<std::string>());
  const json& trans = field(j, "trans", where);
  for (std::size_t t = 0; t < trans.size(); ++t) {
    const std::string tw = where + ".trans[" + std::to_string(t) + "]";
    if (!trans[t].is_array() || trans[t].size() != 3) fail(tw, "expected [state, label, state]");
    const int s = lts.state_index(trans[t][0].get<std::string>());
    const int a = lts.label_index(trans[t][1].get<std::string>());
    const int d = lts.state_index(trans[t][2].get<std::string>());
    if (s < 0 || d < 0) fail(tw, "transition references an undeclared state");
    if (a < 0) fail(tw, "transition references an undeclared label");
    lts.transitions.insert({s, a, d});
  }
  return lts;
}

json write_lts(const coalg::LTS& lts) {
  json j;
  j["states"] = lts.states;
  j["labels"] = lts.labels;
  j["trans"] = json::array();
  for (const auto& [s, a, d] : lts.transitions)
    j["trans"].push_back({lts.states[static_cast<std::size_t>(s)],
                          lts.labels[static_cast<std::size_t>(a)],
                          lts.states[static_cast<std::size_t>(d)]});
  return j;
}

coalg::StateRelation read_relation(const json& j, const coalg::LTS& a, const coalg::LTS& b) {
  const std::string where = "relation";
  coalg::StateRelation rel;
  const json& pairs = field(j, "pairs", where);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string pw = where + ".pairs[" + std::to_string(i) + "]";
    if (!pairs[i].is_array() || pairs[i].size() != 2) fail(pw, "expected [state, state]");
    const int s = a.state_index(pairs[i][0].get<std::string>());
    const int t = b.state_index(pairs[i][1].get<std::string>());
    if (s < 0 || t < 0) fail(pw, "pair references an unknown state");
    rel.pairs.insert({s, t});
  }
  return rel;
}

json write_relation(const coalg::StateRelation& rel, const coalg::LTS& a, const coalg::LTS& b) {
  json pairs = json::array();
  for (const auto& [s, t] : rel.pairs)
    pairs.push_back(
        {a.states[static_cast<std::size_t>(s)], b.states[static_cast<std::size_t>(t)]});
  return {{"pairs", pairs}};
}

json write_bisim_check(const coalg::BisimCheck& check, const coalg::LTS& a, const coalg::LTS& b) {
  json j;
  j["bisimulation"] = check.ok;
  if (check.witness) {
    const auto& w = *check.witness;
    const coalg::LTS& moving = w.forward ? a : b;
    const coalg::LTS& other = w.forward ? b : a;
    j["counterexample"] = {{"state", moving.states[static_cast<std::size_t>(w.s)]},
                           {"partner", other.states[static_cast<std::size_t>(w.t)]},
                           {"label", w.label},
                           {"successor", moving.states[static_cast<std::size_t>(w.successor)]},
                           {"side", w.forward ? "left" : "right"}};
  }
  return j;
}

coalg::MDP read_mdp(const json& j) {
  const std::string where = "mdp";
  coalg::MDP mdp;
  for (const auto& s : field(j, "states", where)) mdp.states.push_back(s.get<std::string>());
  for (const auto& a : field(j, "actions", where)) mdp.actions.push_back(a.get<std::string>());
  auto state_of = [&](const json& v, const std::string& w) {
    const auto it = std::find(mdp.states.begin(), mdp.states.end(), v.get<std::string>());
    if (it == mdp.states.end()) fail(w, "unknown state \"" + v.get<std::string>() + "\"");
    return static_cast<int>(it - mdp.states.begin());
  };
  auto action_of = [&](const json& v, const std::string& w) {
    const auto it = std::find(mdp.actions.begin(), mdp.actions.end(), v.get<std::string>());
    if (it == mdp.actions.end()) fail(w, "unknown action \"" + v.get<std::string>() + "\"");
    return static_cast<int>(it - mdp.actions.begin());
  };
  const json& psi = field(j, "admissible", where);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const std::string pw = where + ".admissible[" + std::to_string(i) + "]";
    mdp.admissible.insert({state_of(psi[i][0], pw), action_of(psi[i][1], pw)});
  }
  const json& p = field(j, "P", where);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::string pw = where + ".P[" + std::to_string(i) + "]";
    if (!p[i].is_array() || p[i].size() != 4) fail(pw, "expected [s, a, s', prob]");
    mdp.prob[{state_of(p[i][0], pw), action_of(p[i][1], pw), state_of(p[i][2], pw)}] =
        p[i][3].get<double>();
  }
  const json& r = field(j, "R", where);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::string rw = where + ".R[" + std::to_string(i) + "]";
    if (!r[i].is_array() || r[i].size() != 3) fail(rw, "expected [s, a, reward]");
    mdp.reward[{state_of(r[i][0], rw), action_of(r[i][1], rw)}] = r[i][2].get<double>();
  }
  try {
    mdp.validate();
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
  return mdp;
}

diversity::MooreEnv parse_env_spec(const std::string& spec) {
  const std::string prefix1 = "register:n=", prefix2 = "register:";
  std::string digits;
  if (spec.rfind(prefix1, 0) == 0)
    digits = spec.substr(prefix1.size());
  else if (spec.rfind(prefix2, 0) == 0)
    digits = spec.substr(prefix2.size());
  else
    throw ValidationError("env spec: unknown builder \"" + spec +
                          "\" (expected register:<n> or register:n=<n>)");
  try {
    return diversity::make_register_env(std::stoi(digits));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("env spec: ") + e.what());
  }
}

diversity::MooreEnv read_env(const json& j) {
  if (j.is_string()) return parse_env_spec(j.get<std::string>());
  const std::string where = "environment";
  diversity::MooreEnv env;
  env.num_states = field(j, "states", where).get<int>();
  for (const auto& a : field(j, "actions", where)) env.actions.push_back(a.get<std::string>());
  for (const auto& p : field(j, "predicates", where))
    env.predicates.push_back(p.get<std::string>());
  env.initial_state = j.value("q0", 0);
  for (const auto& row : field(j, "delta", where))
    env.delta.push_back(row.get<std::vector<int>>());
  for (const auto& row : field(j, "gamma", where)) {
    std::vector<char> g;
    for (const auto& v : row) g.push_back(v.get<int>() ? 1 : 0);
    env.gamma.push_back(std::move(g));
  }
  try {
    env.validate();
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
  return env;
}

json write_diversity_automaton(const diversity::DiversityAutomaton& da,
                               const diversity::MooreEnv& env) {
  json j;
  j["diversity"] = da.diversity();
  j["classes"] = json::array();
  for (std::size_t c = 0; c < da.class_values.size(); ++c) {
    json cls;
    cls["test"] = da.representatives[c].describe(env);
    json values = json::array();
    for (char v : da.class_values[c]) values.push_back(static_cast<int>(v));
    cls["values"] = values;
    j["classes"].push_back(cls);
  }
  j["edges"] = json::array();
  for (std::size_t c = 0; c < da.edge.size(); ++c)
    for (std::size_t b = 0; b < da.edge[c].size(); ++b)
      j["edges"].push_back({da.edge[c][b], env.actions[b], static_cast<int>(c)});
  json preds;
  for (std::size_t p = 0; p < da.predicate_class.size(); ++p)
    preds[env.predicates[p]] = da.predicate_class[p];
  j["predicate_classes"] = preds;
  return j;
}

metric::GenMetricSpace read_space(const json& j) {
  const std::string where = "metric space";
  metric::GenMetricSpace space;
  for (const auto& p : field(j, "points", where)) space.points.push_back(p.get<std::string>());
  const json& d = field(j, "d", where);
  const int n = space.size();
  if (static_cast<int>(d.size()) != n) fail(where + ".d", "expected one row per point");
  space.d.resize(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = d[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != n)
      fail(where + ".d[" + std::to_string(r) + "]", "expected one entry per point");
    for (int c = 0; c < n; ++c) {
      const json& cell = row[static_cast<std::size_t>(c)];
      if (cell.is_string()) {
        if (cell.get<std::string>() != "INF")
          fail(where + ".d", "string entries must be the sentinel \"INF\"");
        space.d(r, c) = metric::kInf;
      } else if (cell.is_number()) {
        space.d(r, c) = cell.get<double>();
      } else {
        fail(where + ".d", "entries must be numbers or \"INF\"");
      }
    }
  }
  return space;
}

json write_space(const metric::GenMetricSpace& space) {
  json j;
  j["points"] = space.points;
  json rows = json::array();
  for (int r = 0; r < space.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < space.size(); ++c) {
      const double v = space.d(r, c);
      if (std::isinf(v))
        row.push_back("INF");
      else
        row.push_back(v);
    }
    rows.push_back(row);
  }
  j["d"] = rows;
  return j;
}

causal::Separoid read_separoid(const json& j) {
  const std::string where = "separoid";
  causal::Separoid sep;
  for (const auto& e : field(j, "elements", where)) sep.names.push_back(e.get<std::string>());
  const int n = sep.size();
  auto elem_of = [&](const json& v, const std::string& w) {
    const auto it = std::find(sep.names.begin(), sep.names.end(), v.get<std::string>());
    if (it == sep.names.end()) fail(w, "unknown element \"" + v.get<std::string>() + "\"");
    return static_cast<int>(it - sep.names.begin());
  };
  sep.leq.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int x = 0; x < n; ++x)
    sep.leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = 1;
  const json& leq = field(j, "leq", where);
  for (std::size_t i = 0; i < leq.size(); ++i) {
    const std::string pw = where + ".leq[" + std::to_string(i) + "]";
    if (!leq[i].is_array() || leq[i].size() != 2) fail(pw, "expected [lower, upper]");
    sep.leq[static_cast<std::size_t>(elem_of(leq[i][0], pw))]
           [static_cast<std::size_t>(elem_of(leq[i][1], pw))] = 1;
  }
  const json& ci = field(j, "ci", where);
  for (std::size_t i = 0; i < ci.size(); ++i) {
    const std::string tw = where + ".ci[" + std::to_string(i) + "]";
    if (!ci[i].is_array() || ci[i].size() != 3) fail(tw, "expected [x, y, z]");
    sep.ci_triples.push_back({elem_of(ci[i][0], tw), elem_of(ci[i][1], tw), elem_of(ci[i][2], tw)});
  }
  return sep;
}

std::pair<std::vector<std::string>, std::vector<double>> read_joint(const json& j) {
  const std::string where = "joint distribution";
  std::vector<std::string> vars;
  for (const auto& v : field(j, "vars", where)) vars.push_back(v.get<std::string>());
  std::vector<double> p;
  for (const auto& v : field(j, "p", where)) {
    if (!v.is_number()) fail(where + ".p", "expected numbers");
    p.push_back(v.get<double>());
  }
  if (p.size() != (std::size_t{1} << vars.size()))
    fail(where + ".p", "expected 2^vars entries (bit i of the index is vars[i])");
  return {std::move(vars), std::move(p)};
}

causal::GenotypeDataset read_genotypes_csv(std::istream& is, const std::string& filename) {
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
      while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
      std::size_t start = 0;
      while (start < cell.size() && cell[start] == ' ') ++start;
      cells.push_back(cell.substr(start));
    }
    return cells;
  };
  std::string line;
  if (!std::getline(is, line)) throw ValidationError(filename + ": empty file");
  const std::vector<std::string> header = split(line);
  causal::GenotypeDataset data;

  const bool long_form = header.size() == 2 && (header[0] == "sample" || header[0] == "Sample") &&
                         (header[1] == "event" || header[1] == "Event" || header[1] == "gene" ||
                          header[1] == "Gene");
  if (long_form) {
    std::vector<std::string> samples;
    std::vector<std::pair<int, int>> cells;
    long row = 1;
    while (std::getline(is, line)) {
      ++row;
      if (line.empty() || line == "\r") continue;
      const auto fields = split(line);
      if (fields.size() != 2)
        throw ValidationError(filename + ":" + std::to_string(row) +
                              ": expected two columns (sample,event)");
      auto intern = [](std::vector<std::string>& pool, const std::string& v) {
        const auto it = std::find(pool.begin(), pool.end(), v);
        if (it != pool.end()) return static_cast<int>(it - pool.begin());
        pool.push_back(v);
        return static_cast<int>(pool.size() - 1);
      };
      cells.emplace_back(intern(samples, fields[0]), intern(data.events, fields[1]));
    }
    data.genotypes.assign(samples.size(), std::vector<char>(data.events.size(), 0));
    for (const auto& [s, e] : cells)
      data.genotypes[static_cast<std::size_t>(s)][static_cast<std::size_t>(e)] = 1;
    return data;
  }

  data.events = header;
  long row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line);
    if (cells.size() != header.size())
      throw ValidationError(filename + ":" + std::to_string(row) + ": expected " +
                            std::to_string(header.size()) + " cells, got " +
                            std::to_string(cells.size()));
    std::vector<char> g;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c] != "0" && cells[c] != "1")
        throw ValidationError(filename + ":" + std::to_string(row) + ": column \"" + header[c] +
                              "\": cell \"" + cells[c] + "\" is not 0 or 1");
      g.push_back(cells[c] == "1" ? 1 : 0);
    }
    data.genotypes.push_back(std::move(g));
  }
  if (data.genotypes.empty()) throw ValidationError(filename + ": no samples");
  return data;
}

json write_poset(const causal::DiscoveredPoset& poset) {
  json j;
  j["events"] = poset.events;
  json leq = json::array();
  const int n = static_cast<int>(poset.events.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && poset.less_eq(a, b))
        leq.push_back({poset.events[static_cast<std::size_t>(a)],
                       poset.events[static_cast<std::size_t>(b)]});
  j["leq"] = leq;
  json ties = json::array();
  for (const auto& cls : poset.tie_classes) {
    json names = json::array();
    for (int e : cls) names.push_back(poset.events[static_cast<std::size_t>(e)]);
    ties.push_back(names);
  }
  j["tie_classes"] = ties;
  return j;
}

std::string write_poset_dot(const causal::DiscoveredPoset& poset) {
  std::string dot = "digraph poset {\n  rankdir=BT;\n";
  for (const auto& cls : poset.tie_classes) {
    std::string label;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) label += "=";
      label += poset.events[static_cast<std::size_t>(cls[i])];
    }
    dot += "  \"" + poset.events[static_cast<std::size_t>(cls[0])] + "\" [label=\"" + label +
           "\"];\n";
  }
  for (const auto& [from, to] : transitive_reduction(poset))
    dot += "  \"" + poset.events[static_cast<std::size_t>(from)] + "\" -> \"" +
           poset.events[static_cast<std::size_t>(to)] + "\";\n";
  return dot + "}\n";
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return j;
}

void store_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError(path + ": cannot open for writing");
  out << text;
}

}  // namespace equigame::io
