#include "equigame/separoid.hpp"

#include <cmath>
#include <stdexcept>

#include "equigame/errors.hpp"

namespace equigame::causal {

bool Separoid::ci(int x, int y, int z) const {
  const int n = size();
  return ci_dense_.at(static_cast<std::size_t>((x * n + y) * n + z)) != 0;
}

void Separoid::index_ci() {
  const int n = size();
  ci_dense_.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (const auto& [x, y, z] : ci_triples) {
    if (x < 0 || x >= n || y < 0 || y >= n || z < 0 || z >= n)
      throw ValidationError("separoid: independence triple references unknown element");
    ci_dense_[static_cast<std::size_t>((x * n + y) * n + z)] = 1;
  }
}

void Separoid::validate_structure() {
  const int n = size();
  if (static_cast<int>(leq.size()) != n)
    throw ValidationError("separoid: leq must have one row per element");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n) throw ValidationError("separoid: leq row is ragged");
  for (int x = 0; x < n; ++x)
    if (!leq[x][x]) throw ValidationError("separoid: leq is not reflexive");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (leq[x][y] && leq[y][z] && !leq[x][z])
          throw ValidationError("separoid: leq is not transitive");

  auto bound = [&](int x, int y, bool upper) -> int {
    // Least upper (or greatest lower) bound of {x, y}, or -1.
    int best = -1;
    for (int u = 0; u < n; ++u) {
      const bool bounds = upper ? (leq[x][u] && leq[y][u]) : (leq[u][x] && leq[u][y]);
      if (!bounds) continue;
      if (best < 0 || (upper ? leq[u][best] : leq[best][u])) best = u;
    }
    if (best < 0) return -1;
    for (int u = 0; u < n; ++u) {
      const bool bounds = upper ? (leq[x][u] && leq[y][u]) : (leq[u][x] && leq[u][y]);
      if (bounds && !(upper ? leq[best][u] : leq[u][best])) return -1;  // not comparable to all
    }
    return best;
  };

  if (join.empty()) {
    join.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        join[x][y] = bound(x, y, true);
        if (join[x][y] < 0)
          throw ValidationError("separoid: no least upper bound for (" + names.at(x) + ", " +
                                names.at(y) + "); not a join semilattice");
      }
  } else {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int j = join.at(x).at(y);
        if (j < 0 || j >= n || j != bound(x, y, true))
          throw ValidationError("separoid: join(" + names.at(x) + ", " + names.at(y) +
                                ") is not the least upper bound");
      }
  }
  if (meet) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int m = meet->at(x).at(y);
        if (m < 0 || m >= n || m != bound(x, y, false))
          throw ValidationError("separoid: meet(" + names.at(x) + ", " + names.at(y) +
                                ") is not the greatest lower bound");
      }
  }
  index_ci();
}

std::string SeparoidViolation::describe(const Separoid& s) const {
  std::string msg = axiom + " fails at (";
  for (int i = 0; i < 4; ++i) {
    if (witness[static_cast<std::size_t>(i)] < 0) break;
    if (i) msg += ", ";
    msg += s.names.at(static_cast<std::size_t>(witness[static_cast<std::size_t>(i)]));
  }
  return msg + ")";
}

std::vector<SeparoidViolation> check_separoid(Separoid s, bool strong) {
  s.validate_structure();
  const int n = s.size();
  std::vector<SeparoidViolation> out;

  // P1: x _||_ y | x
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!s.ci(x, y, x)) out.push_back({"P1", {x, y, x, -1}});

  for (const auto& [x, y, z] : s.ci_triples) {
    // P2: symmetry in the first two slots
    if (!s.ci(y, x, z)) out.push_back({"P2", {x, y, z, -1}});
    for (int w = 0; w < n; ++w) {
      if (!s.leq[static_cast<std::size_t>(w)][static_cast<std::size_t>(y)]) continue;
      // P3: x _||_ w | z for w <= y
      if (!s.ci(x, w, z)) out.push_back({"P3", {x, y, z, w}});
      // P4: x _||_ y | z v w for w <= y
      if (!s.ci(x, y, s.join[static_cast<std::size_t>(z)][static_cast<std::size_t>(w)]))
        out.push_back({"P4", {x, y, z, w}});
    }
  }

  // P5: x _||_ y | z and x _||_ w | (y v z)  =>  x _||_ (y v w) | z
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!s.ci(x, y, z)) continue;
        const int yz = s.join[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)];
        for (int w = 0; w < n; ++w)
          if (s.ci(x, w, yz) &&
              !s.ci(x, s.join[static_cast<std::size_t>(y)][static_cast<std::size_t>(w)], z))
            out.push_back({"P5", {x, y, z, w}});
      }

  // P6 (strong separoids): z <= y, w <= y, x _||_ y | z, x _||_ y | w
  //   =>  x _||_ y | z ^ w
  if (strong) {
    if (!s.meet)
      throw ValidationError("separoid: strong check requested but no meet is available");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (!s.leq[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)] || !s.ci(x, y, z))
            continue;
          for (int w = 0; w < n; ++w) {
            if (!s.leq[static_cast<std::size_t>(w)][static_cast<std::size_t>(y)] ||
                !s.ci(x, y, w))
              continue;
            if (!s.ci(x, y, (*s.meet)[static_cast<std::size_t>(z)][static_cast<std::size_t>(w)]))
              out.push_back({"P6", {x, y, z, w}});
          }
        }
  }
  return out;
}

Separoid separoid_from_joint(const std::vector<std::string>& vars,
                             const std::vector<double>& joint, double tol) {
  const int v = static_cast<int>(vars.size());
  if (v < 1 || v > 5)
    throw std::invalid_argument("separoid_from_joint: between 1 and 5 variables");
  const int assignments = 1 << v;
  if (static_cast<int>(joint.size()) != assignments)
    throw std::invalid_argument("separoid_from_joint: table must have 2^v entries");
  double total = 0.0;
  for (double p : joint) {
    if (p < 0.0) throw std::invalid_argument("separoid_from_joint: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > tol)
    throw std::invalid_argument("separoid_from_joint: table sums to " + std::to_string(total));

  const int n = 1 << v;  // subsets of variables
  // Marginal of subset S at masked assignment a: sum of joint rows agreeing
  // with a on S.
  std::vector<std::vector<double>> marginal(static_cast<std::size_t>(n),
                                            std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int s = 0; s < n; ++s)
    for (int a = 0; a < assignments; ++a)
      marginal[static_cast<std::size_t>(s)][static_cast<std::size_t>(a & s)] +=
          joint[static_cast<std::size_t>(a)];

  Separoid sep;
  for (int s = 0; s < n; ++s) {
    std::string name = "{";
    bool first = true;
    for (int b = 0; b < v; ++b)
      if (s & (1 << b)) {
        if (!first) name += ",";
        name += vars[static_cast<std::size_t>(b)];
        first = false;
      }
    sep.names.push_back(name + "}");
  }
  sep.leq.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  sep.join.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto meet = std::vector<std::vector<int>>(static_cast<std::size_t>(n),
                                            std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      sep.leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a & b) == a ? 1 : 0;
      sep.join[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a | b;
      meet[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a & b;
    }
  sep.meet = std::move(meet);

  // (X, Y, Z) holds iff p(xyz) p(z) = p(xz) p(yz) for every assignment of
  // the union. Overlapping subsets are fine; shared coordinates agree by
  // construction of the masked assignment.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int u = x | y | z;
        bool holds = true;
        // Iterate assignments supported on u.
        for (int a = u;; a = (a - 1) & u) {
          const double lhs = marginal[static_cast<std::size_t>(u)][static_cast<std::size_t>(a)] *
                             marginal[static_cast<std::size_t>(z)][static_cast<std::size_t>(a & z)];
          const double rhs =
              marginal[static_cast<std::size_t>(x | z)][static_cast<std::size_t>(a & (x | z))] *
              marginal[static_cast<std::size_t>(y | z)][static_cast<std::size_t>(a & (y | z))];
          if (std::abs(lhs - rhs) > tol) {
            holds = false;
            break;
          }
          if (a == 0) break;
        }
        if (holds) sep.ci_triples.push_back({x, y, z});
      }
  sep.index_ci();
  return sep;
}

}  // namespace equigame::causal
