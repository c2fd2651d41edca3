#include "equigame/genmetric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "equigame/errors.hpp"

namespace equigame::metric {

std::string AxiomViolation::describe(const GenMetricSpace& space) const {
  auto name = [&](int i) { return i >= 0 ? space.points.at(static_cast<std::size_t>(i)) : "?"; };
  switch (kind) {
    case Kind::Shape:
      return "distance matrix shape does not match the point set";
    case Kind::SelfDistance:
      return "d(" + name(x) + ", " + name(x) + ") = " + std::to_string(lhs) + " (must be 0)";
    case Kind::Negative:
      return "d(" + name(x) + ", " + name(y) + ") = " + std::to_string(lhs) + " is negative";
    case Kind::Triangle:
      return "d(" + name(x) + ", " + name(z) + ") = " + std::to_string(lhs) + " exceeds d(" +
             name(x) + ", " + name(y) + ") + d(" + name(y) + ", " + name(z) + ") = " +
             std::to_string(rhs);
  }
  return "";
}

std::vector<AxiomViolation> validate(const GenMetricSpace& space, double tol) {
  std::vector<AxiomViolation> out;
  const int n = space.size();
  if (space.d.rows() != n || space.d.cols() != n) {
    out.push_back({AxiomViolation::Kind::Shape, -1, -1, -1, 0.0, 0.0});
    return out;
  }
  for (int x = 0; x < n; ++x)
    if (!(std::abs(space.d(x, x)) <= tol))
      out.push_back({AxiomViolation::Kind::SelfDistance, x, -1, -1, space.d(x, x), 0.0});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const double v = space.d(x, y);
      if (std::isnan(v) || v < -tol)
        out.push_back({AxiomViolation::Kind::Negative, x, y, -1, v, 0.0});
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const double lhs = space.d(x, z);
        const double rhs = space.d(x, y) + space.d(y, z);  // inf absorbs
        if (lhs > rhs + tol)
          out.push_back({AxiomViolation::Kind::Triangle, x, y, z, lhs, rhs});
      }
  return out;
}

Presheaf yoneda_embed(const GenMetricSpace& space, int x) {
  if (x < 0 || x >= space.size()) throw std::invalid_argument("yoneda_embed: point out of range");
  return Presheaf{space.d.col(x)};
}

double interval_distance(double u, double v) {
  if (u >= v) return 0.0;  // covers inf >= anything and inf - inf
  if (v == kInf) return kInf;
  return v - u;
}

double presheaf_distance(const GenMetricSpace& space, const Presheaf& phi, const Presheaf& psi) {
  const int n = space.size();
  if (phi.values.size() != n || psi.values.size() != n)
    throw std::invalid_argument("presheaf_distance: presheaves must be total on the space");
  double sup = 0.0;
  for (int y = 0; y < n; ++y) sup = std::max(sup, interval_distance(phi.values[y], psi.values[y]));
  return sup;
}

namespace {

// |a - b| with infinities compared for equality.
double deviation(double a, double b) {
  if (a == b) return 0.0;  // includes inf == inf
  if (std::isinf(a) || std::isinf(b)) return kInf;
  return std::abs(a - b);
}

}  // namespace

IsometryReport check_isometry(const GenMetricSpace& space, double tol) {
  if (!validate(space).empty())
    throw std::invalid_argument("check_isometry: space violates the metric axioms");
  IsometryReport rep;
  const int n = space.size();
  for (int x = 0; x < n; ++x) {
    const Presheaf ex = yoneda_embed(space, x);
    for (int y = 0; y < n; ++y) {
      const double direct = space.d(x, y);
      const double embedded = presheaf_distance(space, ex, yoneda_embed(space, y));
      const double dev = deviation(direct, embedded);
      if (dev > rep.max_deviation ||
          (rep.worst_x < 0 && dev == rep.max_deviation)) {
        rep.max_deviation = dev;
        rep.worst_x = x;
        rep.worst_y = y;
      }
    }
  }
  rep.isometric = rep.max_deviation <= tol;
  return rep;
}

bool weakly_isomorphic(const GenMetricSpace& space, int x, int y) {
  if (x < 0 || x >= space.size() || y < 0 || y >= space.size())
    throw std::invalid_argument("weakly_isomorphic: point out of range");
  return space.d(x, y) == 0.0 && space.d(y, x) == 0.0;
}

GenMetricSpace preorder_space(const std::vector<std::string>& elements,
                              const std::vector<std::pair<int, int>>& leq) {
  const int n = static_cast<int>(elements.size());
  Eigen::MatrixXd rel = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [p, q] : leq) {
    if (p < 0 || p >= n || q < 0 || q >= n)
      throw std::invalid_argument("preorder_space: relation references unknown element");
    rel(p, q) = 1.0;
  }
  for (int p = 0; p < n; ++p)
    if (rel(p, p) == 0.0) throw std::invalid_argument("preorder_space: relation is not reflexive");
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        if (rel(p, q) > 0.0 && rel(q, r) > 0.0 && rel(p, r) == 0.0)
          throw std::invalid_argument("preorder_space: relation is not transitive");
  GenMetricSpace space;
  space.points = elements;
  space.d = Eigen::MatrixXd::Constant(n, n, kInf);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (rel(p, q) > 0.0) space.d(p, q) = 0.0;
  return space;
}

GenMetricSpace string_prefix_space(const std::vector<std::string>& strings) {
  const int n = static_cast<int>(strings.size());
  GenMetricSpace space;
  space.points = strings;
  space.d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string& u = strings[static_cast<std::size_t>(i)];
      const std::string& v = strings[static_cast<std::size_t>(j)];
      std::size_t lcp = 0;
      while (lcp < u.size() && lcp < v.size() && u[lcp] == v[lcp]) ++lcp;
      space.d(i, j) = (lcp == u.size()) ? 0.0 : std::ldexp(1.0, -static_cast<int>(lcp));
    }
  return space;
}

GenMetricSpace nonneg_real_space(const std::vector<double>& values) {
  const int n = static_cast<int>(values.size());
  GenMetricSpace space;
  space.points.reserve(static_cast<std::size_t>(n));
  for (double v : values) {
    if (v < 0.0) throw std::invalid_argument("nonneg_real_space: values must be >= 0");
    space.points.push_back(std::to_string(v));
  }
  space.d.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      space.d(i, j) = interval_distance(values[static_cast<std::size_t>(i)],
                                        values[static_cast<std::size_t>(j)]);
  return space;
}

GenMetricSpace hausdorff_powerset_space(const GenMetricSpace& base,
                                        const std::vector<std::vector<int>>& subsets) {
  const int n = static_cast<int>(subsets.size());
  GenMetricSpace space;
  space.points.reserve(static_cast<std::size_t>(n));
  for (const auto& subset : subsets) {
    std::string name = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] < 0 || subset[i] >= base.size())
        throw std::invalid_argument("hausdorff_powerset_space: subset leaves the base space");
      if (i) name += ",";
      name += base.points[static_cast<std::size_t>(subset[i])];
    }
    space.points.push_back(name + "}");
  }
  space.d.resize(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double sup = 0.0;  // sup over the empty set is 0
      for (int v : subsets[static_cast<std::size_t>(a)]) {
        double inf = kInf;  // inf over the empty set is infinity
        for (int w : subsets[static_cast<std::size_t>(b)])
          inf = std::min(inf, base.d(v, w));
        sup = std::max(sup, inf);
      }
      space.d(a, b) = sup;
    }
  return space;
}

GenMetricSpace min_plus_closure(GenMetricSpace space) {
  const int n = space.size();
  for (int i = 0; i < n; ++i) space.d(i, i) = 0.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        space.d(i, j) = std::min(space.d(i, j), space.d(i, k) + space.d(k, j));
  return space;
}

}  // namespace equigame::metric
