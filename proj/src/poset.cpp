#include "equigame/poset.hpp"

#include <stdexcept>

#include "equigame/errors.hpp"

namespace equigame::causal {

void GenotypeDataset::validate() const {
  for (std::size_t row = 0; row < genotypes.size(); ++row)
    if (genotypes[row].size() != events.size())
      throw ValidationError("genotype dataset: sample " + std::to_string(row) +
                            " has the wrong number of event columns");
}

DiscoveredPoset discover_poset(const GenotypeDataset& data, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0))
    throw std::invalid_argument("discover_poset: epsilon must lie in [0, 1)");
  data.validate();
  if (data.genotypes.empty()) throw std::invalid_argument("discover_poset: empty dataset");
  const int n = data.num_events();

  DiscoveredPoset out;
  out.events = data.events;
  out.leq.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));

  // f is an ancestor of e when e (nearly) never occurs without f.
  for (int e = 0; e < n; ++e) {
    long support = 0;
    std::vector<long> missing(static_cast<std::size_t>(n), 0);
    for (const auto& g : data.genotypes) {
      if (!g[static_cast<std::size_t>(e)]) continue;
      ++support;
      for (int f = 0; f < n; ++f)
        if (!g[static_cast<std::size_t>(f)]) ++missing[static_cast<std::size_t>(f)];
    }
    for (int f = 0; f < n; ++f) {
      const bool ancestor =
          support == 0 || static_cast<double>(missing[static_cast<std::size_t>(f)]) <=
                              epsilon * static_cast<double>(support);
      if (ancestor) out.leq[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)] = 1;
    }
  }

  // Transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (out.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
            out.leq[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          out.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;

  // Mutually ancestral events form tie classes.
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (cls[static_cast<std::size_t>(i)] >= 0) continue;
    const int id = static_cast<int>(out.tie_classes.size());
    out.tie_classes.push_back({i});
    cls[static_cast<std::size_t>(i)] = id;
    for (int j = i + 1; j < n; ++j)
      if (out.less_eq(i, j) && out.less_eq(j, i)) {
        out.tie_classes[static_cast<std::size_t>(id)].push_back(j);
        cls[static_cast<std::size_t>(j)] = id;
      }
  }

  // The quotient by tie classes is antisymmetric by construction.
  for (const auto& a : out.tie_classes)
    for (const auto& b : out.tie_classes)
      if (a[0] != b[0] && out.less_eq(a[0], b[0]) && out.less_eq(b[0], a[0]))
        throw std::logic_error("discover_poset: tie-class quotient is not antisymmetric");

  return out;
}

std::vector<std::pair<int, int>> transitive_reduction(const DiscoveredPoset& poset) {
  std::vector<std::pair<int, int>> edges;
  auto strict = [&](int a, int b) { return poset.less_eq(a, b) && !poset.less_eq(b, a); };
  for (const auto& from : poset.tie_classes)
    for (const auto& to : poset.tie_classes) {
      const int u = from[0], v = to[0];
      if (!strict(u, v)) continue;
      bool covered = false;
      for (const auto& mid : poset.tie_classes) {
        const int w = mid[0];
        if (w != u && w != v && strict(u, w) && strict(w, v)) {
          covered = true;
          break;
        }
      }
      if (!covered) edges.emplace_back(u, v);
    }
  return edges;
}

}  // namespace equigame::causal
