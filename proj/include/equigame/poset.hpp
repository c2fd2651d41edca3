#ifndef EQUIGAME_POSET_HPP
#define EQUIGAME_POSET_HPP

#include <string>
#include <vector>

namespace equigame::causal {

// Mutation events and the observed genotypes (event subsets), one per sample.
struct GenotypeDataset {
  std::vector<std::string> events;
  std::vector<std::vector<char>> genotypes;  // [sample][event] -> 0/1

  int num_events() const { return static_cast<int>(events.size()); }
  void validate() const;  // throws ValidationError on ragged rows
};

// Order recovered from ancestry constraints: leq reads ancestor <= descendant
// and is reflexive-transitive. Events that end up mutually ancestral are
// merged into tie classes; the quotient by those classes is a partial order.
struct DiscoveredPoset {
  std::vector<std::string> events;
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<int>> tie_classes;

  bool less_eq(int a, int b) const { return leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; }
};

// Support-based ancestry discovery: f is an ancestor of e when the fraction
// of genotypes containing e but missing f is at most epsilon (vacuously when
// e never occurs). The resulting relation is transitively closed and cycles
// collapse to tie classes. epsilon must lie in [0, 1).
DiscoveredPoset discover_poset(const GenotypeDataset& data, double epsilon);

// Hasse edges of the quotient order: the smallest relation whose transitive
// closure restores leq between tie-class representatives.
std::vector<std::pair<int, int>> transitive_reduction(const DiscoveredPoset& poset);

}  // namespace equigame::causal

#endif
