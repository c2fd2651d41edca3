#ifndef EQUIGAME_SEPAROID_HPP
#define EQUIGAME_SEPAROID_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace equigame::causal {

// Join semilattice with a ternary independence relation, read as
// x independent of y given z. The join table may be supplied or derived
// from the order as the least upper bound.
struct Separoid {
  std::vector<std::string> names;
  std::vector<std::vector<char>> leq;           // preorder
  std::vector<std::vector<int>> join;
  std::optional<std::vector<std::vector<int>>> meet;
  std::vector<std::array<int, 3>> ci_triples;   // (x, y, z)

  int size() const { return static_cast<int>(names.size()); }
  bool ci(int x, int y, int z) const;
  // Populates the dense lookup used by ci(); called by the builders.
  void index_ci();
  // Checks that leq is a preorder and that join (and meet, if present) are
  // the least upper / greatest lower bounds. Derives missing tables from
  // leq when possible. Throws ValidationError on structural failure.
  void validate_structure();

 private:
  std::vector<char> ci_dense_;
};

struct SeparoidViolation {
  std::string axiom;  // "P1" .. "P6"
  std::array<int, 4> witness;  // (x, y, z, w); unused slots are -1
  std::string describe(const Separoid& s) const;
};

// Exhaustively checks P1-P5 over all element tuples, and P6 when `strong`
// is set and a meet is available. Structural problems throw; axiom failures
// are returned with witnesses.
std::vector<SeparoidViolation> check_separoid(Separoid s, bool strong = false);

// Separoid of variable subsets ordered by inclusion, with the independence
// relation read off an explicit joint probability table: (X, Y, Z) holds iff
// p(xyz) p(z) = p(xz) p(yz) for every assignment, within tol. Up to 5 binary
// variables; the table is indexed by bit i = vars[i].
Separoid separoid_from_joint(const std::vector<std::string>& vars,
                             const std::vector<double>& joint, double tol = 1e-9);

}  // namespace equigame::causal

#endif
