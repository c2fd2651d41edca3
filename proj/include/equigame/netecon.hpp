#ifndef EQUIGAME_NETECON_HPP
#define EQUIGAME_NETECON_HPP

#include <Eigen/Core>
#include <functional>
#include <string>
#include <vector>

#include "equigame/vi.hpp"

namespace equigame::netecon {

// Blocks of the flattened economy vector x = (Q, q, pi), each block in
// lexicographic (i, j, k) order.
enum class Block { Q = 0, Quality = 1, Price = 2 };

// Sparse polynomial over the flattened economy coordinates: sum of
// coef * x[var]^pow monomials, var < 0 meaning a constant term.
class Polynomial {
 public:
  struct Term {
    double coef = 0.0;
    int var = -1;
    int pow = 0;
  };

  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static Polynomial constant(double c) { return Polynomial({{c, -1, 0}}); }

  Polynomial& add(double coef, int var, int pow) {
    terms_.push_back({coef, var, pow});
    return *this;
  }
  Polynomial& add(double c) { return add(c, -1, 0); }

  double eval(const Eigen::VectorXd& x) const;
  Polynomial derivative(int var) const;
  // Rewrites every variable index through the map (size = dimension).
  Polynomial relabeled(const std::vector<int>& var_map) const;

  std::vector<Term>& terms() { return terms_; }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

// A cost or price function: either an explicit polynomial (analytic partials)
// or a raw function of the flattened vector, differentiated by central
// finite differences (h = 1e-6).
class CostFn {
 public:
  CostFn() : CostFn(Polynomial{}) {}
  CostFn(Polynomial poly) : poly_(std::move(poly)), analytic_(true) {}
  CostFn(std::function<double(const Eigen::VectorXd&)> raw)
      : raw_(std::move(raw)), analytic_(false) {}

  double eval(const Eigen::VectorXd& x) const;
  double partial(const Eigen::VectorXd& x, int var) const;
  double partial2(const Eigen::VectorXd& x, int var1, int var2) const;
  bool analytic() const { return analytic_; }
  const Polynomial& poly() const { return poly_; }
  Polynomial& poly() { return poly_; }

 private:
  Polynomial poly_;
  std::function<double(const Eigen::VectorXd&)> raw_;
  bool analytic_;
};

// Three-tier network economy: m service providers, n network providers,
// o demand markets. Production costs f_i, demand prices rho_ijk, delivery
// costs c_ijk, opportunity costs oc_ijk.
struct Model {
  int m = 0, n = 0, o = 0;
  std::vector<CostFn> f;    // size m
  std::vector<CostFn> rho;  // size m*n*o
  std::vector<CostFn> c;    // size m*n*o
  std::vector<CostFn> oc;   // size m*n*o

  int links() const { return m * n * o; }
  int dimension() const { return 3 * links(); }
  // Flat index of the (i, j, k) coordinate within a block (zero-based).
  int link_index(int i, int j, int k) const { return (i * n + j) * o + k; }
  int var_index(Block b, int i, int j, int k) const {
    return static_cast<int>(b) * links() + link_index(i, j, k);
  }
  bool analytic() const;
  void validate() const;  // throws std::invalid_argument on bad shapes
};

// Split view of the flattened vector.
struct EconomyPoint {
  Eigen::VectorXd quantities;  // Q block
  Eigen::VectorXd qualities;   // q block
  Eigen::VectorXd prices;      // pi block

  static EconomyPoint from_flat(const Model& model, const Eigen::VectorXd& x);
  Eigen::VectorXd to_flat() const;
};

// The equilibrium mapping F = (F1, F2, F3): concatenated negative utility
// gradients of producers (w.r.t. Q) and transporters (w.r.t. q and pi).
// fd_used, when given, reports whether any finite-difference fallback fired.
Eigen::VectorXd f_mapping(const Model& model, const Eigen::VectorXd& x, bool* fd_used = nullptr);

// Jacobian of f_mapping: analytic when every cost function is polynomial,
// otherwise central finite differences of f_mapping.
Eigen::MatrixXd jacobian(const Model& model, const Eigen::VectorXd& x);

struct Utilities {
  Eigen::VectorXd producers;     // U1_i, size m
  Eigen::VectorXd transporters;  // U2_j, size n
};

Utilities utilities(const Model& model, const Eigen::VectorXd& x);

// Compiles the model to a VI over the nonnegative orthant, represented as a
// product of single-coordinate blocks so the stochastic solver can sample it.
vi::VIProblem assemble_vi(const Model& model);

// The canonical 6-variable fixture: two service providers, one network
// provider, one served market. Its Jacobian is constant and positive
// definite, so the VI has a unique equilibrium.
Model paper_instance();

}  // namespace equigame::netecon

#endif
