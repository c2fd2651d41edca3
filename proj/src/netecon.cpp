#include "equigame/netecon.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace equigame::netecon {

double Polynomial::eval(const Eigen::VectorXd& x) const {
  double s = 0.0;
  for (const Term& t : terms_) {
    if (t.var < 0)
      s += t.coef;
    else
      s += t.coef * std::pow(x[t.var], t.pow);
  }
  return s;
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.var != var || t.pow == 0) continue;
    if (t.pow == 1)
      out.push_back({t.coef, -1, 0});
    else
      out.push_back({t.coef * t.pow, t.var, t.pow - 1});
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::relabeled(const std::vector<int>& var_map) const {
  std::vector<Term> out = terms_;
  for (Term& t : out)
    if (t.var >= 0) t.var = var_map.at(static_cast<std::size_t>(t.var));
  return Polynomial(std::move(out));
}

namespace {
constexpr double kFdStep = 1e-6;
}

double CostFn::eval(const Eigen::VectorXd& x) const {
  return analytic_ ? poly_.eval(x) : raw_(x);
}

double CostFn::partial(const Eigen::VectorXd& x, int var) const {
  if (analytic_) return poly_.derivative(var).eval(x);
  Eigen::VectorXd xp = x, xm = x;
  xp[var] += kFdStep;
  xm[var] -= kFdStep;
  return (raw_(xp) - raw_(xm)) / (2.0 * kFdStep);
}

double CostFn::partial2(const Eigen::VectorXd& x, int var1, int var2) const {
  if (analytic_) return poly_.derivative(var1).derivative(var2).eval(x);
  Eigen::VectorXd xp = x, xm = x;
  xp[var2] += kFdStep;
  xm[var2] -= kFdStep;
  return (partial(xp, var1) - partial(xm, var1)) / (2.0 * kFdStep);
}

bool Model::analytic() const {
  auto all = [](const std::vector<CostFn>& v) {
    for (const auto& fn : v)
      if (!fn.analytic()) return false;
    return true;
  };
  return all(f) && all(rho) && all(c) && all(oc);
}

void Model::validate() const {
  if (m < 1 || n < 1 || o < 1)
    throw std::invalid_argument("model: tier counts must all be positive");
  if (static_cast<int>(f.size()) != m)
    throw std::invalid_argument("model: expected " + std::to_string(m) + " production costs");
  const auto links_sz = static_cast<std::size_t>(links());
  if (rho.size() != links_sz || c.size() != links_sz || oc.size() != links_sz)
    throw std::invalid_argument("model: rho/c/oc must each have m*n*o entries");
}

EconomyPoint EconomyPoint::from_flat(const Model& model, const Eigen::VectorXd& x) {
  const int l = model.links();
  if (x.size() != 3 * l) throw std::invalid_argument("economy point: dimension mismatch");
  return {x.segment(0, l), x.segment(l, l), x.segment(2 * l, l)};
}

Eigen::VectorXd EconomyPoint::to_flat() const {
  Eigen::VectorXd x(quantities.size() + qualities.size() + prices.size());
  x << quantities, qualities, prices;
  return x;
}

Eigen::VectorXd f_mapping(const Model& model, const Eigen::VectorXd& x, bool* fd_used) {
  if (x.size() != model.dimension()) throw std::invalid_argument("f_mapping: dimension mismatch");
  if (fd_used) *fd_used = !model.analytic();
  const int l = model.links();
  Eigen::VectorXd out(3 * l);
  for (int i = 0; i < model.m; ++i) {
    for (int j = 0; j < model.n; ++j) {
      for (int k = 0; k < model.o; ++k) {
        const int idx = model.link_index(i, j, k);
        const int q_var = model.var_index(Block::Q, i, j, k);
        const int s_var = model.var_index(Block::Quality, i, j, k);
        const int p_var = model.var_index(Block::Price, i, j, k);

        // F1: d f_i / d Q_ijk + pi_ijk - rho_ijk - sum_hl (d rho_ihl / d Q_ijk) Q_ihl
        double f1 = model.f[i].partial(x, q_var) + x[p_var] - model.rho[idx].eval(x);
        for (int h = 0; h < model.n; ++h)
          for (int lmkt = 0; lmkt < model.o; ++lmkt) {
            const int ihl = model.link_index(i, h, lmkt);
            f1 -= model.rho[ihl].partial(x, q_var) * x[model.var_index(Block::Q, i, h, lmkt)];
          }
        out[idx] = f1;

        // F2: sum over providers h and markets lmkt of d c_hjl / d q_ijk
        double f2 = 0.0;
        for (int h = 0; h < model.m; ++h)
          for (int lmkt = 0; lmkt < model.o; ++lmkt)
            f2 += model.c[model.link_index(h, j, lmkt)].partial(x, s_var);
        out[l + idx] = f2;

        // F3: -Q_ijk + d oc_ijk / d pi_ijk
        out[2 * l + idx] = -x[q_var] + model.oc[idx].partial(x, p_var);
      }
    }
  }
  return out;
}

Eigen::MatrixXd jacobian(const Model& model, const Eigen::VectorXd& x) {
  const int dim = model.dimension();
  Eigen::MatrixXd jac(dim, dim);
  if (!model.analytic()) {
    for (int v = 0; v < dim; ++v) {
      Eigen::VectorXd xp = x, xm = x;
      xp[v] += kFdStep;
      xm[v] -= kFdStep;
      jac.col(v) = (f_mapping(model, xp) - f_mapping(model, xm)) / (2.0 * kFdStep);
    }
    return jac;
  }
  const int l = model.links();
  for (int i = 0; i < model.m; ++i) {
    for (int j = 0; j < model.n; ++j) {
      for (int k = 0; k < model.o; ++k) {
        const int idx = model.link_index(i, j, k);
        const int q_var = model.var_index(Block::Q, i, j, k);
        const int s_var = model.var_index(Block::Quality, i, j, k);
        const int p_var = model.var_index(Block::Price, i, j, k);
        for (int v = 0; v < dim; ++v) {
          double d1 = model.f[i].partial2(x, q_var, v) - model.rho[idx].partial(x, v);
          if (v == p_var) d1 += 1.0;
          for (int h = 0; h < model.n; ++h)
            for (int lmkt = 0; lmkt < model.o; ++lmkt) {
              const int ihl = model.link_index(i, h, lmkt);
              const int q_ihl = model.var_index(Block::Q, i, h, lmkt);
              d1 -= model.rho[ihl].partial2(x, q_var, v) * x[q_ihl];
              if (v == q_ihl) d1 -= model.rho[ihl].partial(x, q_var);
            }
          jac(idx, v) = d1;

          double d2 = 0.0;
          for (int h = 0; h < model.m; ++h)
            for (int lmkt = 0; lmkt < model.o; ++lmkt)
              d2 += model.c[model.link_index(h, j, lmkt)].partial2(x, s_var, v);
          jac(l + idx, v) = d2;

          double d3 = model.oc[idx].partial2(x, p_var, v);
          if (v == q_var) d3 -= 1.0;
          jac(2 * l + idx, v) = d3;
        }
      }
    }
  }
  return jac;
}

Utilities utilities(const Model& model, const Eigen::VectorXd& x) {
  if (x.size() != model.dimension()) throw std::invalid_argument("utilities: dimension mismatch");
  Utilities u;
  u.producers = Eigen::VectorXd::Zero(model.m);
  u.transporters = Eigen::VectorXd::Zero(model.n);
  for (int i = 0; i < model.m; ++i) {
    double revenue = 0.0, network_fees = 0.0;
    for (int j = 0; j < model.n; ++j)
      for (int k = 0; k < model.o; ++k) {
        const int idx = model.link_index(i, j, k);
        const double qty = x[model.var_index(Block::Q, i, j, k)];
        revenue += model.rho[idx].eval(x) * qty;
        network_fees += x[model.var_index(Block::Price, i, j, k)] * qty;
      }
    u.producers[i] = revenue - model.f[i].eval(x) - network_fees;
  }
  for (int j = 0; j < model.n; ++j) {
    double fees = 0.0, costs = 0.0;
    for (int i = 0; i < model.m; ++i)
      for (int k = 0; k < model.o; ++k) {
        const int idx = model.link_index(i, j, k);
        fees += x[model.var_index(Block::Price, i, j, k)] * x[model.var_index(Block::Q, i, j, k)];
        costs += model.c[idx].eval(x) + model.oc[idx].eval(x);
      }
    u.transporters[j] = fees - costs;
  }
  return u;
}

vi::VIProblem assemble_vi(const Model& model) {
  model.validate();
  auto shared = std::make_shared<const Model>(model);
  vi::VIProblem p;
  p.n = model.dimension();
  p.F = [shared](const Eigen::VectorXd& x) { return f_mapping(*shared, x); };
  p.jacobian = [shared](const Eigen::VectorXd& x) { return jacobian(*shared, x); };
  std::vector<vi::FeasibleSet> blocks(static_cast<std::size_t>(model.dimension()),
                                      vi::FeasibleSet::nonnegative_orthant(1));
  p.feasible = vi::FeasibleSet::product(std::move(blocks));
  return p;
}

Model paper_instance() {
  Model model;
  model.m = 2;
  model.n = 1;
  model.o = 1;
  const int q1 = model.var_index(Block::Q, 0, 0, 0);
  const int q2 = model.var_index(Block::Q, 1, 0, 0);
  const int s1 = model.var_index(Block::Quality, 0, 0, 0);
  const int s2 = model.var_index(Block::Quality, 1, 0, 0);
  const int p1 = model.var_index(Block::Price, 0, 0, 0);
  const int p2 = model.var_index(Block::Price, 1, 0, 0);

  // f1 = Q1^2 + Q1, f2 = 2 Q2^2 + Q2
  model.f.emplace_back(Polynomial{}.add(1.0, q1, 2).add(1.0, q1, 1));
  model.f.emplace_back(Polynomial{}.add(2.0, q2, 2).add(1.0, q2, 1));
  // rho1 = -Q1 - 0.5 Q2 + 0.5 q1 + 100, rho2 = -Q2 - 0.5 Q1 + 0.5 q2 + 200
  model.rho.emplace_back(Polynomial{}.add(-1.0, q1, 1).add(-0.5, q2, 1).add(0.5, s1, 1).add(100.0));
  model.rho.emplace_back(Polynomial{}.add(-1.0, q2, 1).add(-0.5, q1, 1).add(0.5, s2, 1).add(200.0));
  // c1 = 0.5 (q1 - 20)^2, c2 = 0.5 (q2 - 10)^2
  model.c.emplace_back(Polynomial{}.add(0.5, s1, 2).add(-20.0, s1, 1).add(200.0));
  model.c.emplace_back(Polynomial{}.add(0.5, s2, 2).add(-10.0, s2, 1).add(50.0));
  // oc = pi^2
  model.oc.emplace_back(Polynomial{}.add(1.0, p1, 2));
  model.oc.emplace_back(Polynomial{}.add(1.0, p2, 2));
  return model;
}

}  // namespace equigame::netecon
