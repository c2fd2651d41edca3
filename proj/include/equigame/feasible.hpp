#ifndef EQUIGAME_FEASIBLE_HPP
#define EQUIGAME_FEASIBLE_HPP

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <vector>

namespace equigame::vi {

// Closed convex set with an exact Euclidean projector. Product sets expose
// per-block projection, which the stochastic solver samples.
class FeasibleSet {
 public:
  enum class Kind { Whole, Box, Orthant, Ball, Blocks, Custom };

  FeasibleSet() = default;

  static FeasibleSet whole(Eigen::Index n);
  static FeasibleSet nonnegative_orthant(Eigen::Index n);
  static FeasibleSet box(Eigen::VectorXd lo, Eigen::VectorXd hi);
  static FeasibleSet ball(Eigen::VectorXd center, double radius);
  // Blocks occupy consecutive coordinate ranges in declaration order.
  static FeasibleSet product(std::vector<FeasibleSet> blocks);
  static FeasibleSet custom(Eigen::Index n,
                            std::function<Eigen::VectorXd(const Eigen::VectorXd&)> project);

  Kind kind() const { return kind_; }
  Eigen::Index dimension() const { return dim_; }

  Eigen::VectorXd project(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  // Number of factors; 1 unless the set is a product.
  int num_blocks() const;
  // Projects block b only; coordinates outside the block pass through.
  Eigen::VectorXd project_block(int b, const Eigen::Ref<const Eigen::VectorXd>& x) const;

  const Eigen::VectorXd& lower() const { return lo_; }
  const Eigen::VectorXd& upper() const { return hi_; }
  const Eigen::VectorXd& center() const { return center_; }
  double radius() const { return radius_; }
  const std::vector<FeasibleSet>& blocks() const;

 private:
  Kind kind_ = Kind::Whole;
  Eigen::Index dim_ = 0;
  Eigen::VectorXd lo_, hi_;      // box
  Eigen::VectorXd center_;       // ball
  double radius_ = 0.0;          // ball
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> project_;  // custom
  std::shared_ptr<const std::vector<FeasibleSet>> blocks_;
  std::vector<Eigen::Index> offsets_;  // block start coordinates
};

}  // namespace equigame::vi

#endif
