#include "equigame/feasible.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace equigame::vi {

FeasibleSet FeasibleSet::whole(Eigen::Index n) {
  FeasibleSet s;
  s.kind_ = Kind::Whole;
  s.dim_ = n;
  return s;
}

FeasibleSet FeasibleSet::nonnegative_orthant(Eigen::Index n) {
  FeasibleSet s;
  s.kind_ = Kind::Orthant;
  s.dim_ = n;
  return s;
}

FeasibleSet FeasibleSet::box(Eigen::VectorXd lo, Eigen::VectorXd hi) {
  if (lo.size() != hi.size()) throw std::invalid_argument("box: bound dimensions differ");
  if ((lo.array() > hi.array()).any()) throw std::invalid_argument("box: lo > hi somewhere");
  FeasibleSet s;
  s.kind_ = Kind::Box;
  s.dim_ = lo.size();
  s.lo_ = std::move(lo);
  s.hi_ = std::move(hi);
  return s;
}

FeasibleSet FeasibleSet::ball(Eigen::VectorXd center, double radius) {
  if (!(radius >= 0.0)) throw std::invalid_argument("ball: radius must be >= 0");
  FeasibleSet s;
  s.kind_ = Kind::Ball;
  s.dim_ = center.size();
  s.center_ = std::move(center);
  s.radius_ = radius;
  return s;
}

FeasibleSet FeasibleSet::product(std::vector<FeasibleSet> blocks) {
  if (blocks.empty()) throw std::invalid_argument("product: no blocks");
  FeasibleSet s;
  s.kind_ = Kind::Blocks;
  s.offsets_.reserve(blocks.size());
  for (const auto& b : blocks) {
    s.offsets_.push_back(s.dim_);
    s.dim_ += b.dimension();
  }
  s.blocks_ = std::make_shared<const std::vector<FeasibleSet>>(std::move(blocks));
  return s;
}

FeasibleSet FeasibleSet::custom(Eigen::Index n,
                                std::function<Eigen::VectorXd(const Eigen::VectorXd&)> project) {
  FeasibleSet s;
  s.kind_ = Kind::Custom;
  s.dim_ = n;
  s.project_ = std::move(project);
  return s;
}

Eigen::VectorXd FeasibleSet::project(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (x.size() != dim_)
    throw std::invalid_argument("project: vector has dimension " + std::to_string(x.size()) +
                                ", set expects " + std::to_string(dim_));
  switch (kind_) {
    case Kind::Whole:
      return x;
    case Kind::Orthant:
      return x.cwiseMax(0.0);
    case Kind::Box:
      return x.cwiseMax(lo_).cwiseMin(hi_);
    case Kind::Ball: {
      const Eigen::VectorXd v = x - center_;
      const double norm = v.norm();
      if (norm <= radius_) return x;
      return center_ + (radius_ / norm) * v;
    }
    case Kind::Custom:
      return project_(x);
    case Kind::Blocks: {
      Eigen::VectorXd out(dim_);
      for (std::size_t b = 0; b < blocks_->size(); ++b) {
        const auto& blk = (*blocks_)[b];
        out.segment(offsets_[b], blk.dimension()) =
            blk.project(x.segment(offsets_[b], blk.dimension()));
      }
      return out;
    }
  }
  throw std::logic_error("project: unreachable");
}

int FeasibleSet::num_blocks() const {
  return kind_ == Kind::Blocks ? static_cast<int>(blocks_->size()) : 1;
}

Eigen::VectorXd FeasibleSet::project_block(int b, const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (kind_ != Kind::Blocks) {
    if (b != 0) throw std::invalid_argument("project_block: set has a single block");
    return project(x);
  }
  if (b < 0 || b >= num_blocks()) throw std::invalid_argument("project_block: block out of range");
  Eigen::VectorXd out = x;
  const auto& blk = (*blocks_)[static_cast<std::size_t>(b)];
  out.segment(offsets_[static_cast<std::size_t>(b)], blk.dimension()) =
      blk.project(x.segment(offsets_[static_cast<std::size_t>(b)], blk.dimension()));
  return out;
}

const std::vector<FeasibleSet>& FeasibleSet::blocks() const {
  static const std::vector<FeasibleSet> empty;
  return blocks_ ? *blocks_ : empty;
}

}  // namespace equigame::vi
