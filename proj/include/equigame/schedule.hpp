#ifndef EQUIGAME_SCHEDULE_HPP
#define EQUIGAME_SCHEDULE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace equigame::vi {

// Step-size pair (alpha_k, beta_k) for the stochastic two-step solver.
// Admissible schedules need sum(alpha) = inf, sum(alpha^2) < inf and
// sum(alpha^2 / gamma) < inf with gamma_k = beta_k (2 - beta_k).
struct StepSchedule {
  std::function<double(long)> alpha;
  std::function<double(long)> beta;

  // alpha_k = a / (k + c)^p with constant beta; validated analytically.
  struct PowerForm {
    double a, c, p, beta;
  };
  std::optional<PowerForm> form;

  static StepSchedule power(double a, double c, double p, double beta_value);
};

struct ScheduleReport {
  bool valid = false;
  std::vector<std::string> findings;
};

// Power-form schedules are checked analytically (valid iff a > 0, c > 0,
// 1/2 < p <= 1, 0 < beta < 2). Custom schedules get a numeric screen of
// partial sums over a finite horizon plus a beta range check.
ScheduleReport assert_schedule_valid(const StepSchedule& sched, long horizon = 1000000);

}  // namespace equigame::vi

#endif
