#include "equigame/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace equigame::vi {

StepSchedule StepSchedule::power(double a, double c, double p, double beta_value) {
  StepSchedule s;
  s.form = PowerForm{a, c, p, beta_value};
  s.alpha = [a, c, p](long k) { return a / std::pow(static_cast<double>(k) + c, p); };
  s.beta = [beta_value](long) { return beta_value; };
  return s;
}

namespace {

// Sum of f(k) over [lo, hi).
double partial_sum(const std::function<double(long)>& f, long lo, long hi) {
  double s = 0.0;
  for (long k = lo; k < hi; ++k) s += f(k);
  return s;
}

}  // namespace

ScheduleReport assert_schedule_valid(const StepSchedule& sched, long horizon) {
  ScheduleReport rep;
  if (!sched.alpha || !sched.beta) {
    rep.findings.push_back("schedule is missing alpha or beta");
    return rep;
  }

  if (sched.form) {
    const auto& f = *sched.form;
    rep.valid = true;
    if (!(f.a > 0.0) || !(f.c > 0.0)) {
      rep.valid = false;
      rep.findings.push_back("power form needs a > 0 and c > 0");
    }
    if (!(f.p > 0.5)) {
      rep.valid = false;
      rep.findings.push_back("sum(alpha^2) diverges: exponent p <= 1/2");
    }
    if (!(f.p <= 1.0)) {
      rep.valid = false;
      rep.findings.push_back("sum(alpha) converges: exponent p > 1");
    }
    if (!(f.beta > 0.0 && f.beta < 2.0)) {
      rep.valid = false;
      rep.findings.push_back("beta outside (0,2): gamma_k = beta(2-beta) <= 0");
    }
    if (rep.valid) rep.findings.push_back("power form satisfies all three series conditions");
    return rep;
  }

  // Numeric screen for custom schedules. Successive octave increments of a
  // divergent ~1/k series stay flat; those of a convergent p>1 series decay
  // geometrically. sum(alpha^2) must look convergent, sum(alpha) must not.
  rep.valid = true;
  for (long k : {0L, 1L, 10L, 1000L, horizon - 1}) {
    const double b = sched.beta(k);
    if (!(b > 0.0 && b < 2.0)) {
      rep.valid = false;
      rep.findings.push_back("beta(" + std::to_string(k) + ") = " + std::to_string(b) +
                             " outside (0,2): gamma_k <= 0");
    }
    if (!(sched.alpha(k) > 0.0)) {
      rep.valid = false;
      rep.findings.push_back("alpha(" + std::to_string(k) + ") is not positive");
    }
  }
  if (!rep.valid) return rep;

  const long h2 = horizon / 2, h4 = horizon / 4;
  const double inc_a1 = partial_sum(sched.alpha, h4, h2);
  const double inc_a2 = partial_sum(sched.alpha, h2, horizon);
  if (inc_a2 < 0.75 * inc_a1) {
    rep.valid = false;
    rep.findings.push_back("sum(alpha) partial sums look convergent (octave ratio " +
                           std::to_string(inc_a2 / inc_a1) + " < 0.75)");
  }
  auto alpha_sq = [&](long k) {
    const double a = sched.alpha(k);
    return a * a;
  };
  auto alpha_sq_over_gamma = [&](long k) {
    const double a = sched.alpha(k);
    const double b = sched.beta(k);
    return a * a / (b * (2.0 - b));
  };
  for (const auto& [series, name] :
       {std::pair<std::function<double(long)>, const char*>{alpha_sq, "sum(alpha^2)"},
        {alpha_sq_over_gamma, "sum(alpha^2/gamma)"}}) {
    const double i1 = partial_sum(series, h4, h2);
    const double i2 = partial_sum(series, h2, horizon);
    if (i2 > 0.75 * i1) {
      rep.valid = false;
      rep.findings.push_back(std::string(name) + " partial sums look divergent (octave ratio " +
                             std::to_string(i2 / i1) + " >= 0.75)");
    }
  }
  if (rep.valid) rep.findings.push_back("no suspicious partial sums over the tested horizon");
  return rep;
}

}  // namespace equigame::vi
