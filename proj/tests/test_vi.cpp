#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "equigame/errors.hpp"
#include "equigame/json_io.hpp"
#include "equigame/vi.hpp"
#include "testutil.hpp"

using equigame::DivergenceError;
using equigame::Rng;
using namespace equigame::vi;

namespace {

VIProblem affine(const Eigen::MatrixXd& m, const Eigen::VectorXd& q, FeasibleSet set) {
  VIProblem p;
  p.n = m.rows();
  p.F = [m, q](const Eigen::VectorXd& x) -> Eigen::VectorXd { return m * x + q; };
  p.jacobian = [m](const Eigen::VectorXd&) { return m; };
  p.feasible = std::move(set);
  return p;
}

VIProblem shifted_identity(const Eigen::VectorXd& b, FeasibleSet set) {
  // F(x) = x - b
  return affine(Eigen::MatrixXd::Identity(b.size(), b.size()), -b, std::move(set));
}

}  // namespace

TEST_CASE("feasible set projections") {
  SUBCASE("idempotent and nonexpansive on random draws") {
    Rng rng(11);
    const auto sets = std::vector<FeasibleSet>{
        FeasibleSet::nonnegative_orthant(4),
        FeasibleSet::box(Eigen::Vector4d(-1, 0, 2, -3), Eigen::Vector4d(1, 5, 2, 0)),
        FeasibleSet::ball(Eigen::Vector4d(1, 1, -1, 0), 2.5),
        FeasibleSet::product({FeasibleSet::box(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1)),
                              FeasibleSet::ball(Eigen::Vector2d(0, 0), 1.0)}),
    };
    for (const auto& set : sets) {
      for (int trial = 0; trial < 200; ++trial) {
        const Eigen::VectorXd x = testutil::random_vector(rng, 4, -10, 10);
        const Eigen::VectorXd y = testutil::random_vector(rng, 4, -10, 10);
        const Eigen::VectorXd px = set.project(x);
        CHECK((set.project(px) - px).norm() <= 1e-12);
        CHECK((px - set.project(y)).norm() <= (x - y).norm() + 1e-12);
      }
    }
  }
  SUBCASE("block projection touches only its block") {
    const auto set =
        FeasibleSet::product({FeasibleSet::nonnegative_orthant(2),
                              FeasibleSet::box(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1))});
    Eigen::VectorXd x(4);
    x << -1, -2, 5, -3;
    const Eigen::VectorXd p0 = set.project_block(0, x);
    CHECK(p0 == Eigen::Vector4d(0, 0, 5, -3));
    const Eigen::VectorXd p1 = set.project_block(1, x);
    CHECK(p1 == Eigen::Vector4d(-1, -2, 1, 0));
    CHECK(set.num_blocks() == 2);
    // Composing all block projections equals the full projection for boxes.
    CHECK(set.project_block(1, set.project_block(0, x)) == set.project(x));
  }
}

TEST_CASE("natural residual") {
  SUBCASE("zero at the unconstrained solutions") {
    const auto p = shifted_identity(Eigen::Vector3d::Zero(), FeasibleSet::whole(3));
    CHECK(natural_residual(p, Eigen::Vector3d::Zero(), 1.0) == 0.0);
    const auto pb = shifted_identity(Eigen::Vector3d(2, -1, 4), FeasibleSet::whole(3));
    CHECK(natural_residual(pb, Eigen::Vector3d(2, -1, 4), 1.0) == 0.0);
  }
  SUBCASE("alpha must be positive, x finite") {
    const auto p = shifted_identity(Eigen::Vector2d::Zero(), FeasibleSet::whole(2));
    CHECK_THROWS_AS(natural_residual(p, Eigen::Vector2d::Zero(), 0.0), std::invalid_argument);
    Eigen::Vector2d bad(std::nan(""), 0.0);
    CHECK_THROWS_AS(natural_residual(p, bad, 1.0), std::invalid_argument);
  }
}

TEST_CASE("monotonicity probe") {
  SUBCASE("identity field") {
    const auto p = shifted_identity(Eigen::Vector3d::Zero(), FeasibleSet::whole(3));
    const auto rep = check_monotonicity(p, 200, 5);
    CHECK(rep.monotone);
    CHECK(rep.mu_lower == doctest::Approx(1.0));
    CHECK(rep.lipschitz_upper == doctest::Approx(1.0));
  }
  SUBCASE("negated identity is not monotone") {
    auto p = shifted_identity(Eigen::Vector2d::Zero(), FeasibleSet::whole(2));
    auto inner = p.F;
    p.F = [inner](const Eigen::VectorXd& x) -> Eigen::VectorXd { return -inner(x); };
    const auto rep = check_monotonicity(p, 200, 5);
    CHECK_FALSE(rep.monotone);
    CHECK(rep.mu_lower == doctest::Approx(-1.0));
  }
  SUBCASE("sample count precondition") {
    const auto p = shifted_identity(Eigen::Vector2d::Zero(), FeasibleSet::whole(2));
    CHECK_THROWS_AS(check_monotonicity(p, 1, 5), std::invalid_argument);
  }
}

TEST_CASE("basic projection solver") {
  SUBCASE("interior optimum of a box problem") {
    const Eigen::VectorXd b = Eigen::Vector3d(0.3, 0.5, 0.9);
    const auto p = shifted_identity(
        b, FeasibleSet::box(Eigen::Vector3d::Zero(), Eigen::Vector3d::Ones()));
    SolveOptions opts;
    opts.tol = 1e-10;
    const auto sol = solve_basic_projection(p, Eigen::VectorXd::Ones(3), 0.5, opts);
    CHECK(sol.converged);
    CHECK((sol.point - b).norm() < 1e-9);
  }
  SUBCASE("exterior optimum clamps to the box corner") {
    // Oracle: the unconstrained optimum (2, 2) projects onto [0,1]^2 at (1, 1).
    const auto p = shifted_identity(
        Eigen::Vector2d(2, 2), FeasibleSet::box(Eigen::Vector2d::Zero(), Eigen::Vector2d::Ones()));
    const auto sol = solve_basic_projection(p, Eigen::VectorXd::Ones(2), 0.5, {});
    CHECK(sol.converged);
    CHECK((sol.point - Eigen::Vector2d(1, 1)).norm() < 1e-8);
  }
  SUBCASE("diverging step size raises with advice") {
    const auto p = shifted_identity(Eigen::Vector2d::Zero(), FeasibleSet::whole(2));
    SolveOptions opts;
    opts.x0 = Eigen::Vector2d(1, 1);  // away from the solution so alpha = 3 blows up
    CHECK_THROWS_AS(solve_basic_projection(p, Eigen::VectorXd::Ones(2), 3.0, opts),
                    DivergenceError);
  }
  SUBCASE("parameter validation") {
    const auto p = shifted_identity(Eigen::Vector2d::Zero(), FeasibleSet::whole(2));
    CHECK_THROWS_AS(solve_basic_projection(p, Eigen::VectorXd::Ones(2), -1.0, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_basic_projection(p, -Eigen::VectorXd::Ones(2), 0.5, {}),
                    std::invalid_argument);
  }
}

TEST_CASE("extragradient succeeds where basic projection orbits") {
  // Rotation field F(x, y) = (y, -x) on the unit ball: monotone but not
  // strongly monotone; the solution is the origin.
  VIProblem p;
  p.n = 2;
  p.F = [](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    return Eigen::Vector2d(x[1], -x[0]);
  };
  p.feasible = FeasibleSet::ball(Eigen::Vector2d::Zero(), 1.0);
  SolveOptions opts;
  opts.tol = 1e-6;
  opts.max_iter = 20000;
  opts.x0 = Eigen::Vector2d(0.9, 0.0);

  const auto extra = solve_extragradient(p, 0.1, opts);
  CHECK(extra.converged);
  CHECK(extra.point.norm() < 1e-5);

  const auto basic = solve_basic_projection(p, Eigen::VectorXd::Ones(2), 0.1, opts);
  CHECK_FALSE(basic.converged);
  CHECK(basic.residual > 0.1);  // trapped on the boundary orbit
}

TEST_CASE("extragradient on unconstrained shifted identity") {
  const Eigen::VectorXd b = Eigen::Vector3d(4, -2, 7);
  auto p = shifted_identity(b, FeasibleSet::whole(3));
  p.mu = 1.0;
  p.L = 2.0;  // a valid over-estimate; default alpha = mu/L^2 = 0.25
  const auto sol = solve_extragradient(p, -1.0, {});
  CHECK(sol.converged);
  CHECK((sol.point - b).norm() < 1e-8);
  SUBCASE("missing constants require explicit alpha") {
    p.mu.reset();
    CHECK_THROWS_AS(solve_extragradient(p, -1.0, {}), std::invalid_argument);
  }
}

TEST_CASE("solver agreement on a strongly monotone problem") {
  Eigen::MatrixXd m(3, 3);
  m << 3, 1, 0, -1, 2, 0.5, 0, -0.5, 4;  // positive definite symmetric part
  const Eigen::VectorXd q = Eigen::Vector3d(-1, 2, -3);
  const auto p = affine(m, q, FeasibleSet::nonnegative_orthant(3));
  SolveOptions opts;
  opts.tol = 1e-10;
  const auto a = solve_basic_projection(p, Eigen::VectorXd::Ones(3), 0.1, opts);
  const auto b = solve_extragradient(p, 0.1, opts);
  REQUIRE(a.converged);
  REQUIRE(b.converged);
  CHECK((a.point - b.point).norm() <= 10 * opts.tol);
  SUBCASE("residual certificate recomputes") {
    CHECK(natural_residual(p, a.point, 1.0) == doctest::Approx(a.residual).epsilon(1e-12));
    CHECK(natural_residual(p, a.point, 1.0) <= opts.tol);
  }
  SUBCASE("VI characterization on a dense grid") {
    // Grid oracle: <F(x*), y - x*> >= 0 over a box grid around the solution.
    const Eigen::VectorXd fx = p.F(a.point);
    for (double y0 = 0; y0 <= 2.0; y0 += 0.25)
      for (double y1 = 0; y1 <= 2.0; y1 += 0.25)
        for (double y2 = 0; y2 <= 2.0; y2 += 0.25)
          CHECK(fx.dot(Eigen::Vector3d(y0, y1, y2) - a.point) >= -1e-7);
  }
}

TEST_CASE("per-step contraction bound for affine strongly monotone maps") {
  // F(x) = Mx with symmetric M: mu = lambda_min, L = lambda_max. Alpha in the
  // admissible range gives |x_{k+1} - x*| <= sqrt(1 - 2 mu a + a^2 L^2)|x_k - x*|.
  const Eigen::MatrixXd m = Eigen::Vector2d(1.0, 2.0).asDiagonal();
  const double mu = 1.0, L = 2.0, alpha = mu / (L * L);
  const double factor = std::sqrt(1.0 - 2.0 * mu * alpha + alpha * alpha * L * L);
  const auto p = affine(m, Eigen::Vector2d::Zero(), FeasibleSet::whole(2));
  Eigen::VectorXd x = Eigen::Vector2d(5.0, -7.0);
  for (int k = 0; k < 60; ++k) {
    const Eigen::VectorXd next = x - alpha * p.F(x);
    CHECK(next.norm() <= factor * x.norm() + 1e-12);
    x = next;
  }
  CHECK(factor < 1.0);
}

TEST_CASE("step schedules") {
  SUBCASE("harmonic schedule is valid") {
    CHECK(assert_schedule_valid(StepSchedule::power(1.0, 1.0, 1.0, 1.0)).valid);
  }
  SUBCASE("alpha = 1/sqrt(k+1) fails the square-summability condition") {
    const auto rep = assert_schedule_valid(StepSchedule::power(1.0, 1.0, 0.5, 1.0));
    CHECK_FALSE(rep.valid);
  }
  SUBCASE("beta = 2 kills gamma") {
    CHECK_FALSE(assert_schedule_valid(StepSchedule::power(1.0, 1.0, 1.0, 2.0)).valid);
  }
  SUBCASE("custom schedules get a numeric screen") {
    StepSchedule good;
    good.alpha = [](long k) { return 1.0 / (k + 2.0); };
    good.beta = [](long) { return 0.5; };
    CHECK(assert_schedule_valid(good, 100000).valid);

    StepSchedule bad;
    bad.alpha = [](long k) { return 1.0 / std::sqrt(k + 2.0); };
    bad.beta = [](long) { return 0.5; };
    CHECK_FALSE(assert_schedule_valid(bad, 100000).valid);

    StepSchedule convergent;
    convergent.alpha = [](long k) { return 1.0 / ((k + 2.0) * (k + 2.0)); };
    convergent.beta = [](long) { return 0.5; };
    CHECK_FALSE(assert_schedule_valid(convergent, 100000).valid);
  }
}

TEST_CASE("stochastic two-step solver") {
  SUBCASE("zero noise, single block, beta 1 reduces to the projection iteration") {
    const Eigen::VectorXd b = Eigen::Vector2d(1.5, 2.5);
    auto p = shifted_identity(b, FeasibleSet::product({FeasibleSet::nonnegative_orthant(2)}));
    StochasticSampler sampler;
    sampler.draw_noise = [](Rng&) { return Eigen::VectorXd::Zero(2); };
    auto F = p.F;
    sampler.f_noisy = [F](const Eigen::VectorXd& x, const Eigen::VectorXd& v) -> Eigen::VectorXd {
      return F(x) + v;
    };
    const auto sched = StepSchedule::power(0.5, 10.0, 1.0, 1.0);
    const long steps = 200;
    const auto sol = solve_stochastic_two_step(p, sampler, sched, 42, steps);

    // Deterministic trajectory oracle with the same step sizes.
    Eigen::VectorXd x = p.feasible.project(Eigen::VectorXd::Zero(2));
    for (long k = 0; k < steps; ++k)
      x = p.feasible.project(x - sched.alpha(k) * p.F(x));
    CHECK(sol.point == x);  // bitwise
  }
  SUBCASE("scalar noisy root: F(x) = x with uniform noise converges near 0") {
    VIProblem p;
    p.n = 1;
    p.F = [](const Eigen::VectorXd& x) { return x; };
    p.feasible = FeasibleSet::product({FeasibleSet::nonnegative_orthant(1)});
    StochasticSampler sampler;
    sampler.draw_noise = [](Rng& rng) {
      return Eigen::VectorXd::Constant(1, rng.uniform(-1.0, 1.0));
    };
    sampler.f_noisy = [](const Eigen::VectorXd& x, const Eigen::VectorXd& v) -> Eigen::VectorXd {
      return x + v;
    };
    const auto sol =
        solve_stochastic_two_step(p, sampler, StepSchedule::power(0.5, 10.0, 1.0, 1.0), 7, 100000);
    CHECK(sol.point[0] < 5e-2);  // known root of E F at 0
  }
  SUBCASE("non-product feasible set is unsupported") {
    const auto p = shifted_identity(Eigen::Vector2d::Zero(), FeasibleSet::whole(2));
    StochasticSampler sampler = StochasticSampler::additive_gaussian(p, 0.0);
    CHECK_THROWS_AS(
        solve_stochastic_two_step(p, sampler, StepSchedule::power(0.5, 10, 1, 1), 1, 10),
        std::invalid_argument);
  }
  SUBCASE("deterministic given seed") {
    const Eigen::VectorXd b = Eigen::Vector2d(1.0, 1.0);
    auto p = shifted_identity(b, FeasibleSet::product({FeasibleSet::nonnegative_orthant(1),
                                                       FeasibleSet::nonnegative_orthant(1)}));
    const auto sampler = StochasticSampler::additive_gaussian(p, 1.0);
    const auto sched = StepSchedule::power(0.5, 10.0, 1.0, 1.0);
    const auto s1 = solve_stochastic_two_step(p, sampler, sched, 99, 5000);
    const auto s2 = solve_stochastic_two_step(p, sampler, sched, 99, 5000);
    CHECK(s1.point == s2.point);
  }
}

TEST_CASE("sampler mean matches the deterministic field") {
  // Empirical mean of F_noisy(x, .) within 4 standard errors of F(x).
  const auto p = shifted_identity(Eigen::Vector2d(1.0, -2.0),
                                  FeasibleSet::product({FeasibleSet::nonnegative_orthant(2)}));
  const double sigma = 1.0;
  const auto sampler = StochasticSampler::additive_gaussian(p, sigma);
  Rng rng(3);
  const Eigen::VectorXd x = Eigen::Vector2d(0.3, 2.0);
  const long draws = 10000;
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(2);
  for (long i = 0; i < draws; ++i) mean += sampler.f_noisy(x, sampler.draw_noise(rng));
  mean /= static_cast<double>(draws);
  const double se = sigma / std::sqrt(static_cast<double>(draws));
  for (int c = 0; c < 2; ++c) CHECK(std::abs(mean[c] - p.F(x)[c]) <= 4.0 * se);
}

TEST_CASE("affine problem JSON round trip") {
  Eigen::MatrixXd m(2, 2);
  m << 2, 0.5, -0.5, 3;
  const Eigen::VectorXd q = Eigen::Vector2d(-1, 2);
  const auto j = equigame::io::write_affine_vi(m, q, FeasibleSet::nonnegative_orthant(2));
  const auto p = equigame::io::read_affine_vi(j);
  CHECK(p.n == 2);
  const Eigen::VectorXd x = Eigen::Vector2d(1.0, -2.0);
  CHECK((p.F(x) - (m * x + q)).norm() == 0.0);
  CHECK(p.feasible.kind() == FeasibleSet::Kind::Orthant);
  SUBCASE("malformed input names the field") {
    auto bad = j;
    bad.erase("q");
    CHECK_THROWS_WITH_AS(static_cast<void>(equigame::io::read_affine_vi(bad)),
                         doctest::Contains("missing field \"q\""), equigame::ValidationError);
  }
}
