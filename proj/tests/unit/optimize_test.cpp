#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "circlemap/compensated_sum.hpp"
#include "circlemap/energy.hpp"
#include "circlemap/error.hpp"
#include "circlemap/optimize.hpp"
#include "circlemap/oracle.hpp"
#include "circlemap/verify.hpp"
#include "generators.hpp"

namespace circlemap {
namespace {

using testing::Rng;
using testing::seeded;

constexpr double kQuarterTurnSquared = 0.25 * std::numbers::pi * std::numbers::pi;

double sum_squares(const VectorField& g) {
  CompensatedSum s;
  for (const Vec2& x : g.values()) s += squared_norm(x);
  return s.value();
}

double max_abs(const VectorField& g) {
  double m = 0.0;
  for (const Vec2& x : g.values()) m = std::max({m, std::abs(x.u1), std::abs(x.u2)});
  return m;
}

void expect_non_increasing(const std::vector<double>& h) {
  for (std::size_t k = 1; k < h.size(); ++k) EXPECT_LE(h[k], h[k - 1]) << "entry " << k;
}

TEST(Armijo, AcceptedStepSatisfiesSufficientDecrease) {
  for (int seed = 0; seed < 10; ++seed) {
    const ProblemSpec spec = seeded(seed % 2 ? make_a1_spec(41, 3.0) : make_a2_spec(9, 3.0), seed);
    const VectorField u = make_random_admissible(spec);
    const VectorField g = riemannian_gradient(u, spec.p);
    const ArmijoResult r = armijo_step(u, g, spec.p, 0.5, 1e-4);
    ASSERT_TRUE(r.accepted);
    const double t0 = 1.0 / (1.0 + max_abs(g));
    EXPECT_DOUBLE_EQ(r.step, t0 * std::pow(0.5, r.backtracks));
    const double predicted = 1e-4 * r.step * sum_squares(g);
    EXPECT_LE(energy(r.next, spec.p) - energy(u, spec.p), -predicted * (1.0 - 1e-9));
    EXPECT_LE(r.decrease, -predicted);
    EXPECT_TRUE(check_admissible(r.next, spec).admissible);
  }
}

TEST(Armijo, ZeroGradientIsRejected) {
  const Grid g(2, 5);
  const VectorField u = make_constant_2d(g);
  try {
    armijo_step(u, riemannian_gradient(u, 2.0), 2.0, 0.5, 1e-4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
  }
}

TEST(Armijo, FewBacktracksNearTheMinimizer) {
  const Grid g(1, 101);
  Rng rng(3);
  VectorField u = make_geodesic_1d(g);
  for (std::size_t n = 1; n + 1 < u.size(); ++n) u[n] = rotate(u[n], rng.uniform(-1e-4, 1e-4));
  const ArmijoResult r = armijo_step(u, riemannian_gradient(u, 2.0), 2.0, 0.5, 1e-4);
  ASSERT_TRUE(r.accepted);
  // Euclidean steps scale like h/4 for p = 2: about log2(4/h) halvings from t0 ~ 1.
  EXPECT_LE(r.backtracks, static_cast<int>(std::ceil(std::log2(4.0 / g.spacing()))) + 1);
}

TEST(Stationarity, EqualsTheHatFunctionResidual) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Grid g(trial % 2 + 1, rng.integer(3, 30));
    const VectorField u = testing::smooth_unit_field(g, rng, 0.5);
    for (double p : {2.0, 3.0}) {
      const double a = stationarity(u, p);
      EXPECT_NEAR(a, el_residual(u, p), 1e-10 * std::max(1.0, a));
    }
  }
}

TEST(Descent, ConstantSquareConvergesWithoutMoving) {
  const ProblemSpec spec = make_a2_spec(11, 3.0);
  const VectorField u = make_constant_2d(spec.grid);
  const DescentResult r = projected_gradient_descent(spec, u);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 0);
  EXPECT_EQ(r.field, u);
  ASSERT_EQ(r.energy_history.size(), 1u);
  EXPECT_EQ(r.energy_history[0], 0.0);
}

TEST(Descent, EveryIterateIsAdmissibleWithFixedBoundary) {
  for (DescentMetric metric : {DescentMetric::sobolev, DescentMetric::euclidean}) {
    ProblemSpec spec = seeded(make_a2_spec(12, 3.0), 9);
    spec.metric = metric;
    const VectorField init = make_random_admissible(spec);
    double previous = energy(init, spec.p);
    for (int k = 1; k <= 8; ++k) {
      const DescentResult r = projected_gradient_descent(spec, init, k);
      EXPECT_EQ(r.iterations, k);
      const ConstraintReport c = check_admissible(r.field, spec);
      EXPECT_TRUE(c.admissible);
      EXPECT_LE(c.unit_norm_defect, 1e-12);
      for (std::size_t n : spec.grid.boundary_nodes()) EXPECT_EQ(r.field[n], init[n]);
      const double e = energy(r.field, spec.p);
      EXPECT_LT(e, previous);
      previous = e;
      expect_non_increasing(r.energy_history);
      EXPECT_EQ(r.energy_history.size(), static_cast<std::size_t>(k) + 1);
    }
  }
}

TEST(Descent, BudgetIsRespectedAndReported) {
  const ProblemSpec spec = seeded(make_a1_spec(101, 2.0), 2);
  const DescentResult r = projected_gradient_descent(spec, make_random_admissible(spec), 3);
  EXPECT_EQ(r.iterations, 3);
  EXPECT_FALSE(r.converged);
  EXPECT_FALSE(r.stagnated);
  EXPECT_GT(r.el_residual, spec.tol);
}

TEST(Descent, InadmissibleStartIsRejected) {
  const ProblemSpec spec = make_a1_spec(11, 2.0);
  VectorField u = make_geodesic_1d(spec.grid);
  u[3] = 1.1 * u[3];
  try {
    projected_gradient_descent(spec, u);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::constraint_violation);
  }
  EXPECT_THROW(solve(spec, u), Error);
}

TEST(Descent, EuclideanMetricAlsoConverges) {
  ProblemSpec spec = seeded(make_a2_spec(11, 2.0), 1);
  spec.metric = DescentMetric::euclidean;
  const Solution s = solve(spec, make_random_admissible(spec));
  EXPECT_TRUE(s.report.converged);
  EXPECT_LE(s.report.final_energy, 1e-6);
}

TEST(Solve, GeodesicEnergyFromRandomStart) {
  const ProblemSpec spec = seeded(make_a1_spec(201, 2.0), 1);
  const Solution s = solve(spec, make_random_admissible(spec));
  EXPECT_TRUE(s.report.converged);
  EXPECT_LE(std::abs(s.report.final_energy - kQuarterTurnSquared), 1e-3 * kQuarterTurnSquared);
  EXPECT_LE(s.report.el_residual, spec.tol);
  EXPECT_TRUE(check_admissible(s.field, spec).admissible);
  expect_non_increasing(s.report.energy_history);
  EXPECT_EQ(s.report.energy_history.front(), energy(make_random_admissible(spec), 2.0));
}

TEST(Solve, SquareWithConstantBoundaryReachesZero) {
  const ProblemSpec spec = seeded(make_a2_spec(41, 2.0), 7);
  const Solution s = solve(spec, make_random_admissible(spec));
  EXPECT_TRUE(s.report.converged);
  EXPECT_LE(s.report.final_energy, 1e-6);
  EXPECT_LE(s.report.el_residual, 1e-6);
}

TEST(Solve, GeodesicStartConvergesQuickly) {
  const ProblemSpec spec = make_a1_spec(201, 2.0);
  const VectorField init = make_geodesic_1d(spec.grid);
  const Solution s = solve(spec, init);
  EXPECT_TRUE(s.report.converged);
  EXPECT_LE(s.report.iterations, 5);
  EXPECT_LE(s.report.final_energy, energy(init, 2.0));
}

TEST(Solve, ResidualGoesBelowTheEnergyRoundoffFloor) {
  // Near this minimizer the true decrease per step is far below the rounding
  // noise of the energy, so only the slope test can accept steps.
  ProblemSpec spec = seeded(make_a1_spec(81, 4.5), 5);
  spec.tol = 1e-8;
  const Solution s = solve(spec, make_random_admissible(spec));
  EXPECT_TRUE(s.report.converged);
  EXPECT_LE(el_residual(s.field, spec.p), 1e-8);
  expect_non_increasing(s.report.energy_history);
}

TEST(Solve, NonConvergenceIsReportedNotThrown) {
  ProblemSpec spec = seeded(make_a1_spec(201, 2.0), 3);
  spec.max_iters = 2;
  const Solution s = solve(spec, make_random_admissible(spec));
  EXPECT_FALSE(s.report.converged);
  EXPECT_LE(s.report.iterations, 2);
  EXPECT_TRUE(check_admissible(s.field, spec).admissible);
}

TEST(Solve, ConvergedMeansStationary) {
  for (int seed = 0; seed < 6; ++seed) {
    const ProblemSpec spec =
        seeded(seed % 2 ? make_a1_spec(81, 2.0 + seed * 0.5) : make_a2_spec(15, 2.0 + seed * 0.5),
               seed);
    const Solution s = solve(spec, make_random_admissible(spec));
    ASSERT_TRUE(s.report.converged) << seed;
    EXPECT_LE(s.report.el_residual, spec.tol);
    EXPECT_LE(el_residual(s.field, spec.p), spec.tol);
    expect_non_increasing(s.report.energy_history);
    EXPECT_EQ(s.report.energy_history.size(),
              static_cast<std::size_t>(s.report.iterations + s.report.defect_moves) + 1);

    // First variation along any admissible direction, bounded by the
    // discrete L1 norm of the direction.
    Rng rng(static_cast<std::uint64_t>(seed));
    for (int k = 0; k < 5; ++k) {
      const VectorField v = testing::random_interior_direction(spec.grid, rng);
      double l1 = 0.0;
      for (const Vec2& x : v.values()) l1 += std::abs(x.u1) + std::abs(x.u2);
      l1 *= spec.grid.cell_volume();
      EXPECT_LE(std::abs(dk_zero(s.field, v, spec.p)), spec.tol * l1);
    }
  }
}

TEST(Solve, NotBelowTheAngleLiftOptimum) {
  for (double p : {2.0, 3.0, 4.0}) {
    const ProblemSpec spec = seeded(make_a1_spec(101, p), 5);
    const Solution s = solve(spec, make_random_admissible(spec));
    const AngleLiftSolution oracle = angle_lift_solve_1d(spec);
    EXPECT_GE(s.report.final_energy, oracle.energy - 1e-6) << p;
    EXPECT_LE(std::abs(s.report.final_energy - oracle.lifted_energy), 1e-3 * oracle.lifted_energy);
  }
}

TEST(Solve, SeedsAgreeOnTheMinimizer) {
  std::vector<VectorField> finals;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ProblemSpec spec = seeded(make_a1_spec(101, 2.0), seed);
    finals.push_back(solve(spec, make_random_admissible(spec)).field);
  }
  for (std::size_t a = 0; a < finals.size(); ++a) {
    for (std::size_t b = a + 1; b < finals.size(); ++b) {
      EXPECT_LE(max_node_distance(finals[a], finals[b]), 1e-4) << a << " vs " << b;
    }
  }
}

TEST(Solve, RootObjectiveReachesTheSameField) {
  for (const ProblemSpec& base : {make_a1_spec(101, 2.0), make_a1_spec(101, 3.0),
                                  make_a2_spec(15, 2.0)}) {
    ProblemSpec spec = seeded(base, 11);
    const VectorField init = make_random_admissible(spec);
    const Solution plain = solve(spec, init);
    spec.objective = Objective::energy_root;
    const Solution root = solve(spec, init);
    EXPECT_TRUE(plain.report.converged);
    EXPECT_TRUE(root.report.converged);
    EXPECT_LE(max_node_distance(plain.field, root.field), 1e-6);
  }
}

TEST(Solve, DefectMovesCanBeDisabled) {
  ProblemSpec spec = seeded(make_a1_spec(201, 2.0), 1);
  spec.defect_moves = false;
  const Solution s = solve(spec, make_random_admissible(spec));
  EXPECT_EQ(s.report.defect_moves, 0);
  expect_non_increasing(s.report.energy_history);
}

}  // namespace
}  // namespace circlemap
