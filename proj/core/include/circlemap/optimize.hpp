#pragma once

#include <string>
#include <vector>

#include "circlemap/field.hpp"
#include "circlemap/problem.hpp"

namespace circlemap {

/// Outcome of one backtracking line search along -direction.
struct ArmijoResult {
  bool accepted = false;
  /// Accepted step, or the last trial when the search failed.
  double step = 0.0;
  int backtracks = 0;
  /// Change of the line-search objective at the accepted step. Negative,
  /// except for a rounding-level value when the approximate test accepted.
  double decrease = 0.0;
  /// Retracted trial point; equals the input field when not accepted.
  VectorField next;
};

/// Largest t in {t0 * ls_beta^k}, t0 = 1/(1 + |direction|_inf), with
///   f(retract(u - t*direction)) <= f(u) - ls_c * t * slope,
/// where f is the energy (or its p-th root) and slope = <g_tan, direction>.
/// The retraction normalizes interior nodes and leaves boundary nodes as they
/// are. Gives up after 60 backtracks or once t < 1e-16.
///
/// Near a minimizer the true decrease drops below the rounding noise of the
/// retraction. A trial whose energy change stays within that noise is then
/// accepted on the slope test phi'(t) <= -(1 - 2*ls_c) * slope instead, with
/// phi(t) = E(retract(u - t*direction)).
/// Throws Error(invalid_argument) when slope <= 0.
ArmijoResult armijo_step(const VectorField& u, const VectorField& direction, double slope,
                         double p, double ls_beta, double ls_c,
                         Objective objective = Objective::energy);

/// Steepest-descent form: direction = g_tan, slope = sum |g_tan(node)|^2.
ArmijoResult armijo_step(const VectorField& u, const VectorField& g_tan, double p,
                         double ls_beta, double ls_c);

/// max over interior nodes and components of |g_tan| divided by h^dim; the
/// discrete Euler-Lagrange residual and the stopping metric of the descent.
double stationarity(const VectorField& u, double p);

struct DescentResult {
  VectorField field;
  /// Energy of the initial field followed by one entry per accepted step.
  std::vector<double> energy_history;
  int iterations = 0;
  bool converged = false;
  /// The line search failed before the tolerance was met.
  bool stagnated = false;
  double el_residual = 0.0;
};

/// Retracted gradient descent from an admissible field, at most `max_iters`
/// accepted steps (spec.max_iters when negative). Every iterate is admissible.
DescentResult projected_gradient_descent(const ProblemSpec& spec, const VectorField& init,
                                         int max_iters = -1);

struct SolveReport {
  ProblemKind problem = ProblemKind::a1;
  double p = 2.0;
  int m = 0;
  int iterations = 0;
  bool converged = false;
  double final_energy = 0.0;
  double el_residual = 0.0;
  std::vector<double> energy_history;
  long long wall_time_ms = 0;
  std::string field_path;
  /// Accepted winding/vortex removal moves.
  int defect_moves = 0;
};

struct Solution {
  SolveReport report;
  VectorField field;
};

/// Minimizes the p-energy over A1/A2 starting from `init`.
///
/// Runs descent in rounds of at most 500 steps. After a round that converged,
/// stagnated or lowered the energy by a relative 1e-8 at most, tries a
/// topological defect removal (see topology.hpp) and keeps it when it lowers
/// the energy. Stops once a round ends stationary with no move accepted, the line
/// search stagnates, 16 moves were made, or the iteration budget is spent. Throws
/// Error(constraint_violation) for an inadmissible `init`; non-convergence is
/// reported through `converged`, not thrown.
Solution solve(const ProblemSpec& spec, const VectorField& init);

}  // namespace circlemap
