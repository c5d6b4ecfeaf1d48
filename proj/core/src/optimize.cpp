#include "circlemap/optimize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "circlemap/compensated_sum.hpp"
#include "circlemap/energy.hpp"
#include "circlemap/error.hpp"
#include "circlemap/topology.hpp"
#include "sobolev.hpp"

namespace circlemap {
namespace {

constexpr int kMaxBacktracks = 60;
constexpr double kMinStep = 1e-16;
constexpr int kMaxDefectMoves = 16;
constexpr int kRoundIterations = 500;
constexpr double kPlateau = 1e-8;

double inner_product(const VectorField& a, const VectorField& b) {
  CompensatedSum sum;
  for (std::size_t n = 0; n < a.size(); ++n) sum += dot(a[n], b[n]);
  return sum.value();
}

double max_abs_entry(const VectorField& v) {
  double m = 0.0;
  for (const Vec2& x : v.values()) m = std::max({m, std::abs(x.u1), std::abs(x.u2)});
  return m;
}

// u - t*direction, normalized on the interior; boundary nodes keep their values.
// Returns false when some trial node collapses to the origin.
bool retract(const VectorField& u, const VectorField& direction, double t, VectorField& out) {
  const Grid& grid = u.grid();
  for (std::size_t n = 0; n < u.size(); ++n) {
    if (grid.is_boundary(n)) {
      out[n] = u[n];
      continue;
    }
    const Vec2 w = u[n] - t * direction[n];
    const double r = norm(w);
    if (r <= 1e-15) return false;
    out[n] = w / r;
  }
  return true;
}

// Bound on the energy change caused by renormalizing nodes that are on the
// circle up to a few ulps: the normal part of the gradient times that error.
double retraction_noise(const VectorField& u, double p) {
  const VectorField g = energy_gradient(u, p);
  CompensatedSum sum;
  for (const Vec2& x : g.values()) sum += norm(x);
  return 8.0 * std::numeric_limits<double>::epsilon() * sum.value();
}

// phi'(t) for phi(t) = E(retract(u - t*direction)).
double slope_at(const VectorField& u, const VectorField& direction, double t,
                const VectorField& trial, double p) {
  const VectorField g = riemannian_gradient(trial, p);
  CompensatedSum sum;
  for (std::size_t n = 0; n < u.size(); ++n) {
    if (u.grid().is_boundary(n)) continue;
    sum += -dot(g[n], direction[n]) / norm(u[n] - t * direction[n]);
  }
  return sum.value();
}

void require_admissible(const VectorField& u, const ProblemSpec& spec) {
  const ConstraintReport report = check_admissible(u, spec);
  if (!report.admissible) {
    throw Error(ErrorCode::constraint_violation,
                "initial field is not admissible (unit-norm defect " +
                    std::to_string(report.unit_norm_defect) + ", boundary defect " +
                    std::to_string(report.boundary_defect) + ")");
  }
}

}  // namespace

ArmijoResult armijo_step(const VectorField& u, const VectorField& direction, double slope,
                         double p, double ls_beta, double ls_c, Objective objective) {
  require_same_grid(u, direction);
  if (!(slope > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "line search needs a descent direction");
  }
  const double e0 = objective == Objective::energy_root ? energy(u, p) : 0.0;
  const double root0 = std::pow(e0, 1.0 / p);
  const double predicted =
      objective == Objective::energy_root ? slope * root0 / (p * e0) : slope;

  double noise = -1.0;  // computed on first use
  double t = 1.0 / (1.0 + max_abs_entry(direction));
  VectorField trial(u.grid());
  for (int k = 0; k <= kMaxBacktracks && t >= kMinStep; ++k, t *= ls_beta) {
    if (!retract(u, direction, t, trial)) continue;
    const double energy_change = energy_difference(u, trial, p);
    double change = energy_change;
    if (objective == Objective::energy_root) {
      change = root0 * std::expm1(std::log1p(std::max(change / e0, -1.0)) / p);
    }
    if (change <= -ls_c * t * predicted) {
      return ArmijoResult{true, t, k, change, std::move(trial)};
    }
    if (noise < 0.0) noise = retraction_noise(u, p);
    if (energy_change <= noise &&
        slope_at(u, direction, t, trial, p) <= -(1.0 - 2.0 * ls_c) * slope) {
      return ArmijoResult{true, t, k, change, std::move(trial)};
    }
  }
  return ArmijoResult{false, t, kMaxBacktracks, 0.0, u};
}

ArmijoResult armijo_step(const VectorField& u, const VectorField& g_tan, double p,
                         double ls_beta, double ls_c) {
  return armijo_step(u, g_tan, inner_product(g_tan, g_tan), p, ls_beta, ls_c);
}

double stationarity(const VectorField& u, double p) {
  return max_abs_entry(riemannian_gradient(u, p)) / u.grid().cell_volume();
}

DescentResult projected_gradient_descent(const ProblemSpec& spec, const VectorField& init,
                                         int max_iters) {
  spec.validate();
  require_admissible(init, spec);
  const int budget = max_iters < 0 ? spec.max_iters : max_iters;
  const double volume = spec.grid.cell_volume();

  DescentResult result{init, {energy(init, spec.p)}, 0, false, false, 0.0};
  VectorField& u = result.field;
  while (true) {
    const VectorField g = riemannian_gradient(u, spec.p);
    result.el_residual = max_abs_entry(g) / volume;
    if (result.el_residual <= spec.tol) {
      result.converged = true;
      break;
    }
    if (result.iterations >= budget) break;

    VectorField direction = g;
    double slope = 0.0;
    if (spec.metric == DescentMetric::sobolev) {
      direction = detail::sobolev_direction(u, g, spec.p);
      slope = inner_product(g, direction);
    }
    if (!(slope > 0.0)) {
      direction = g;
      slope = inner_product(g, g);
    }
    ArmijoResult step =
        armijo_step(u, direction, slope, spec.p, spec.ls_beta, spec.ls_c, spec.objective);
    if (!step.accepted) {
      result.stagnated = true;
      break;
    }
    u = std::move(step.next);
    ++result.iterations;
    // Both energies are rounded; the accepted step is a decrease, so record
    // the smaller value to keep the trajectory monotone at roundoff level.
    result.energy_history.push_back(
        std::min(energy(u, spec.p), result.energy_history.back()));
  }
  return result;
}

Solution solve(const ProblemSpec& spec, const VectorField& init) {
  const auto start = std::chrono::steady_clock::now();
  spec.validate();
  require_admissible(init, spec);

  SolveReport report;
  report.problem = spec.problem;
  report.p = spec.p;
  report.m = spec.grid.nodes_per_axis();

  VectorField u = init;
  bool converged = false;
  double residual = 0.0;
  while (true) {
    const int budget = std::min(kRoundIterations, spec.max_iters - report.iterations);
    DescentResult descent = projected_gradient_descent(spec, u, budget);
    const auto& h = descent.energy_history;
    report.energy_history.insert(report.energy_history.end(),
                                 h.begin() + (report.energy_history.empty() ? 0 : 1), h.end());
    report.iterations += descent.iterations;
    u = std::move(descent.field);
    converged = descent.converged;
    residual = descent.el_residual;

    // Descent can settle slowly onto a critical point that still carries a
    // winding or a vortex pair, so a round that barely lowers the energy also
    // triggers the move. Moving while descent still makes progress can land
    // in a worse basin.
    const bool plateau = h.front() - h.back() <= kPlateau * h.front();
    if (spec.defect_moves && report.defect_moves < kMaxDefectMoves &&
        (converged || descent.stagnated || plateau)) {
      const std::optional<VectorField> unwound = remove_defects(u, spec);
      if (unwound && energy_difference(u, *unwound, spec.p) < 0.0) {
        u = *unwound;
        ++report.defect_moves;
        report.energy_history.push_back(
            std::min(energy(u, spec.p), report.energy_history.back()));
        converged = false;
        residual = stationarity(u, spec.p);
        if (report.iterations >= spec.max_iters) break;
        continue;
      }
    }
    if (converged || descent.stagnated || report.iterations >= spec.max_iters) break;
  }

  report.converged = converged;
  report.el_residual = residual;
  report.final_energy = energy(u, spec.p);
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return Solution{std::move(report), std::move(u)};
}

}  // namespace circlemap
