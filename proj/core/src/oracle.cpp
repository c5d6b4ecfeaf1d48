#include "circlemap/oracle.hpp"

#include <cmath>
#include <numbers>

#include "circlemap/compensated_sum.hpp"
#include "circlemap/energy.hpp"
#include "circlemap/error.hpp"

namespace circlemap {
namespace {

constexpr int kPolishSteps = 20;

// d/dtheta_i of h * sum |(theta_{k+1} - theta_k)/h|^p, zero at the pinned ends.
std::vector<double> lifted_gradient(const Grid& grid, const std::vector<double>& theta,
                                    double p) {
  const double h = grid.spacing();
  std::vector<double> g(theta.size(), 0.0);
  for (std::size_t k = 0; k + 1 < theta.size(); ++k) {
    const double s = (theta[k + 1] - theta[k]) / h;
    const double flux = p * std::pow(std::abs(s), p - 1.0) * (s < 0.0 ? -1.0 : 1.0);
    g[k + 1] += flux;
    g[k] -= flux;
  }
  g.front() = 0.0;
  g.back() = 0.0;
  return g;
}

}  // namespace

double lifted_energy(const Grid& grid, const std::vector<double>& theta, double p) {
  require_exponent(p);
  if (grid.dim() != 1 || theta.size() != grid.node_count()) {
    throw Error(ErrorCode::dimension_mismatch, "lifted energy needs one angle per 1D node");
  }
  const double h = grid.spacing();
  CompensatedSum total;
  for (std::size_t k = 0; k + 1 < theta.size(); ++k) {
    total += h * std::pow(std::abs((theta[k + 1] - theta[k]) / h), p);
  }
  return total.value();
}

AngleLiftSolution angle_lift_solve_1d(const ProblemSpec& spec) {
  if (spec.problem != ProblemKind::a1) {
    throw Error(ErrorCode::invalid_argument, "the angle-lift oracle solves A1 only");
  }
  spec.validate();
  const Grid& grid = spec.grid;

  std::vector<double> theta(grid.node_count());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    theta[i] = 0.5 * std::numbers::pi * grid.coordinate(static_cast<int>(i));
  }
  const double start = lifted_energy(grid, theta, spec.p);

  // Backtracking gradient steps; any accepted step would expose a
  // non-optimal starting point.
  double current = start;
  for (int step = 0; step < kPolishSteps; ++step) {
    const std::vector<double> g = lifted_gradient(grid, theta, spec.p);
    double g2 = 0.0;
    for (double x : g) g2 += x * x;
    if (g2 == 0.0) break;
    bool accepted = false;
    std::vector<double> trial(theta.size());
    for (double t = grid.spacing(); t > 1e-16; t *= 0.5) {
      for (std::size_t i = 0; i < theta.size(); ++i) trial[i] = theta[i] - t * g[i];
      const double e = lifted_energy(grid, trial, spec.p);
      if (e < current - spec.ls_c * t * g2) {
        theta = trial;
        current = e;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }

  VectorField field = from_angle(grid, theta);
  apply_boundary(field, spec);
  const double circle_energy = energy(field, spec.p);
  return AngleLiftSolution{std::move(theta), std::move(field), current, circle_energy,
                           start - current};
}

}  // namespace circlemap
