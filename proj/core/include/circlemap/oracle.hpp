#pragma once

#include <vector>

#include "circlemap/field.hpp"
#include "circlemap/problem.hpp"

namespace circlemap {

/// Lifted 1D energy h * sum |(theta_{i+1} - theta_i)/h|^p.
double lifted_energy(const Grid& grid, const std::vector<double>& theta, double p);

struct AngleLiftSolution {
  std::vector<double> theta;
  VectorField field;
  /// Lifted energy of theta; (pi/2)^p for the exact minimizer.
  double lifted_energy = 0.0;
  /// Discrete circle energy of `field`.
  double energy = 0.0;
  /// Total lifted-energy decrease the polish managed to find (expected ~0).
  double polish_decrease = 0.0;
};

/// Independent solution of A1 through the angle lift: the lifted problem
/// min sum h|dtheta/h|^p with theta(0) = 0, theta(1) = pi/2 is strictly convex
/// and solved by the linear interpolant theta_i = pi x_i / 2. A few
/// backtracking gradient steps on the lifted energy confirm that no descent
/// is left. Throws Error(invalid_argument) unless spec.problem is A1.
AngleLiftSolution angle_lift_solve_1d(const ProblemSpec& spec);

}  // namespace circlemap
