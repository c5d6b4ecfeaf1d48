#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "circlemap/field.hpp"

namespace circlemap {

// Discrete p-energy of a circle-valued field.
//
// Each cell contributes h^dim * (|Du|^2)^(p/2), where Du holds the forward
// differences from the cell's low-corner anchor node:
//   1D:  Du = (u(x_{i+1}) - u(x_i)) / h
//   2D:  d/dx1 along +x from (i,j), d/dx2 along +y from (i,j).
// Cells are visited in ascending order and summed with compensation, so the
// result is bit-reproducible.

/// Forward-difference gradient of u on one cell.
struct GradientSample {
  std::size_t cell = 0;
  /// partial[axis] = (du1/dx_axis, du2/dx_axis); only partial[0] is used in 1D.
  std::array<Vec2, 2> partial{};
  int axes = 1;

  double squared_norm() const noexcept {
    double s = 0.0;
    for (int a = 0; a < axes; ++a) s += circlemap::squared_norm(partial[a]);
    return s;
  }
  double frobenius() const noexcept { return std::sqrt(squared_norm()); }
  /// Matrix entries in the order (du1/dx1, du1/dx2, du2/dx1, du2/dx2);
  /// the x2 entries are zero in 1D.
  std::array<double, 4> entries() const noexcept {
    return {partial[0].u1, partial[1].u1, partial[0].u2, partial[1].u2};
  }
};

GradientSample gradient_sample(const VectorField& u, std::size_t cell);

/// Throws Error(unsupported_exponent) unless p >= 2.
void require_exponent(double p);

/// (|Du|^2)^(p/2) as a function of s = |Du|^2.
inline double integrand(double s, double p) {
  return p == 2.0 ? s : std::pow(s, 0.5 * p);
}

/// p * s^((p-2)/2): the factor multiplying Du in the derivative of the
/// integrand. Cells with s = 0 contribute nothing for p > 2.
inline double integrand_weight(double s, double p) {
  if (p == 2.0) return 2.0;
  return s > 0.0 ? p * std::pow(s, 0.5 * (p - 2.0)) : 0.0;
}

/// Discrete F (1D) or K (2D). Returns 0 exactly for constant fields.
double energy(const VectorField& u, double p);

/// energy(to) - energy(from), evaluated cell by cell from the nodal
/// displacements so that tiny changes are not lost to cancellation.
double energy_difference(const VectorField& from, const VectorField& to, double p);

/// Nodal gradient of the discrete energy. Boundary entries are exactly zero.
using EnergyGradient = VectorField;

/// Exact derivative of `energy` with respect to each interior nodal value.
EnergyGradient energy_gradient(const VectorField& u, double p);

/// Removes the component of g along u at every node: g - (g.u)u for unit u.
/// Computed as (g.t)t with t the unit tangent (u2, -u1)/|u|, which keeps the
/// result orthogonal to u to working precision.
VectorField tangential_part(const VectorField& u, const VectorField& g);

/// Tangential projection of energy_gradient. Requires unit_norm_defect <= 1e-8.
EnergyGradient riemannian_gradient(const VectorField& u, double p);

/// Derivative at tau = 0 of (u + tau v)/|u + tau v| for unit u: v - (u.v)u.
VectorField variation_direction(const VectorField& u, const VectorField& v);

/// energy(project_nodal(u + tau v)). v must vanish on the boundary.
double k_tau(const VectorField& u, const VectorField& v, double tau, double p);

/// Derivative of k_tau at 0, computed as the cell pairing
///   sum_cells h^dim * p |Du|^(p-2) * (Du : Dw),   w = variation_direction(u, v).
double dk_zero(const VectorField& u, const VectorField& v, double p);

}  // namespace circlemap
