#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "circlemap/field.hpp"
#include "circlemap/problem.hpp"

namespace circlemap {

// Topological defects of discrete circle-valued fields.
//
// Retracted descent cannot change the homotopy class of a smooth iterate, so a
// rough start can settle into a stationary field that winds around the circle
// (1D) or carries vortices (2D). These helpers detect such defects and build a
// defect-free competitor with the same boundary values.

/// Whole turns by which the lifted path from u(0) to u(1) exceeds the shortest
/// arc between the two boundary values.
int excess_winding_1d(const VectorField& u);

struct Vortex {
  /// Cell whose boundary loop carries the winding.
  std::size_t cell = 0;
  /// Winding number of u around the loop (counterclockwise).
  int charge = 0;
};

/// Cells with nonzero winding, ascending by cell.
std::vector<Vortex> find_vortices(const VectorField& u);

/// A field with the same boundary values and no winding/vortex defects, or
/// nullopt when u is already defect-free (or, in 2D, the vortex charges do not
/// cancel so no single-valued correction exists).
///
/// 1D: subtracts 2*pi*k*x from the lifted angle.
/// 2D: rotates each interior node by -(Phi - H), where Phi = sum q*arg(x - x_v)
/// over the vortices and H is the discrete harmonic function matching Phi on
/// the boundary.
std::optional<VectorField> remove_defects(const VectorField& u, const ProblemSpec& spec);

}  // namespace circlemap
