#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "circlemap/grid.hpp"
#include "circlemap/vec2.hpp"

namespace circlemap {

/// Nodal samples of u = (u1, u2) on a grid. All entries are finite.
class VectorField {
 public:
  /// Zero field.
  explicit VectorField(Grid grid);
  /// Throws Error(invalid_argument) on a length mismatch or a non-finite entry.
  VectorField(Grid grid, std::vector<Vec2> values);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  const Vec2& operator[](std::size_t node) const noexcept { return values_[node]; }
  Vec2& operator[](std::size_t node) noexcept { return values_[node]; }

  std::span<const Vec2> values() const noexcept { return values_; }
  std::span<Vec2> values() noexcept { return values_; }

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  Grid grid_;
  std::vector<Vec2> values_;
};

/// Tolerance on the unit-norm defect for operations that assume a field on
/// the circle but do not need exact admissibility.
inline constexpr double kUnitNormTolerance = 1e-8;

/// Largest nodal deviation | |u(node)| - 1 |.
double unit_norm_defect(const VectorField& u);

/// Throws Error(constraint_violation) when unit_norm_defect(u) > tolerance.
void require_unit_norm(const VectorField& u, double tolerance);

/// Throws Error(grid_mismatch) when the two fields live on different grids.
void require_same_grid(const VectorField& a, const VectorField& b);

/// Largest Euclidean distance |a(node) - b(node)| over all nodes.
double max_node_distance(const VectorField& a, const VectorField& b);

/// Divides each node by its Euclidean norm. Nodes with norm <= 1e-15 raise
/// Error(degenerate_node).
VectorField project_nodal(const VectorField& u);

/// Field with u(node) = (sin theta, cos theta).
VectorField from_angle(const Grid& grid, std::span<const double> theta);

/// Angles theta_i with (sin theta_i, cos theta_i) = u(x_i), unwrapped so that
/// consecutive increments lie in (-pi, pi]. Requires a 1D unit-norm field.
std::vector<double> angle_lift_1d(const VectorField& u);

/// a + s*b, nodewise.
VectorField axpy(const VectorField& a, double s, const VectorField& b);

}  // namespace circlemap
