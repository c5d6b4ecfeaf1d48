#include "circlemap/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circlemap/error.hpp"

namespace circlemap {

VectorField::VectorField(Grid grid) : grid_(std::move(grid)), values_(grid_.node_count()) {}

VectorField::VectorField(Grid grid, std::vector<Vec2> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.node_count()) {
    throw Error(ErrorCode::invalid_argument,
                "field has " + std::to_string(values_.size()) + " values but the grid has " +
                    std::to_string(grid_.node_count()) + " nodes");
  }
  for (std::size_t n = 0; n < values_.size(); ++n) {
    if (!std::isfinite(values_[n].u1) || !std::isfinite(values_[n].u2)) {
      throw Error(ErrorCode::invalid_argument, "non-finite value at node " + std::to_string(n));
    }
  }
}

double unit_norm_defect(const VectorField& u) {
  double worst = 0.0;
  for (const Vec2& v : u.values()) worst = std::max(worst, std::abs(norm(v) - 1.0));
  return worst;
}

void require_unit_norm(const VectorField& u, double tolerance) {
  const double defect = unit_norm_defect(u);
  if (!(defect <= tolerance)) {
    throw Error(ErrorCode::constraint_violation,
                "field is not on the unit circle (defect " + std::to_string(defect) + ")");
  }
}

void require_same_grid(const VectorField& a, const VectorField& b) {
  if (!(a.grid() == b.grid())) {
    throw Error(ErrorCode::grid_mismatch, "fields live on different grids");
  }
}

double max_node_distance(const VectorField& a, const VectorField& b) {
  require_same_grid(a, b);
  double worst = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) worst = std::max(worst, norm(a[n] - b[n]));
  return worst;
}

VectorField project_nodal(const VectorField& u) {
  VectorField out(u.grid());
  for (std::size_t n = 0; n < u.size(); ++n) {
    const double r = norm(u[n]);
    if (r <= 1e-15) {
      throw Error(ErrorCode::degenerate_node,
                  "cannot normalize node " + std::to_string(n) + " with norm " + std::to_string(r));
    }
    out[n] = u[n] / r;
  }
  return out;
}

VectorField from_angle(const Grid& grid, std::span<const double> theta) {
  if (theta.size() != grid.node_count()) {
    throw Error(ErrorCode::invalid_argument, "angle count does not match the grid");
  }
  std::vector<Vec2> values(theta.size());
  std::transform(theta.begin(), theta.end(), values.begin(),
                 [](double t) { return from_angle(t); });
  return VectorField(grid, std::move(values));
}

std::vector<double> angle_lift_1d(const VectorField& u) {
  if (u.grid().dim() != 1) {
    throw Error(ErrorCode::dimension_mismatch, "angle lift needs a 1D field");
  }
  require_unit_norm(u, kUnitNormTolerance);
  std::vector<double> theta(u.size());
  theta[0] = std::atan2(u[0].u1, u[0].u2);
  for (std::size_t n = 1; n < u.size(); ++n) {
    theta[n] = theta[n - 1] + angle_increment(u[n - 1], u[n]);
  }
  return theta;
}

VectorField axpy(const VectorField& a, double s, const VectorField& b) {
  require_same_grid(a, b);
  VectorField out(a.grid());
  for (std::size_t n = 0; n < a.size(); ++n) out[n] = a[n] + s * b[n];
  return out;
}

}  // namespace circlemap
