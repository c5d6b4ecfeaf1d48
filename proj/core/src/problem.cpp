#include "circlemap/problem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "circlemap/energy.hpp"
#include "circlemap/error.hpp"

namespace circlemap {

std::string_view to_string(ProblemKind kind) noexcept {
  return kind == ProblemKind::a1 ? "a1" : "a2";
}

BoundaryData BoundaryData::a2_angles(std::vector<double> angles) {
  for (double a : angles) {
    if (!std::isfinite(a)) throw Error(ErrorCode::invalid_argument, "boundary angle is not finite");
  }
  return BoundaryData(Kind::a2_angles, std::move(angles));
}

std::vector<BoundaryPin> BoundaryData::pins(const Grid& grid) const {
  const auto& nodes = grid.boundary_nodes();
  std::vector<BoundaryPin> out;
  out.reserve(nodes.size());
  switch (kind_) {
    case Kind::a1_endpoints:
      if (grid.dim() != 1) {
        throw Error(ErrorCode::dimension_mismatch, "A1 endpoint data needs a 1D grid");
      }
      out.push_back({nodes.front(), {0.0, 1.0}});
      out.push_back({nodes.back(), {1.0, 0.0}});
      break;
    case Kind::a2_constant:
      if (grid.dim() != 2) {
        throw Error(ErrorCode::dimension_mismatch, "A2 boundary data needs a 2D grid");
      }
      for (std::size_t n : nodes) out.push_back({n, {0.0, 1.0}});
      break;
    case Kind::a2_angles:
      if (grid.dim() != 2) {
        throw Error(ErrorCode::dimension_mismatch, "A2 boundary data needs a 2D grid");
      }
      if (angles_.size() != nodes.size()) {
        throw Error(ErrorCode::invalid_argument,
                    "expected " + std::to_string(nodes.size()) + " boundary angles, got " +
                        std::to_string(angles_.size()));
      }
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        out.push_back({nodes[k], from_angle(angles_[k])});
      }
      break;
  }
  return out;
}

void ProblemSpec::validate() const {
  require_exponent(p);
  const int want_dim = problem == ProblemKind::a1 ? 1 : 2;
  if (grid.dim() != want_dim) {
    throw Error(ErrorCode::dimension_mismatch,
                std::string("problem ") + std::string(to_string(problem)) + " needs a " +
                    std::to_string(want_dim) + "D grid");
  }
  const bool boundary_fits = problem == ProblemKind::a1
                                 ? boundary.kind() == BoundaryData::Kind::a1_endpoints
                                 : boundary.kind() != BoundaryData::Kind::a1_endpoints;
  if (!boundary_fits) {
    throw Error(ErrorCode::invalid_argument, "boundary data does not match the problem");
  }
  (void)boundary.pins(grid);
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "tol must be positive");
  if (max_iters < 0) throw Error(ErrorCode::invalid_argument, "max_iters must be non-negative");
  if (!(ls_beta > 0.0 && ls_beta < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "ls_beta must lie in (0, 1)");
  }
  if (!(ls_c > 0.0 && ls_c < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "ls_c must lie in (0, 1)");
  }
}

ProblemSpec make_a1_spec(int m, double p) {
  ProblemSpec spec;
  spec.problem = ProblemKind::a1;
  spec.p = p;
  spec.grid = Grid(1, m);
  spec.boundary = BoundaryData::a1_endpoints();
  spec.validate();
  return spec;
}

ProblemSpec make_a2_spec(int m, double p) {
  ProblemSpec spec;
  spec.problem = ProblemKind::a2;
  spec.p = p;
  spec.grid = Grid(2, m);
  spec.boundary = BoundaryData::a2_constant();
  spec.validate();
  return spec;
}

ConstraintReport check_admissible(const VectorField& u, const ProblemSpec& spec) {
  if (!(u.grid() == spec.grid)) {
    throw Error(ErrorCode::grid_mismatch, "field grid differs from the problem grid");
  }
  ConstraintReport report;
  report.unit_norm_defect = unit_norm_defect(u);
  for (const BoundaryPin& pin : spec.boundary.pins(spec.grid)) {
    report.boundary_defect = std::max(report.boundary_defect, norm(u[pin.node] - pin.value));
  }
  report.admissible = report.unit_norm_defect <= kAdmissibleTolerance &&
                      report.boundary_defect <= kAdmissibleTolerance;
  return report;
}

VectorField make_geodesic_1d(const Grid& grid) {
  if (grid.dim() != 1) {
    throw Error(ErrorCode::dimension_mismatch, "the geodesic witness needs a 1D grid");
  }
  VectorField u(grid);
  const int m = grid.nodes_per_axis();
  for (int i = 0; i < m; ++i) {
    u[grid.index(i)] = from_angle(0.5 * std::numbers::pi * grid.coordinate(i));
  }
  // cos(pi/2) is 6e-17 in floating point; pin both ends exactly.
  u[0] = {0.0, 1.0};
  u[grid.index(m - 1)] = {1.0, 0.0};
  return u;
}

VectorField make_constant_2d(const Grid& grid) {
  if (grid.dim() != 2) {
    throw Error(ErrorCode::dimension_mismatch, "the constant witness needs a 2D grid");
  }
  return VectorField(grid, std::vector<Vec2>(grid.node_count(), Vec2{0.0, 1.0}));
}

void apply_boundary(VectorField& u, const ProblemSpec& spec) {
  for (const BoundaryPin& pin : spec.boundary.pins(u.grid())) u[pin.node] = pin.value;
}

VectorField make_random_admissible(const ProblemSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  VectorField u(spec.grid);
  for (std::size_t n = 0; n < u.size(); ++n) {
    if (spec.grid.is_boundary(n)) continue;
    // 53 random bits mapped onto [0, 1); independent of the standard
    // library's distribution implementation.
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * unit;
    u[n] = from_angle(theta);
  }
  apply_boundary(u, spec);
  return u;
}

}  // namespace circlemap
