#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "circlemap/field.hpp"
#include "circlemap/grid.hpp"
#include "circlemap/vec2.hpp"

namespace circlemap {

/// A1: maps ]0,1[ -> S^1 pinned at u(0) = (0,1), u(1) = (1,0).
/// A2: maps ]0,1[^2 -> S^1 with prescribed values on the boundary.
enum class ProblemKind { a1, a2 };

std::string_view to_string(ProblemKind kind) noexcept;

/// A boundary node together with its prescribed value.
struct BoundaryPin {
  std::size_t node = 0;
  Vec2 value;
};

/// Dirichlet data. General 2D data is an angle per boundary node so that the
/// induced values (sin g, cos g) are unit vectors by construction.
class BoundaryData {
 public:
  enum class Kind { a1_endpoints, a2_constant, a2_angles };

  static BoundaryData a1_endpoints() { return BoundaryData(Kind::a1_endpoints, {}); }
  static BoundaryData a2_constant() { return BoundaryData(Kind::a2_constant, {}); }
  /// One angle per entry of grid.boundary_nodes(), in that order. Throws
  /// Error(invalid_argument) for non-finite angles.
  static BoundaryData a2_angles(std::vector<double> angles);

  Kind kind() const noexcept { return kind_; }
  const std::vector<double>& angles() const noexcept { return angles_; }

  /// Prescribed values on every boundary node of `grid`, ascending by node.
  /// Throws Error(dimension_mismatch) when the kind does not fit the grid and
  /// Error(invalid_argument) when the angle count differs from the boundary size.
  std::vector<BoundaryPin> pins(const Grid& grid) const;

 private:
  BoundaryData(Kind kind, std::vector<double> angles)
      : kind_(kind), angles_(std::move(angles)) {}

  Kind kind_;
  std::vector<double> angles_;
};

/// Geometry of the search direction used by the retracted descent.
enum class DescentMetric {
  /// Tangential Euclidean gradient of the nodal energy.
  euclidean,
  /// Tangential gradient preconditioned by the weighted discrete Laplacian.
  sobolev,
};

/// Which monotone transform of the energy the line search measures.
enum class Objective { energy, energy_root };

struct ProblemSpec {
  ProblemKind problem = ProblemKind::a1;
  double p = 2.0;
  Grid grid{1, 101};
  BoundaryData boundary = BoundaryData::a1_endpoints();
  double tol = 1e-6;
  int max_iters = 50000;
  double ls_beta = 0.5;
  double ls_c = 1e-4;
  std::uint64_t seed = 0;
  DescentMetric metric = DescentMetric::sobolev;
  Objective objective = Objective::energy;
  /// Allow winding/vortex removal moves between descent rounds.
  bool defect_moves = true;

  /// Throws Error with a diagnostic for the first violated invariant.
  void validate() const;
};

/// A validated spec for A1 on an m-node grid with default optimizer settings.
ProblemSpec make_a1_spec(int m, double p);
/// A validated spec for A2 with constant boundary (0,1) on an m x m grid.
ProblemSpec make_a2_spec(int m, double p);

struct ConstraintReport {
  double unit_norm_defect = 0.0;
  double boundary_defect = 0.0;
  bool admissible = false;
};

/// Tolerance below which nodal constraints count as exactly satisfied.
inline constexpr double kAdmissibleTolerance = 1e-12;

ConstraintReport check_admissible(const VectorField& u, const ProblemSpec& spec);

/// u(x) = (sin(pi x / 2), cos(pi x / 2)); endpoints exact.
VectorField make_geodesic_1d(const Grid& grid);

/// u = (0, 1) everywhere.
VectorField make_constant_2d(const Grid& grid);

/// Boundary nodes carry exact boundary data; interior nodes carry
/// (sin t, cos t) with t uniform in [-pi, pi) drawn from spec.seed.
VectorField make_random_admissible(const ProblemSpec& spec);

/// Overwrites the boundary nodes of `u` with the exact boundary data.
void apply_boundary(VectorField& u, const ProblemSpec& spec);

}  // namespace circlemap
