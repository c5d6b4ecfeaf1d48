#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "circlemap/energy.hpp"
#include "circlemap/error.hpp"
#include "circlemap/topology.hpp"

namespace circlemap {
namespace {

constexpr double kPi = std::numbers::pi;

VectorField wound_path(const Grid& g, int k) {
  std::vector<double> theta(g.node_count());
  for (int i = 0; i < g.nodes_per_axis(); ++i) {
    theta[i] = (0.5 * kPi + 2.0 * kPi * k) * g.coordinate(i);
  }
  VectorField u = from_angle(g, theta);
  u[0] = {0.0, 1.0};
  u[g.node_count() - 1] = {1.0, 0.0};
  return u;
}

// u = (sin t, cos t) with t = sum_k q_k arg(x - c_k).
VectorField vortex_field(const Grid& g, const std::vector<std::array<double, 3>>& charges) {
  std::vector<double> theta(g.node_count(), 0.0);
  for (std::size_t n = 0; n < theta.size(); ++n) {
    const auto [x, y] = g.position(n);
    for (const auto& [cx, cy, q] : charges) theta[n] += q * std::atan2(y - cy, x - cx);
  }
  return from_angle(g, theta);
}

ProblemSpec boundary_of(const VectorField& u) {
  const Grid& g = u.grid();
  ProblemSpec spec = make_a2_spec(g.nodes_per_axis(), 2.0);
  std::vector<double> angles;
  for (std::size_t n : g.boundary_nodes()) angles.push_back(std::atan2(u[n].u1, u[n].u2));
  spec.boundary = BoundaryData::a2_angles(angles);
  spec.validate();
  return spec;
}

TEST(Winding, GeodesicHasNone) {
  EXPECT_EQ(excess_winding_1d(make_geodesic_1d(Grid(1, 51))), 0);
}

TEST(Winding, CountsExtraTurns) {
  const Grid g(1, 201);
  for (int k = -3; k <= 3; ++k) EXPECT_EQ(excess_winding_1d(wound_path(g, k)), k) << k;
}

TEST(Winding, RemovalRestoresTheGeodesic) {
  const ProblemSpec spec = make_a1_spec(201, 2.0);
  for (int k : {-2, -1, 1, 2}) {
    const VectorField u = wound_path(spec.grid, k);
    const auto fixed = remove_defects(u, spec);
    ASSERT_TRUE(fixed.has_value());
    EXPECT_LE(max_node_distance(*fixed, make_geodesic_1d(spec.grid)), 1e-12);
    EXPECT_TRUE(check_admissible(*fixed, spec).admissible);
    EXPECT_LT(energy(*fixed, 2.0), energy(u, 2.0));
  }
  EXPECT_FALSE(remove_defects(make_geodesic_1d(spec.grid), spec).has_value());
}

TEST(Vortices, ConstantFieldHasNone) {
  EXPECT_TRUE(find_vortices(make_constant_2d(Grid(2, 9))).empty());
  EXPECT_THROW(find_vortices(make_geodesic_1d(Grid(1, 9))), Error);
}

TEST(Vortices, LocatesSingleCharges) {
  const Grid g(2, 11);
  for (double q : {1.0, -1.0}) {
    const VectorField u = vortex_field(g, {{0.33, 0.52, q}});
    const std::vector<Vortex> v = find_vortices(u);
    ASSERT_EQ(v.size(), 1u) << q;
    EXPECT_EQ(v[0].charge, static_cast<int>(q));
    // (0.33, 0.52) lies in cell (3, 5).
    EXPECT_EQ(v[0].cell, 5u * 10u + 3u);
  }
}

TEST(Vortices, PairIsRemovedWithBoundaryKept) {
  const Grid g(2, 31);
  const VectorField u = vortex_field(g, {{0.31, 0.5, 1.0}, {0.69, 0.52, -1.0}});
  ASSERT_EQ(find_vortices(u).size(), 2u);
  const ProblemSpec spec = boundary_of(u);
  ASSERT_TRUE(check_admissible(u, spec).admissible);

  const auto fixed = remove_defects(u, spec);
  ASSERT_TRUE(fixed.has_value());
  EXPECT_TRUE(find_vortices(*fixed).empty());
  for (std::size_t n : g.boundary_nodes()) EXPECT_EQ((*fixed)[n], u[n]);
  EXPECT_TRUE(check_admissible(*fixed, spec).admissible);
  EXPECT_LT(energy(*fixed, 2.0), energy(u, 2.0));
}

TEST(Vortices, UnbalancedChargeHasNoCorrection) {
  const Grid g(2, 15);
  const VectorField u = vortex_field(g, {{0.5, 0.5, 1.0}});
  EXPECT_FALSE(remove_defects(u, boundary_of(u)).has_value());
}

}  // namespace
}  // namespace circlemap
