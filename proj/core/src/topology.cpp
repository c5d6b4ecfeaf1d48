#include "circlemap/topology.hpp"

#include <cmath>
#include <numbers>

#include "circlemap/error.hpp"
#include "sobolev.hpp"

namespace circlemap {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double a) { return a - kTwoPi * std::round(a / kTwoPi); }

// Boundary nodes in counterclockwise order starting at the origin.
std::vector<std::size_t> boundary_loop(const Grid& grid) {
  const int m = grid.nodes_per_axis();
  std::vector<std::size_t> loop;
  for (int i = 0; i < m; ++i) loop.push_back(grid.index(i, 0));
  for (int j = 1; j < m; ++j) loop.push_back(grid.index(m - 1, j));
  for (int i = m - 2; i >= 0; --i) loop.push_back(grid.index(i, m - 1));
  for (int j = m - 2; j >= 1; --j) loop.push_back(grid.index(0, j));
  return loop;
}

std::optional<VectorField> unwind_1d(const VectorField& u, const ProblemSpec& spec) {
  const int k = excess_winding_1d(u);
  if (k == 0) return std::nullopt;
  std::vector<double> theta = angle_lift_1d(u);
  const Grid& grid = u.grid();
  for (std::size_t i = 0; i < theta.size(); ++i) {
    theta[i] -= kTwoPi * k * grid.coordinate(static_cast<int>(i));
  }
  VectorField out = from_angle(grid, theta);
  apply_boundary(out, spec);
  return out;
}

std::optional<VectorField> unwind_2d(const VectorField& u) {
  const std::vector<Vortex> vortices = find_vortices(u);
  if (vortices.empty()) return std::nullopt;
  const Grid& grid = u.grid();
  const double h = grid.spacing();

  struct Center {
    double x, y;
    int q;
  };
  std::vector<Center> centers;
  for (const Vortex& v : vortices) {
    const auto [x, y] = grid.position(grid.cell_anchor(v.cell));
    centers.push_back({x + 0.5 * h, y + 0.5 * h, v.charge});
  }
  auto phase = [&](std::size_t node, std::size_t k) {
    const auto [x, y] = grid.position(node);
    return std::atan2(y - centers[k].y, x - centers[k].x);
  };
  auto total_phase = [&](std::size_t node) {
    double phi = 0.0;
    for (std::size_t k = 0; k < centers.size(); ++k) phi += centers[k].q * phase(node, k);
    return phi;
  };

  // A continuous branch of the phase along the boundary; it closes only when
  // the charges cancel.
  const std::vector<std::size_t> loop = boundary_loop(grid);
  std::vector<double> values(grid.node_count(), 0.0);
  double phi = total_phase(loop.front());
  values[loop.front()] = phi;
  for (std::size_t k = 1; k <= loop.size(); ++k) {
    const std::size_t prev = loop[k - 1];
    const std::size_t next = loop[k % loop.size()];
    for (std::size_t v = 0; v < centers.size(); ++v) {
      phi += centers[v].q * wrap(phase(next, v) - phase(prev, v));
    }
    if (k < loop.size()) values[next] = phi;
  }
  if (std::abs(phi - values[loop.front()]) > std::numbers::pi) return std::nullopt;

  const std::vector<double> harmonic = detail::harmonic_extension(grid, values);
  VectorField out = u;
  for (std::size_t n = 0; n < grid.node_count(); ++n) {
    if (grid.is_boundary(n)) continue;
    out[n] = rotate(u[n], -(total_phase(n) - harmonic[n]));
  }
  out = project_nodal(out);
  for (std::size_t n : grid.boundary_nodes()) out[n] = u[n];
  return out;
}

}  // namespace

int excess_winding_1d(const VectorField& u) {
  const std::vector<double> theta = angle_lift_1d(u);
  const double travelled = theta.back() - theta.front();
  const double shortest = angle_increment(u[0], u[u.size() - 1]);
  return static_cast<int>(std::lround((travelled - shortest) / kTwoPi));
}

std::vector<Vortex> find_vortices(const VectorField& u) {
  const Grid& grid = u.grid();
  if (grid.dim() != 2) {
    throw Error(ErrorCode::dimension_mismatch, "vortices are defined for 2D fields only");
  }
  std::vector<Vortex> out;
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const std::size_t a = grid.cell_anchor(c);
    const std::size_t b = grid.step(a, 0);
    const std::size_t d = grid.step(a, 1);
    const std::size_t e = grid.step(b, 1);
    const double turn = angle_increment(u[a], u[b]) + angle_increment(u[b], u[e]) +
                        angle_increment(u[e], u[d]) + angle_increment(u[d], u[a]);
    const int charge = static_cast<int>(std::lround(turn / kTwoPi));
    if (charge != 0) out.push_back({c, charge});
  }
  return out;
}

std::optional<VectorField> remove_defects(const VectorField& u, const ProblemSpec& spec) {
  if (!(u.grid() == spec.grid)) {
    throw Error(ErrorCode::grid_mismatch, "field grid does not match the problem grid");
  }
  return spec.grid.dim() == 1 ? unwind_1d(u, spec) : unwind_2d(u);
}

}  // namespace circlemap
