#include "sobolev.hpp"

#include <cmath>
#include <cstddef>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "circlemap/energy.hpp"
#include "circlemap/error.hpp"

namespace circlemap::detail {
namespace {

using SparseMatrix = Eigen::SparseMatrix<double>;

// Interior block of sum_edges w (e_a - e_b)(e_a - e_b)^T together with the
// couplings needed to move known boundary values to the right-hand side.
struct InteriorSystem {
  std::vector<long> slot;  // node -> unknown index, -1 on the boundary
  long unknowns = 0;
  SparseMatrix matrix;
  Eigen::SimplicialLDLT<SparseMatrix> factor;
};

template <typename EdgeWeight>
void assemble(const Grid& grid, EdgeWeight&& weight_of_cell, InteriorSystem& sys) {
  sys.slot.assign(grid.node_count(), -1);
  for (std::size_t n = 0; n < grid.node_count(); ++n) {
    if (!grid.is_boundary(n)) sys.slot[n] = sys.unknowns++;
  }
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(grid.cell_count() * static_cast<std::size_t>(4 * grid.dim()));
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const double w = weight_of_cell(c);
    const std::size_t a = grid.cell_anchor(c);
    for (int axis = 0; axis < grid.dim(); ++axis) {
      const std::size_t b = grid.step(a, axis);
      const long sa = sys.slot[a];
      const long sb = sys.slot[b];
      if (sa >= 0) triplets.emplace_back(sa, sa, w);
      if (sb >= 0) triplets.emplace_back(sb, sb, w);
      if (sa >= 0 && sb >= 0) {
        triplets.emplace_back(sa, sb, -w);
        triplets.emplace_back(sb, sa, -w);
      }
    }
  }
  sys.matrix.resize(sys.unknowns, sys.unknowns);
  sys.matrix.setFromTriplets(triplets.begin(), triplets.end());
  sys.factor.compute(sys.matrix);
  if (sys.factor.info() != Eigen::Success) {
    throw Error(ErrorCode::domain_error, "interior Laplacian factorization failed");
  }
}

}  // namespace

VectorField sobolev_direction(const VectorField& u, const VectorField& g_tan, double p) {
  require_same_grid(u, g_tan);
  const Grid& grid = u.grid();

  std::vector<double> s(grid.cell_count());
  double mean = 0.0;
  for (std::size_t c = 0; c < s.size(); ++c) {
    s[c] = gradient_sample(u, c).squared_norm();
    mean += s[c];
  }
  mean /= static_cast<double>(s.size());
  const double sigma = 1e-3 * mean + 1e-12;
  const double scale = std::pow(grid.spacing(), grid.dim() - 2);

  InteriorSystem sys;
  assemble(
      grid,
      [&](std::size_t c) {
        return p == 2.0 ? 2.0 * scale : scale * p * std::pow(s[c] + sigma, 0.5 * (p - 2.0));
      },
      sys);

  Eigen::MatrixXd rhs(sys.unknowns, 2);
  for (std::size_t n = 0; n < grid.node_count(); ++n) {
    if (sys.slot[n] < 0) continue;
    rhs(sys.slot[n], 0) = g_tan[n].u1;
    rhs(sys.slot[n], 1) = g_tan[n].u2;
  }
  const Eigen::MatrixXd x = sys.factor.solve(rhs);

  VectorField d(grid);
  for (std::size_t n = 0; n < grid.node_count(); ++n) {
    if (sys.slot[n] < 0) continue;
    d[n] = {x(sys.slot[n], 0), x(sys.slot[n], 1)};
  }
  return tangential_part(u, d);
}

std::vector<double> harmonic_extension(const Grid& grid, std::span<const double> values) {
  if (values.size() != grid.node_count()) {
    throw Error(ErrorCode::invalid_argument, "boundary value count does not match the grid");
  }
  InteriorSystem sys;
  assemble(grid, [](std::size_t) { return 1.0; }, sys);

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(sys.unknowns);
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const std::size_t a = grid.cell_anchor(c);
    for (int axis = 0; axis < grid.dim(); ++axis) {
      const std::size_t b = grid.step(a, axis);
      if (sys.slot[a] >= 0 && sys.slot[b] < 0) rhs(sys.slot[a]) += values[b];
      if (sys.slot[b] >= 0 && sys.slot[a] < 0) rhs(sys.slot[b]) += values[a];
    }
  }
  const Eigen::VectorXd x = sys.factor.solve(rhs);

  std::vector<double> out(values.begin(), values.end());
  for (std::size_t n = 0; n < grid.node_count(); ++n) {
    if (sys.slot[n] >= 0) out[n] = x(sys.slot[n]);
  }
  return out;
}

}  // namespace circlemap::detail
