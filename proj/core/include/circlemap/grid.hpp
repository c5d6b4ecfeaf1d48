#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace circlemap {

/// Uniform grid on ]0,1[ (dim 1) or ]0,1[^2 (dim 2) with m nodes per axis.
///
/// Nodes are numbered row-major in 2D: node (i, j) sits at (x_i, y_j) and has
/// index j*m + i, so x varies fastest. Cells are the m-1 intervals (1D) or the
/// (m-1)^2 squares (2D); cell (ci, cj) is anchored at its low corner node and
/// numbered cj*(m-1) + ci.
class Grid {
 public:
  /// Throws Error(invalid_grid) unless dim is 1 or 2 and m >= 3.
  Grid(int dim, int nodes_per_axis);

  int dim() const noexcept { return dim_; }
  int nodes_per_axis() const noexcept { return m_; }
  double spacing() const noexcept { return h_; }
  /// h^dim, the quadrature weight of one cell.
  double cell_volume() const noexcept { return dim_ == 1 ? h_ : h_ * h_; }

  std::size_t node_count() const noexcept;
  std::size_t cell_count() const noexcept;

  std::size_t index(int i, int j = 0) const noexcept {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(i);
  }
  /// Per-axis integer coordinates (i, j) of a node; j = 0 in 1D.
  std::array<int, 2> coords(std::size_t node) const noexcept;
  /// Coordinate i/(m-1) along one axis; exactly 0 and 1 at the ends.
  double coordinate(int i) const noexcept;
  std::array<double, 2> position(std::size_t node) const noexcept;

  bool is_boundary(std::size_t node) const noexcept;
  /// Boundary node indices in ascending order.
  const std::vector<std::size_t>& boundary_nodes() const noexcept { return boundary_; }

  std::size_t cell_anchor(std::size_t cell) const noexcept;
  /// The node one step along `axis` (0 = x, 1 = y) from `node`.
  std::size_t step(std::size_t node, int axis) const noexcept {
    return axis == 0 ? node + 1 : node + static_cast<std::size_t>(m_);
  }

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.dim_ == b.dim_ && a.m_ == b.m_;
  }

 private:
  int dim_;
  int m_;
  double h_;
  std::vector<std::size_t> boundary_;
};

inline Grid build_grid(int dim, int m) { return Grid(dim, m); }

}  // namespace circlemap
