#include "circlemap/grid.hpp"

#include <string>

#include "circlemap/error.hpp"

namespace circlemap {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_grid: return "invalid-grid";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::grid_mismatch: return "grid-mismatch";
    case ErrorCode::degenerate_node: return "degenerate-node";
    case ErrorCode::constraint_violation: return "constraint-violation";
    case ErrorCode::unsupported_exponent: return "unsupported-exponent";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::domain_error: return "domain-error";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

Grid::Grid(int dim, int nodes_per_axis) : dim_(dim), m_(nodes_per_axis) {
  if (dim != 1 && dim != 2) {
    throw Error(ErrorCode::invalid_grid, "grid dimension must be 1 or 2, got " + std::to_string(dim));
  }
  if (nodes_per_axis < 3) {
    throw Error(ErrorCode::invalid_grid,
                "grid needs at least 3 nodes per axis, got " + std::to_string(nodes_per_axis));
  }
  h_ = 1.0 / static_cast<double>(m_ - 1);

  if (dim_ == 1) {
    boundary_ = {0, static_cast<std::size_t>(m_ - 1)};
  } else {
    boundary_.reserve(4 * static_cast<std::size_t>(m_ - 1));
    for (std::size_t n = 0; n < node_count(); ++n) {
      if (is_boundary(n)) boundary_.push_back(n);
    }
  }
}

std::size_t Grid::node_count() const noexcept {
  const auto m = static_cast<std::size_t>(m_);
  return dim_ == 1 ? m : m * m;
}

std::size_t Grid::cell_count() const noexcept {
  const auto c = static_cast<std::size_t>(m_ - 1);
  return dim_ == 1 ? c : c * c;
}

std::array<int, 2> Grid::coords(std::size_t node) const noexcept {
  const auto m = static_cast<std::size_t>(m_);
  if (dim_ == 1) return {static_cast<int>(node), 0};
  return {static_cast<int>(node % m), static_cast<int>(node / m)};
}

double Grid::coordinate(int i) const noexcept {
  return static_cast<double>(i) / static_cast<double>(m_ - 1);
}

std::array<double, 2> Grid::position(std::size_t node) const noexcept {
  const auto [i, j] = coords(node);
  return {coordinate(i), dim_ == 1 ? 0.0 : coordinate(j)};
}

bool Grid::is_boundary(std::size_t node) const noexcept {
  const auto [i, j] = coords(node);
  const bool on_x = i == 0 || i == m_ - 1;
  if (dim_ == 1) return on_x;
  return on_x || j == 0 || j == m_ - 1;
}

std::size_t Grid::cell_anchor(std::size_t cell) const noexcept {
  if (dim_ == 1) return cell;
  const auto c = static_cast<std::size_t>(m_ - 1);
  return index(static_cast<int>(cell % c), static_cast<int>(cell / c));
}

}  // namespace circlemap
