#include "circlemap/energy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "circlemap/compensated_sum.hpp"
#include "circlemap/error.hpp"

namespace circlemap {
namespace {

// Change of s^(p/2) when s moves from s_old by ds, without forming the two
// powers separately.
double integrand_change(double s_old, double ds, double p) {
  if (p == 2.0) return ds;
  if (s_old > 0.0) {
    const double ratio = std::max(ds / s_old, -1.0);
    return std::pow(s_old, 0.5 * p) * std::expm1(0.5 * p * std::log1p(ratio));
  }
  return std::pow(std::max(ds, 0.0), 0.5 * p);
}

void require_zero_boundary(const VectorField& v) {
  for (std::size_t n : v.grid().boundary_nodes()) {
    if (v[n].u1 != 0.0 || v[n].u2 != 0.0) {
      throw Error(ErrorCode::invalid_argument,
                  "test direction must vanish on the boundary (node " + std::to_string(n) + ")");
    }
  }
}

}  // namespace

void require_exponent(double p) {
  if (!(p >= 2.0) || !std::isfinite(p)) {
    char got[32];
    std::snprintf(got, sizeof got, "%g", p);
    throw Error(ErrorCode::unsupported_exponent, std::string("p must be ≥ 2 (got ") + got + ")");
  }
}

GradientSample gradient_sample(const VectorField& u, std::size_t cell) {
  const Grid& grid = u.grid();
  const double h = grid.spacing();
  const std::size_t anchor = grid.cell_anchor(cell);
  GradientSample sample;
  sample.cell = cell;
  sample.axes = grid.dim();
  for (int axis = 0; axis < sample.axes; ++axis) {
    sample.partial[axis] = (u[grid.step(anchor, axis)] - u[anchor]) / h;
  }
  return sample;
}

double energy(const VectorField& u, double p) {
  require_exponent(p);
  const Grid& grid = u.grid();
  const double volume = grid.cell_volume();
  CompensatedSum total;
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    total += volume * integrand(gradient_sample(u, c).squared_norm(), p);
  }
  return total.value();
}

double energy_difference(const VectorField& from, const VectorField& to, double p) {
  require_exponent(p);
  require_same_grid(from, to);
  const Grid& grid = from.grid();
  const double volume = grid.cell_volume();

  VectorField displacement(grid);
  for (std::size_t n = 0; n < from.size(); ++n) displacement[n] = to[n] - from[n];

  CompensatedSum total;
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const GradientSample a = gradient_sample(from, c);
    const GradientSample e = gradient_sample(displacement, c);
    // |a + e|^2 - |a|^2 = e . (2a + e)
    double ds = 0.0;
    for (int axis = 0; axis < a.axes; ++axis) {
      ds += dot(e.partial[axis], 2.0 * a.partial[axis] + e.partial[axis]);
    }
    total += volume * integrand_change(a.squared_norm(), ds, p);
  }
  return total.value();
}

EnergyGradient energy_gradient(const VectorField& u, double p) {
  require_exponent(p);
  const Grid& grid = u.grid();
  const double scale = grid.cell_volume() / grid.spacing();
  EnergyGradient g(grid);
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const GradientSample sample = gradient_sample(u, c);
    const double weight = scale * integrand_weight(sample.squared_norm(), p);
    if (weight == 0.0) continue;
    const std::size_t anchor = grid.cell_anchor(c);
    for (int axis = 0; axis < sample.axes; ++axis) {
      const Vec2 flux = weight * sample.partial[axis];
      g[grid.step(anchor, axis)] = g[grid.step(anchor, axis)] + flux;
      g[anchor] = g[anchor] - flux;
    }
  }
  for (std::size_t n : grid.boundary_nodes()) g[n] = Vec2{};
  return g;
}

VectorField tangential_part(const VectorField& u, const VectorField& g) {
  require_same_grid(u, g);
  VectorField out(u.grid());
  for (std::size_t n = 0; n < u.size(); ++n) {
    const double r = norm(u[n]);
    if (r == 0.0) continue;
    const Vec2 tangent{u[n].u2 / r, -u[n].u1 / r};
    out[n] = dot(g[n], tangent) * tangent;
  }
  return out;
}

EnergyGradient riemannian_gradient(const VectorField& u, double p) {
  require_unit_norm(u, kUnitNormTolerance);
  return tangential_part(u, energy_gradient(u, p));
}

VectorField variation_direction(const VectorField& u, const VectorField& v) {
  require_same_grid(u, v);
  require_unit_norm(u, kUnitNormTolerance);
  return tangential_part(u, v);
}

double k_tau(const VectorField& u, const VectorField& v, double tau, double p) {
  require_same_grid(u, v);
  require_zero_boundary(v);
  return energy(project_nodal(axpy(u, tau, v)), p);
}

double dk_zero(const VectorField& u, const VectorField& v, double p) {
  require_exponent(p);
  require_zero_boundary(v);
  const VectorField w = variation_direction(u, v);
  const Grid& grid = u.grid();
  const double volume = grid.cell_volume();
  CompensatedSum total;
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const GradientSample du = gradient_sample(u, c);
    const GradientSample dw = gradient_sample(w, c);
    double pairing = 0.0;
    for (int axis = 0; axis < du.axes; ++axis) pairing += dot(du.partial[axis], dw.partial[axis]);
    total += volume * integrand_weight(du.squared_norm(), p) * pairing;
  }
  return total.value();
}

}  // namespace circlemap
