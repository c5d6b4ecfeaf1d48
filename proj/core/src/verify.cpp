#include "circlemap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "circlemap/energy.hpp"
#include "circlemap/error.hpp"

namespace circlemap {
namespace {

// Pairing of Du with the gradient of the hat field w*phi_n on one cell, where
// n is the anchor (role -1) or the neighbour along `axis` (role = axis).
double hat_pairing(const GradientSample& du, Vec2 w, double h, int role) {
  double sum = 0.0;
  for (int axis = 0; axis < du.axes; ++axis) {
    if (role < 0) {
      sum -= dot(du.partial[axis], w);
    } else if (role == axis) {
      sum += dot(du.partial[axis], w);
    }
  }
  return sum / h;
}

}  // namespace

double el_residual(const VectorField& u, double p) {
  require_exponent(p);
  require_unit_norm(u, kUnitNormTolerance);
  const Grid& grid = u.grid();
  const double h = grid.spacing();
  const double volume = grid.cell_volume();
  const std::size_t m = static_cast<std::size_t>(grid.nodes_per_axis());
  const std::size_t cells_per_row = m - 1;

  double worst = 0.0;
  for (std::size_t n = 0; n < grid.node_count(); ++n) {
    if (grid.is_boundary(n)) continue;
    const auto [i, j] = grid.coords(n);
    const auto ci = static_cast<std::size_t>(i);
    const auto cj = static_cast<std::size_t>(j);

    // Cells touching n: anchored at n, at its -x neighbour, at its -y neighbour.
    struct Touch {
      std::size_t cell;
      int role;
    };
    std::vector<Touch> touching;
    if (grid.dim() == 1) {
      touching = {{ci, -1}, {ci - 1, 0}};
    } else {
      touching = {{cj * cells_per_row + ci, -1},
                  {cj * cells_per_row + ci - 1, 0},
                  {(cj - 1) * cells_per_row + ci, 1}};
    }

    for (const Vec2 e : {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}}) {
      const Vec2 w = e - dot(e, u[n]) * u[n];
      double sum = 0.0;
      for (const Touch& t : touching) {
        const GradientSample du = gradient_sample(u, t.cell);
        sum += volume * integrand_weight(du.squared_norm(), p) * hat_pairing(du, w, h, t.role);
      }
      worst = std::max(worst, std::abs(sum) / volume);
    }
  }
  return worst;
}

double orthogonality_defect(const VectorField& u) {
  require_unit_norm(u, kUnitNormTolerance);
  const Grid& grid = u.grid();
  double worst = 0.0;
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    const GradientSample du = gradient_sample(u, c);
    const Vec2 anchor = u[grid.cell_anchor(c)];
    double s = 0.0;
    for (int axis = 0; axis < du.axes; ++axis) {
      const double t = dot(du.partial[axis], anchor);
      s += t * t;
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

double orthogonality_bound(const VectorField& u) {
  const Grid& grid = u.grid();
  double worst = 0.0;
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    worst = std::max(worst, gradient_sample(u, c).squared_norm());
  }
  return 0.5 * grid.spacing() * worst;
}

double midpoint_convexity_gap(const VectorField& u, const VectorField& v, double p) {
  require_same_grid(u, v);
  VectorField mid(u.grid());
  for (std::size_t n = 0; n < u.size(); ++n) mid[n] = 0.5 * (u[n] + v[n]);
  const double inv = 1.0 / p;
  return 0.5 * std::pow(energy(u, p), inv) + 0.5 * std::pow(energy(v, p), inv) -
         std::pow(energy(mid, p), inv);
}

bool gradients_parallel(const VectorField& u, const VectorField& v, double area_tolerance) {
  require_same_grid(u, v);
  for (std::size_t c = 0; c < u.grid().cell_count(); ++c) {
    const auto a = gradient_sample(u, c).entries();
    const auto b = gradient_sample(v, c).entries();
    // Lagrange identity: |a|^2|b|^2 - (a.b)^2 = sum_{i<j} (a_i b_j - a_j b_i)^2.
    double area2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        const double x = a[i] * b[j] - a[j] * b[i];
        area2 += x * x;
      }
    }
    if (std::sqrt(area2) > area_tolerance) return false;
  }
  return true;
}

bool root_monotonicity_check(std::span<const double> samples, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::domain_error, "root exponent must be positive");
  }
  std::vector<double> roots(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (!(samples[k] >= 0.0)) {
      throw Error(ErrorCode::domain_error, "samples must be nonnegative");
    }
    roots[k] = std::pow(samples[k], 1.0 / p);
  }
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return samples[a] < samples[b]; });
  // Consecutive pairs suffice: both orders are transitive.
  for (std::size_t k = 1; k < order.size(); ++k) {
    const double s0 = samples[order[k - 1]], s1 = samples[order[k]];
    const double r0 = roots[order[k - 1]], r1 = roots[order[k]];
    if ((s0 < s1) != (r0 < r1) || (s0 == s1) != (r0 == r1)) return false;
  }
  return true;
}

PNormComparison pnorm_comparison_check(std::span<const double> x, double p) {
  require_exponent(p);
  if (x.empty()) throw Error(ErrorCode::invalid_argument, "empty vector");
  double scale = 0.0;
  for (double v : x) {
    if (!std::isfinite(v)) throw Error(ErrorCode::invalid_argument, "non-finite entry");
    scale = std::max(scale, std::abs(v));
  }
  PNormComparison out;
  if (scale == 0.0) return out;
  double sum2 = 0.0;
  double sump = 0.0;
  for (double v : x) {
    const double r = std::abs(v) / scale;
    sum2 += r * r;
    sump += std::pow(r, p);
  }
  const double n = static_cast<double>(x.size());
  out.lhs = scale * std::sqrt(sum2);
  out.rhs = std::pow(n, 0.5 - 1.0 / p) * scale * std::pow(sump, 1.0 / p);
  out.margin = out.rhs - out.lhs;
  return out;
}

double fd_gradient_check(const VectorField& u, double p, double step, std::uint64_t seed,
                         int samples) {
  if (!(step > 0.0)) throw Error(ErrorCode::invalid_argument, "step must be positive");
  const Grid& grid = u.grid();
  std::vector<std::size_t> interior;
  for (std::size_t n = 0; n < grid.node_count(); ++n) {
    if (!grid.is_boundary(n)) interior.push_back(n);
  }
  const VectorField g = energy_gradient(u, p);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int k = 0; k < samples && !interior.empty(); ++k) {
    const std::uint64_t draw = rng();
    const std::size_t node = interior[(draw >> 1) % interior.size()];
    const bool second = (draw & 1u) != 0;

    VectorField plus = u;
    VectorField minus = u;
    (second ? plus[node].u2 : plus[node].u1) += step;
    (second ? minus[node].u2 : minus[node].u1) -= step;
    const double fd = energy_difference(minus, plus, p) / (2.0 * step);
    const double exact = second ? g[node].u2 : g[node].u1;
    const double err =
        std::abs(exact - fd) / std::max({1.0, std::abs(exact), std::abs(fd)});
    worst = std::max(worst, err);
  }
  return worst;
}

VerifyReport run_verify(const VectorField& u, const ProblemSpec& spec,
                        const VectorField* other) {
  spec.validate();
  if (!(u.grid() == spec.grid)) {
    throw Error(ErrorCode::grid_mismatch, "field grid does not match the problem grid");
  }
  if (other != nullptr) require_same_grid(u, *other);

  const VerifyThresholds limits;
  VerifyReport report;
  const ConstraintReport constraints = check_admissible(u, spec);
  report.admissible = constraints.admissible;
  if (!report.admissible) report.failures.push_back("admissible");

  // Checks that assume a field on the circle are skipped (left at 0) when the
  // nodes are visibly off it; the admissibility failure already records why.
  if (constraints.unit_norm_defect <= kUnitNormTolerance) {
    report.el_residual = el_residual(u, spec.p);
    report.orthogonality_defect = orthogonality_defect(u);
    report.orthogonality_bound = orthogonality_bound(u);
    if (report.el_residual > spec.tol) report.failures.push_back("el_residual");
    if (report.orthogonality_defect > report.orthogonality_bound + limits.orthogonality_slack) {
      report.failures.push_back("orthogonality_defect");
    }
  }

  if (other != nullptr) {
    const double gap = midpoint_convexity_gap(u, *other, spec.p);
    report.convexity_strict = !gradients_parallel(u, *other);
    if (gap < limits.convexity || (report.convexity_strict && !(gap > 0.0))) {
      report.failures.push_back("convexity_gap");
    }
    report.convexity_gap = std::max(gap, 0.0);
  }

  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < spec.grid.cell_count(); ++c) {
    const GradientSample du = gradient_sample(u, c);
    const auto all = du.entries();
    std::vector<double> entries;
    if (du.axes == 1) {
      entries = {all[0], all[2]};
    } else {
      entries.assign(all.begin(), all.end());
    }
    const PNormComparison cmp = pnorm_comparison_check(entries, spec.p);
    margin = std::min(margin, cmp.margin / std::max(1.0, cmp.lhs));
  }
  if (margin < limits.lemma2) report.failures.push_back("lemma2_margin");
  report.lemma2_margin = std::max(margin, 0.0);

  report.fd_gradient_error = fd_gradient_check(u, spec.p, 1e-6, spec.seed);
  if (report.fd_gradient_error > limits.fd_gradient) {
    report.failures.push_back("fd_gradient_error");
  }

  report.all_pass = report.failures.empty();
  return report;
}

}  // namespace circlemap
