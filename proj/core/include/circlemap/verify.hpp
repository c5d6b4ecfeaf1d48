#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "circlemap/field.hpp"
#include "circlemap/problem.hpp"

namespace circlemap {

/// Constrained first variation tested against every interior hat function
/// (both components), with the test field pushed through v - (u.v)u:
///   max_{n,e} | sum_cells h^dim p|Du|^(p-2) (Du : D w_{n,e}) | / h^dim.
/// The weight uses |Du|^(p-2), the derivative of (|Du|^2)^(p/2).
/// Requires a unit-norm field (defect <= 1e-8).
double el_residual(const VectorField& u, double p);

/// max over cells of |(Du)^T u_anchor|. For unit fields this equals
/// (h/2) * sqrt(sum_axis |d_axis|^4), the discrete trace of |u|^2 = 1.
double orthogonality_defect(const VectorField& u);

/// Upper bound for orthogonality_defect implied by |u| = 1 at the nodes:
/// (h/2) * max_cells |Du|^2.
double orthogonality_bound(const VectorField& u);

/// (E(u)^(1/p) + E(v)^(1/p))/2 - E((u+v)/2)^(1/p).
double midpoint_convexity_gap(const VectorField& u, const VectorField& v, double p);

/// True when every cell's gradients of u and v span a parallelogram of area
/// <= area_tolerance (the degenerate case in which no strict gap is expected).
bool gradients_parallel(const VectorField& u, const VectorField& v,
                        double area_tolerance = 1e-10);

/// True iff samples and samples^(1/p) induce the same pairwise order,
/// ties included. Throws Error(domain_error) for p <= 0 or a negative sample.
bool root_monotonicity_check(std::span<const double> samples, double p);

struct PNormComparison {
  double lhs = 0.0;     ///< |x|_2
  double rhs = 0.0;     ///< n^(1/2 - 1/p) |x|_p
  double margin = 0.0;  ///< rhs - lhs
};

/// |x|_2 <= n^(1/2-1/p) |x|_p, the sharp constant for p >= 2.
PNormComparison pnorm_comparison_check(std::span<const double> x, double p);

/// Worst error between energy_gradient and central differences of energy at
/// `samples` interior degrees of freedom drawn from `seed`. Each entry is
/// |g - fd| / max(1, |g|, |fd|), i.e. relative once the entries exceed one.
double fd_gradient_check(const VectorField& u, double p, double step,
                         std::uint64_t seed = 0, int samples = 20);

struct VerifyThresholds {
  double el_residual = 1e-6;
  double orthogonality_slack = 1e-12;
  double convexity = -1e-12;
  double lemma2 = -1e-12;
  double fd_gradient = 1e-5;
};

struct VerifyReport {
  double el_residual = 0.0;
  double orthogonality_defect = 0.0;
  double orthogonality_bound = 0.0;
  /// Present when a comparison field was supplied.
  std::optional<double> convexity_gap;
  /// Whether the gap must be strictly positive (gradients not all parallel).
  bool convexity_strict = false;
  /// Smallest p-norm comparison margin over the cell gradients of u, divided
  /// by max(1, |Du|_2) so the slack does not grow with the gradient.
  double lemma2_margin = 0.0;
  double fd_gradient_error = 0.0;
  bool admissible = false;
  /// Names of the checks that failed; empty when all_pass.
  std::vector<std::string> failures;
  bool all_pass = false;
};

/// Runs every check on u (and on the pair (u, other) when given).
/// el_residual is compared against spec.tol. Throws Error(grid_mismatch) when
/// u is not on spec.grid.
VerifyReport run_verify(const VectorField& u, const ProblemSpec& spec,
                        const VectorField* other = nullptr);

}  // namespace circlemap
