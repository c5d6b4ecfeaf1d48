#pragma once

#include <span>
#include <vector>

#include "circlemap/field.hpp"

namespace circlemap::detail {

/// H1-preconditioned descent direction P_T(S^-1 g_tan).
///
/// S is the interior block of the weighted graph Laplacian on the cell edges,
/// with edge weight h^(dim-2) * p * (s_c + sigma)^((p-2)/2), s_c = |Du|^2 on the
/// cell and sigma a small fraction of the mean of s_c. For p = 2 this is the
/// exact Hessian of the unconstrained energy.
VectorField sobolev_direction(const VectorField& u, const VectorField& g_tan, double p);

/// Discrete harmonic function (unit edge weights) with the given boundary
/// values. Only boundary entries of `values` are read.
std::vector<double> harmonic_extension(const Grid& grid, std::span<const double> values);

}  // namespace circlemap::detail
