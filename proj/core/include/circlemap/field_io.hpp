#pragma once

#include <filesystem>
#include <iosfwd>

#include "circlemap/field.hpp"

namespace circlemap {

// CSV field files: header `x,u1,u2` (1D) or `x,y,u1,u2` (2D), one row per node
// in row-major order, numbers printed with 17 significant digits.

void write_field_csv(std::ostream& out, const VectorField& u);
void write_field_csv(const std::filesystem::path& path, const VectorField& u);

/// Infers the grid from the header and the row count. Throws Error(parse_error)
/// for a wrong header, a row count that is not a valid grid size, malformed
/// numbers, or coordinates that disagree with the inferred grid.
VectorField read_field_csv(std::istream& in);
/// As above; Error(io_error) when the file cannot be opened.
VectorField read_field_csv(const std::filesystem::path& path);

}  // namespace circlemap
