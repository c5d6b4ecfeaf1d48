#include "circlemap/field_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "circlemap/error.hpp"

namespace circlemap {
namespace {

std::string format17(double v) {
  char buf[40];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view token, std::size_t row) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::parse_error,
                "row " + std::to_string(row) + ": malformed number '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

void write_field_csv(std::ostream& out, const VectorField& u) {
  const Grid& grid = u.grid();
  out << (grid.dim() == 1 ? "x,u1,u2\n" : "x,y,u1,u2\n");
  for (std::size_t n = 0; n < u.size(); ++n) {
    const auto [x, y] = grid.position(n);
    out << format17(x) << ',';
    if (grid.dim() == 2) out << format17(y) << ',';
    out << format17(u[n].u1) << ',' << format17(u[n].u2) << '\n';
  }
}

void write_field_csv(const std::filesystem::path& path, const VectorField& u) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot open " + path.string() + " for writing");
  write_field_csv(out, u);
  if (!out) throw Error(ErrorCode::io_error, "failed writing " + path.string());
}

VectorField read_field_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::parse_error, "empty field file");
  const std::string_view header = trim(line);
  int dim = 0;
  if (header == "x,u1,u2") {
    dim = 1;
  } else if (header == "x,y,u1,u2") {
    dim = 2;
  } else {
    throw Error(ErrorCode::parse_error, "unexpected header '" + std::string(header) + "'");
  }

  std::vector<std::vector<double>> rows;
  const std::size_t columns = dim == 1 ? 3 : 4;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto tokens = split_commas(line);
    if (tokens.size() != columns) {
      throw Error(ErrorCode::parse_error, "row " + std::to_string(rows.size() + 1) + ": expected " +
                                              std::to_string(columns) + " columns");
    }
    std::vector<double> row;
    for (auto t : tokens) row.push_back(parse_number(t, rows.size() + 1));
    rows.push_back(std::move(row));
  }

  int m = 0;
  if (dim == 1) {
    m = static_cast<int>(rows.size());
  } else {
    m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rows.size()))));
    if (static_cast<std::size_t>(m) * static_cast<std::size_t>(m) != rows.size()) {
      throw Error(ErrorCode::parse_error,
                  "row count " + std::to_string(rows.size()) + " is not a square grid");
    }
  }
  if (m < 3) throw Error(ErrorCode::parse_error, "too few rows for a grid");
  const Grid grid(dim, m);

  std::vector<Vec2> values(rows.size());
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const auto [x, y] = grid.position(n);
    const auto& row = rows[n];
    const bool coords_ok =
        std::abs(row[0] - x) <= 1e-9 && (dim == 1 || std::abs(row[1] - y) <= 1e-9);
    if (!coords_ok) {
      throw Error(ErrorCode::parse_error,
                  "row " + std::to_string(n + 1) + ": coordinates do not match a uniform grid");
    }
    values[n] = {row[columns - 2], row[columns - 1]};
  }
  return VectorField(grid, std::move(values));
}

VectorField read_field_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
  return read_field_csv(in);
}

}  // namespace circlemap
