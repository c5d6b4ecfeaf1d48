#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "circlemap/optimize.hpp"
#include "circlemap/oracle.hpp"
#include "circlemap/problem.hpp"
#include "circlemap/verify.hpp"

namespace circlemap {

inline constexpr std::size_t kMaxHistoryEntries = 1000;

/// Uniform-stride subsample with at most `max_entries` values; the first and
/// last entries are always kept.
std::vector<double> decimate_history(const std::vector<double>& history,
                                     std::size_t max_entries = kMaxHistoryEntries);

// JSON documents written by the CLI. Keys appear in a fixed order so that
// identical runs produce identical bytes apart from wall_time_ms.

std::string solve_report_json(const SolveReport& report);

std::string verify_report_json(const VerifyReport& report, const ProblemSpec& spec,
                               const std::string& field_path);

std::string oracle_report_json(const AngleLiftSolution& solution, const ProblemSpec& spec,
                               const std::string& field_path);

}  // namespace circlemap
