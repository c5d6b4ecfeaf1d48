#include "circlemap/report.hpp"

#include <json.hpp>

#include "circlemap/error.hpp"

namespace circlemap {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::vector<double> decimate_history(const std::vector<double>& history,
                                     std::size_t max_entries) {
  if (max_entries < 2) throw Error(ErrorCode::invalid_argument, "history needs room for two entries");
  if (history.size() <= max_entries) return history;
  const std::size_t last = history.size() - 1;
  // Interior samples at multiples of the stride, then the final entry.
  const std::size_t stride = (last + max_entries - 3) / (max_entries - 2);
  std::vector<double> out;
  for (std::size_t k = 0; k < last; k += stride) out.push_back(history[k]);
  out.push_back(history[last]);
  return out;
}

std::string solve_report_json(const SolveReport& report) {
  Json doc;
  doc["problem"] = std::string(to_string(report.problem));
  doc["p"] = report.p;
  doc["m"] = report.m;
  doc["iterations"] = report.iterations;
  doc["converged"] = report.converged;
  doc["final_energy"] = report.final_energy;
  doc["el_residual"] = report.el_residual;
  doc["energy_history"] = decimate_history(report.energy_history);
  doc["wall_time_ms"] = report.wall_time_ms;
  doc["field_path"] = report.field_path;
  doc["defect_moves"] = report.defect_moves;
  return dump(doc);
}

std::string verify_report_json(const VerifyReport& report, const ProblemSpec& spec,
                               const std::string& field_path) {
  Json verify;
  verify["el_residual"] = report.el_residual;
  verify["el_weight"] = "p*(|Du|^2)^((p-2)/2)";
  verify["orthogonality_defect"] = report.orthogonality_defect;
  verify["orthogonality_bound"] = report.orthogonality_bound;
  verify["convexity_gap"] =
      report.convexity_gap ? Json(*report.convexity_gap) : Json(nullptr);
  verify["convexity_strict"] = report.convexity_strict;
  verify["lemma2_margin"] = report.lemma2_margin;
  verify["fd_gradient_error"] = report.fd_gradient_error;
  verify["admissible"] = report.admissible;
  verify["failures"] = report.failures;
  verify["all_pass"] = report.all_pass;

  Json doc;
  doc["problem"] = std::string(to_string(spec.problem));
  doc["p"] = spec.p;
  doc["m"] = spec.grid.nodes_per_axis();
  doc["tol"] = spec.tol;
  doc["field_path"] = field_path;
  doc["verify"] = std::move(verify);
  return dump(doc);
}

std::string oracle_report_json(const AngleLiftSolution& solution, const ProblemSpec& spec,
                               const std::string& field_path) {
  Json doc;
  doc["problem"] = std::string(to_string(spec.problem));
  doc["p"] = spec.p;
  doc["m"] = spec.grid.nodes_per_axis();
  doc["lifted_energy"] = solution.lifted_energy;
  doc["energy"] = solution.energy;
  doc["polish_decrease"] = solution.polish_decrease;
  doc["field_path"] = field_path;
  return dump(doc);
}

}  // namespace circlemap
