#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>

#include "circlemap/circlemap.hpp"

namespace circlemap::cli {
namespace {

struct Config {
  std::string problem = "a1";
  double p = 2.0;
  int nodes = 101;
  std::string init = "random";
  std::uint64_t seed = 0;
  double tol = 1e-6;
  int max_iters = 50000;
  double ls_beta = 0.5;
  double ls_c = 1e-4;
  std::string metric = "sobolev";
  bool no_defect_moves = false;
  std::string out;
  std::string field_out;
  std::string field_in;
  std::string field_compare;
};

void add_problem_options(CLI::App& app, Config& c) {
  app.add_option("--problem", c.problem, "a1 (interval) or a2 (square)")
      ->check(CLI::IsMember({"a1", "a2"}))
      ->capture_default_str();
  app.add_option("--p", c.p, "Energy exponent, p >= 2")->capture_default_str();
  app.add_option("--nodes", c.nodes, "Nodes per axis, >= 3")->capture_default_str();
  app.add_option("--tol", c.tol, "Stationarity tolerance")->capture_default_str();
  app.add_option("--seed", c.seed, "Seed for random choices")->capture_default_str();
  app.add_option("--out", c.out, "JSON report path (stdout when omitted)");
}

ProblemSpec make_spec(const Config& c) {
  ProblemSpec spec;
  if (c.problem == "a1") {
    spec.problem = ProblemKind::a1;
    spec.grid = Grid(1, c.nodes);
    spec.boundary = BoundaryData::a1_endpoints();
  } else {
    spec.problem = ProblemKind::a2;
    spec.grid = Grid(2, c.nodes);
    spec.boundary = BoundaryData::a2_constant();
  }
  spec.p = c.p;
  spec.tol = c.tol;
  spec.max_iters = c.max_iters;
  spec.ls_beta = c.ls_beta;
  spec.ls_c = c.ls_c;
  spec.seed = c.seed;
  spec.metric = c.metric == "euclidean" ? DescentMetric::euclidean : DescentMetric::sobolev;
  spec.defect_moves = !c.no_defect_moves;
  spec.validate();
  return spec;
}

VectorField initial_field(const Config& c, const ProblemSpec& spec) {
  constexpr std::string_view kFilePrefix = "file:";
  if (c.init == "random") return make_random_admissible(spec);
  if (c.init == "geodesic") {
    if (spec.problem != ProblemKind::a1) {
      throw Error(ErrorCode::invalid_argument, "--init geodesic needs --problem a1");
    }
    return make_geodesic_1d(spec.grid);
  }
  if (c.init == "constant") {
    if (spec.problem != ProblemKind::a2) {
      throw Error(ErrorCode::invalid_argument, "--init constant needs --problem a2");
    }
    return make_constant_2d(spec.grid);
  }
  if (c.init.rfind(kFilePrefix, 0) == 0) {
    VectorField u = read_field_csv(c.init.substr(kFilePrefix.size()));
    if (!(u.grid() == spec.grid)) {
      throw Error(ErrorCode::grid_mismatch, "initial field does not match --problem/--nodes");
    }
    return u;
  }
  throw Error(ErrorCode::invalid_argument,
              "--init must be geodesic, constant, random or file:<path> (got '" + c.init + "')");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::io_error, "cannot open " + path + " for writing");
  file << text;
  if (!file) throw Error(ErrorCode::io_error, "failed writing " + path);
}

int run_solve(const Config& c, std::ostream& out) {
  const ProblemSpec spec = make_spec(c);
  Solution solution = solve(spec, initial_field(c, spec));
  solution.report.field_path = c.field_out;
  if (!c.field_out.empty()) write_field_csv(c.field_out, solution.field);
  emit(c.out, solve_report_json(solution.report), out);
  return solution.report.converged ? kSuccess : kNotConverged;
}

int run_verify_command(const Config& c, std::ostream& out) {
  const ProblemSpec spec = make_spec(c);
  if (c.field_in.empty()) throw Error(ErrorCode::invalid_argument, "verify needs --field-in");
  const VectorField u = read_field_csv(c.field_in);
  std::optional<VectorField> other;
  if (!c.field_compare.empty()) other = read_field_csv(c.field_compare);
  const VerifyReport report = run_verify(u, spec, other ? &*other : nullptr);
  emit(c.out, verify_report_json(report, spec, c.field_in), out);
  return report.all_pass ? kSuccess : kVerifyFailed;
}

int run_oracle(const Config& c, std::ostream& out) {
  const ProblemSpec spec = make_spec(c);
  const AngleLiftSolution solution = angle_lift_solve_1d(spec);
  if (!c.field_out.empty()) write_field_csv(c.field_out, solution.field);
  emit(c.out, oracle_report_json(solution, spec, c.field_out), out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"p-energy minimization and verification for circle-valued maps", "circlemap"};
  app.require_subcommand(1);

  CLI::App* solve_cmd = app.add_subcommand("solve", "Minimize the energy and write a report");
  add_problem_options(*solve_cmd, c);
  solve_cmd->add_option("--init", c.init, "geodesic, constant, random or file:<path>")
      ->capture_default_str();
  solve_cmd->add_option("--max-iters", c.max_iters, "Descent step budget")
      ->capture_default_str();
  solve_cmd->add_option("--ls-beta", c.ls_beta, "Backtracking factor")->capture_default_str();
  solve_cmd->add_option("--ls-c", c.ls_c, "Sufficient decrease constant")->capture_default_str();
  solve_cmd->add_option("--metric", c.metric, "Descent metric")
      ->check(CLI::IsMember({"sobolev", "euclidean"}))
      ->capture_default_str();
  solve_cmd->add_flag("--no-defect-moves", c.no_defect_moves,
                      "Disable winding and vortex removal between descent rounds");
  solve_cmd->add_option("--field-out", c.field_out, "CSV path for the final field");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a field and write a report");
  add_problem_options(*verify_cmd, c);
  verify_cmd->add_option("--field-in", c.field_in, "CSV field to check")->required();
  verify_cmd->add_option("--field-compare", c.field_compare,
                         "Second CSV field for the midpoint convexity check");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Solve A1 through the angle lift");
  add_problem_options(*oracle_cmd, c);
  oracle_cmd->add_option("--field-out", c.field_out, "CSV path for the oracle field");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(c, out);
    if (verify_cmd->parsed()) return run_verify_command(c, out);
    return run_oracle(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace circlemap::cli
