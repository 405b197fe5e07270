#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyflow/polygon.hpp"
#include "polyflow/svg.hpp"

namespace polyflow::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kArgumentError = 2,
  kInputError = 3,
  kRangeError = 4,
};

// Explicit list, or t_j = t0 * ratio^j for j = 0..count-1.
struct TimeSchedule {
  std::vector<double> times;

  static TimeSchedule geometric(double t0, double ratio, int count);
  static TimeSchedule explicit_times(std::vector<double> times);
};

struct RunSpec {
  std::string subcommand;
  std::string input;
  std::string target;
  int m = 1;
  int n = 0;
  TimeSchedule schedule = TimeSchedule::geometric(0.05, 1.6, 8);
  ReconcileStrategy strategy = ReconcileStrategy::midpoint;
  std::string csv_path;
  std::string svg_path;
  std::string json_path;
  double dt = 1e-3;
  double final_time = 1.0;
  svg::RenderOptions render;
};

std::string matrix_report(int n, int m);
nlohmann::json analyze_report(const Polygon& x, int m);

int run_matrix(const RunSpec& spec, std::ostream& out);
int run_flow(const RunSpec& spec, std::ostream& out);
int run_yau(const RunSpec& spec, std::ostream& out);
int run_analyze(const RunSpec& spec, std::ostream& out);
int run_integrate(const RunSpec& spec, std::ostream& out, std::ostream& err);

// Parses argv, dispatches, and maps failures onto exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyflow::cli
