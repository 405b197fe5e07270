#include "polyflow/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "polyflow/circulant.hpp"
#include "polyflow/errors.hpp"
#include "polyflow/integrate.hpp"
#include "polyflow/io.hpp"
#include "polyflow/spectral_flow.hpp"
#include "polyflow/trajectory.hpp"
#include "polyflow/yau_flow.hpp"

namespace polyflow::cli {

namespace {

void validate_schedule(const TimeSchedule& s) {
  if (s.times.empty()) throw InvalidArgument("time schedule is empty");
  for (double t : s.times) {
    if (!std::isfinite(t)) throw InvalidArgument("time schedule contains a non-finite time");
  }
  for (std::size_t i = 1; i < s.times.size(); ++i) {
    if (!(s.times[i] > s.times[i - 1])) throw InvalidArgument("time schedule must be strictly increasing");
  }
}

void validate_order(int m) {
  if (m < 1) throw InvalidArgument("--m must be at least 1");
}

Polygon load_flow_input(const std::string& path, const char* role) {
  if (path.empty()) throw InvalidArgument(std::string("missing ") + role + " polygon path");
  Polygon x = io::load_polygon(path);
  if (x.size() < 3) {
    throw ParseError(std::string(role) + " polygon has " + std::to_string(x.size()) +
                         " vertices; flows need at least 3",
                     0);
  }
  return x;
}

nlohmann::json polygon_json(const Polygon& x) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto v = x.vertex(static_cast<std::ptrdiff_t>(j));
    vertices.push_back(std::vector<double>(v.begin(), v.end()));
  }
  return {{"dim", x.dim()}, {"vertices", vertices}};
}

// The initial state is always part of the written trajectory.
std::vector<double> with_initial_time(const TimeSchedule& s) {
  std::vector<double> times = s.times;
  if (times.front() > 0.0) times.insert(times.begin(), 0.0);
  return times;
}

void emit(const RunSpec& spec, const Trajectory& trajectory, const svg::Figure& figure, std::ostream& out) {
  if (!spec.csv_path.empty()) {
    io::write_text(spec.csv_path, io::trajectory_to_csv(trajectory));
    out << "wrote " << spec.csv_path << '\n';
  }
  if (!spec.svg_path.empty()) {
    io::write_text(spec.svg_path, svg::render(figure, spec.render));
    out << "wrote " << spec.svg_path << '\n';
  }
  if (spec.csv_path.empty() && spec.svg_path.empty()) out << io::trajectory_to_csv(trajectory);
}

}  // namespace

TimeSchedule TimeSchedule::geometric(double t0, double ratio, int count) {
  if (!(t0 > 0.0) || !(ratio > 1.0) || count < 1) {
    throw InvalidArgument("geometric schedule needs t0 > 0, ratio > 1, count >= 1");
  }
  TimeSchedule s;
  double t = t0;
  for (int j = 0; j < count; ++j, t *= ratio) s.times.push_back(t);
  return s;
}

TimeSchedule TimeSchedule::explicit_times(std::vector<double> times) {
  TimeSchedule s{std::move(times)};
  validate_schedule(s);
  return s;
}

std::string matrix_report(int n, int m) {
  const auto power = power_of_m(n, m);
  const auto flow = power.signed_for_order(m);
  const auto eigenvalues = flow_eigenvalues(static_cast<std::size_t>(n), m);
  std::ostringstream out;
  auto row = [&out](std::span<const Integer> r) {
    for (std::size_t k = 0; k < r.size(); ++k) out << (k ? " " : "") << r[k];
    out << '\n';
  };
  out << "# M^" << m << " first row (n=" << n << ", r=" << minimal_r(m, n) << ")\n";
  row(power.first_row());
  out << "# (-1)^" << m + 1 << " M^" << m << " first row\n";
  row(flow.first_row());
  out << "# eigenvalues lambda_{" << m << ",k}, k=0.." << n - 1 << '\n';
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    out << (k ? " " : "") << io::format_double(eigenvalues[k]);
  }
  out << '\n';
  return out.str();
}

nlohmann::json analyze_report(const Polygon& x, int m) {
  const FlowSolution flow(x, m);
  const auto& dec = flow.decomposition();
  nlohmann::json report;
  report["n"] = x.size();
  report["p"] = x.dim();
  report["m"] = m;
  report["centroid"] = flow.centroid();
  report["energy"] = energy(x, m);
  report["eigenvalues"] = std::vector<double>(flow.eigenvalues().begin(), flow.eigenvalues().end());

  nlohmann::json real = nlohmann::json::array();
  for (const auto& mode : dec.real_modes()) {
    real.push_back({{"k", mode.k}, {"alpha", mode.alpha}, {"beta", mode.beta},
                    {"norm", dec.component_norms()[mode.k]}, {"present", dec.is_present(mode.k)}});
  }
  report["coefficients"]["real"] = real;
  if (dec.has_planar_view()) {
    nlohmann::json planar = nlohmann::json::array();
    for (const auto& a : dec.planar()) planar.push_back({a.real(), a.imag()});
    report["coefficients"]["planar"] = planar;
  }

  if (const auto similarity = classify_self_similar(x, m)) {
    report["self_similar"] = {{"k", similarity->mode},
                              {"rate", similarity->rate},
                              {"is_trivial", similarity->is_trivial}};
  } else {
    report["self_similar"] = nullptr;
  }

  auto limit_json = [&](LimitDirection direction) -> nlohmann::json {
    if (!flow.dominant_mode(direction)) return nullptr;
    const auto limit = flow.rescaled_limit(direction);
    return {{"mode", limit.mode}, {"rate", limit.rate}, {"polygon", polygon_json(limit.limit)}};
  };
  const auto forward = flow.dominant_mode(LimitDirection::forward);
  report["dominant_mode"] = forward ? nlohmann::json(*forward) : nlohmann::json(nullptr);
  report["forward_limit"] = limit_json(LimitDirection::forward);
  report["ancient_limit"] = limit_json(LimitDirection::ancient);
  return report;
}

int run_matrix(const RunSpec& spec, std::ostream& out) {
  out << matrix_report(spec.n, spec.m);
  return kSuccess;
}

int run_flow(const RunSpec& spec, std::ostream& out) {
  validate_order(spec.m);
  validate_schedule(spec.schedule);
  const Polygon x0 = load_flow_input(spec.input, "input");
  const FlowSolution flow(x0, spec.m);

  Trajectory trajectory{FlowKind::polyharmonic, spec.m, {}, {}};
  svg::Figure figure;
  figure.initial = x0;
  for (double t : with_initial_time(spec.schedule)) {
    auto x = flow.evaluate(t);
    if (t != 0.0) figure.samples.push_back(x);
    trajectory.samples.push_back({t, std::move(x)});
  }
  emit(spec, trajectory, figure, out);
  return kSuccess;
}

int run_yau(const RunSpec& spec, std::ostream& out) {
  validate_order(spec.m);
  validate_schedule(spec.schedule);
  const Polygon x0 = load_flow_input(spec.input, "input");
  const Polygon y = load_flow_input(spec.target, "target");
  if (x0.dim() != y.dim()) {
    throw ParseError("initial polygon is in R^" + std::to_string(x0.dim()) + " but target is in R^" +
                         std::to_string(y.dim()),
                     0);
  }
  const auto flow = yau_flow_between(x0, y, spec.m, spec.strategy);

  Trajectory trajectory{FlowKind::yau, spec.m, {}, {}};
  svg::Figure figure;
  figure.initial = flow.problem().initial;
  figure.target = flow.problem().target;
  for (double t : with_initial_time(spec.schedule)) {
    auto x = flow.evaluate(t);
    if (t != 0.0) figure.samples.push_back(x);
    trajectory.samples.push_back({t, std::move(x)});
  }
  emit(spec, trajectory, figure, out);
  return kSuccess;
}

int run_analyze(const RunSpec& spec, std::ostream& out) {
  validate_order(spec.m);
  const Polygon x = load_flow_input(spec.input, "input");
  const auto text = analyze_report(x, spec.m).dump(2) + "\n";
  if (!spec.json_path.empty()) {
    io::write_text(spec.json_path, text);
    out << "wrote " << spec.json_path << '\n';
  } else {
    out << text;
  }
  return kSuccess;
}

int run_integrate(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  validate_order(spec.m);
  Polygon x0 = load_flow_input(spec.input, "input");
  IntegratorConfig config;
  config.dt = spec.dt;
  config.final_time = spec.final_time;
  config.rhs = RhsKind::polyharmonic(spec.m);

  std::optional<YauFlow> yau;
  if (!spec.target.empty()) {
    const Polygon y = load_flow_input(spec.target, "target");
    if (x0.dim() != y.dim()) throw ParseError("initial and target dimensions differ", 0);
    yau.emplace(yau_flow_between(x0, y, spec.m, spec.strategy));
    x0 = yau->problem().initial;
    config.rhs = RhsKind::yau(spec.m, yau->problem().target);
  }

  const auto result = integrate(x0, config);
  for (const auto& w : result.trajectory.warnings) err << "warning: " << w << '\n';

  const FlowSolution exact(x0, spec.m);
  double max_dev = 0.0;
  double final_dev = 0.0;
  for (const auto& sample : result.trajectory.samples) {
    const auto reference = yau ? yau->evaluate(sample.t) : exact.evaluate(sample.t);
    final_dev = sup_vertex_distance(sample.polygon, reference);
    max_dev = std::max(max_dev, final_dev);
  }

  nlohmann::json summary = {{"kind", to_string(result.trajectory.kind)},
                            {"m", spec.m},
                            {"dt", spec.dt},
                            {"T", spec.final_time},
                            {"steps", result.steps},
                            {"partial_final_step", result.partial_final_step},
                            {"stiffness_warning", result.stiffness_warning},
                            {"max_deviation_from_exact", max_dev},
                            {"final_deviation_from_exact", final_dev}};
  if (!spec.csv_path.empty()) {
    io::write_text(spec.csv_path, io::trajectory_to_csv(result.trajectory));
    summary["csv"] = spec.csv_path;
  }
  out << summary.dump(2) << '\n';
  return kSuccess;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-discrete polyharmonic and Yau difference flows of closed polygons"};
  app.require_subcommand(1);
  RunSpec spec;

  const std::map<std::string, ReconcileStrategy> strategies{
      {"duplicate", ReconcileStrategy::duplicate}, {"midpoint", ReconcileStrategy::midpoint}};
  std::vector<double> times;
  double t0 = 0.05;
  double ratio = 1.6;
  int count = 8;

  auto add_schedule = [&](CLI::App* sub) {
    sub->add_option("--times", times, "Explicit sample times t1,t2,...")->delimiter(',');
    sub->add_option("--t0", t0, "First time of the geometric schedule")->capture_default_str();
    sub->add_option("--ratio", ratio, "Ratio of the geometric schedule")->capture_default_str();
    sub->add_option("--count", count, "Number of samples of the geometric schedule")->capture_default_str();
  };
  auto add_outputs = [&](CLI::App* sub) {
    sub->add_option("--csv", spec.csv_path, "Trajectory CSV output path");
    sub->add_option("--svg", spec.svg_path, "SVG figure output path");
    sub->add_option("--sample-stroke", spec.render.sample_stroke, "Stroke width of samples");
    sub->add_option("--initial-stroke", spec.render.initial_stroke, "Stroke width of the initial polygon");
    sub->add_option("--target-stroke", spec.render.target_stroke, "Stroke width of the target polygon");
  };
  auto add_strategy = [&](CLI::App* sub) {
    sub->add_option("--strategy", spec.strategy, "Vertex-count reconciliation")
        ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
  };

  auto* matrix = app.add_subcommand("matrix", "Print the first rows of M^m and the flow eigenvalues");
  matrix->add_option("--n", spec.n, "Vertex count")->required();
  matrix->add_option("--m", spec.m, "Order m")->required();

  auto* flow = app.add_subcommand("flow", "Evaluate the exact polyharmonic flow on a schedule");
  flow->add_option("--input", spec.input, "Polygon JSON or CSV")->required();
  flow->add_option("--m", spec.m, "Order m")->capture_default_str();
  add_schedule(flow);
  add_outputs(flow);

  auto* yau = app.add_subcommand("yau", "Flow an initial polygon toward a target polygon");
  yau->add_option("--input", spec.input, "Initial polygon JSON or CSV")->required();
  yau->add_option("--target", spec.target, "Target polygon JSON or CSV")->required();
  yau->add_option("--m", spec.m, "Order m")->capture_default_str();
  add_strategy(yau);
  add_schedule(yau);
  add_outputs(yau);
  bool solid_target = false;
  yau->add_flag("--solid-target", solid_target, "Draw the target with a solid line");

  auto* analyze = app.add_subcommand("analyze", "Spectral report: modes, self-similarity, limit shapes");
  analyze->add_option("--input", spec.input, "Polygon JSON or CSV")->required();
  analyze->add_option("--m", spec.m, "Order m")->capture_default_str();
  analyze->add_option("--json", spec.json_path, "Write the report here instead of stdout");

  auto* oracle = app.add_subcommand("integrate", "RK4 integration compared against the exact solution");
  oracle->add_option("--input", spec.input, "Polygon JSON or CSV")->required();
  oracle->add_option("--target", spec.target, "Target polygon (Yau right-hand side)");
  oracle->add_option("--m", spec.m, "Order m")->capture_default_str();
  oracle->add_option("--dt", spec.dt, "Step size")->capture_default_str();
  oracle->add_option("--T", spec.final_time, "Final time")->capture_default_str();
  oracle->add_option("--csv", spec.csv_path, "Trajectory CSV output path");
  add_strategy(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kArgumentError;
  }

  try {
    if (!times.empty()) {
      spec.schedule = TimeSchedule::explicit_times(times);
    } else {
      spec.schedule = TimeSchedule::geometric(t0, ratio, count);
    }
    spec.render.dashed_target = !solid_target;

    if (matrix->parsed()) return run_matrix(spec, out);
    if (flow->parsed()) return run_flow(spec, out);
    if (yau->parsed()) return run_yau(spec, out);
    if (analyze->parsed()) return run_analyze(spec, out);
    if (oracle->parsed()) return run_integrate(spec, out, err);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const RangeError& e) {
    err << "numeric range error: " << e.what() << '\n';
    return kRangeError;
  } catch (const OverflowError& e) {
    err << "numeric range error: " << e.what() << '\n';
    return kRangeError;
  } catch (const InvalidArgument& e) {
    err << "argument error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const SizeMismatch& e) {
    err << "argument error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kArgumentError;
}

}  // namespace polyflow::cli
