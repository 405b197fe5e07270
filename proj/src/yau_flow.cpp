#include "polyflow/yau_flow.hpp"

#include <string>

#include "polyflow/errors.hpp"

namespace polyflow {

YauProblem::YauProblem(int order, Polygon x0, Polygon y)
    : m(order), initial(std::move(x0)), target(std::move(y)) {
  if (m < 1) throw InvalidArgument("order m must be at least 1");
  if (initial.size() != target.size() || initial.dim() != target.dim()) {
    throw SizeMismatch("initial and target polygons differ in shape (" +
                       std::to_string(initial.size()) + "x" + std::to_string(initial.dim()) +
                       " vs " + std::to_string(target.size()) + "x" +
                       std::to_string(target.dim()) + "); reconcile vertex counts first");
  }
  if (initial.size() < 3) throw InvalidArgument("flow needs at least 3 vertices");
}

Polygon yau_solve(const YauProblem& problem, double t) {
  if (t == 0.0) return problem.initial;
  return solve(problem.difference(), problem.m, t) + problem.target_at(t);
}

Polygon yau_limit(const YauProblem& problem) {
  const auto cx = centroid(problem.initial);
  const auto cy = centroid(problem.target);
  Polygon out = problem.target;
  for (std::size_t j = 0; j < out.size(); ++j) {
    for (std::size_t i = 0; i < out.dim(); ++i) out(j, i) += cx[i] - cy[i];
  }
  return out;
}

YauFlow::YauFlow(YauProblem problem)
    : problem_(std::move(problem)), difference_(problem_.difference(), problem_.m) {}

Polygon YauFlow::evaluate(double t) const {
  if (t == 0.0) return problem_.initial;
  return difference_.evaluate(t) + problem_.target_at(t);
}

YauFlow yau_flow_between(const Polygon& initial, const Polygon& target, int m,
                         ReconcileStrategy strategy) {
  auto [x0, y] = reconcile_vertex_counts(initial, target, strategy);
  return YauFlow(YauProblem(m, std::move(x0), std::move(y)));
}

}  // namespace polyflow
