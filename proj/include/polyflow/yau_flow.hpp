#pragma once

#include <utility>

#include "polyflow/polygon.hpp"
#include "polyflow/spectral_flow.hpp"

namespace polyflow {

// dX/dt = (-1)^{m+1} M^m (X - Y) toward a fixed target Y.
struct YauProblem {
  int m = 1;
  Polygon initial;
  Polygon target;

  YauProblem(int order, Polygon x0, Polygon y);

  // Hook for time-dependent targets; only constant targets are supported.
  const Polygon& target_at(double /*t*/) const { return target; }

  Polygon difference() const { return initial - target; }
};

Polygon yau_solve(const YauProblem& problem, double t);

// Y translated by centroid(X0) - centroid(Y).
Polygon yau_limit(const YauProblem& problem);

// Evaluator closing over the spectral data of the difference polygon X0 - Y.
class YauFlow {
 public:
  explicit YauFlow(YauProblem problem);

  const YauProblem& problem() const noexcept { return problem_; }
  const FlowSolution& difference_flow() const noexcept { return difference_; }

  Polygon evaluate(double t) const;
  Polygon limit() const { return yau_limit(problem_); }
  // Rescaled limit of the difference polygon (forward: toward the translate
  // of Y; ancient: t -> -infinity).
  RescaledLimit rescaled_limit(LimitDirection direction) const {
    return difference_.rescaled_limit(direction);
  }

 private:
  YauProblem problem_;
  FlowSolution difference_;
};

// Reconciles vertex counts, then builds the problem and its evaluator.
YauFlow yau_flow_between(const Polygon& initial, const Polygon& target, int m,
                         ReconcileStrategy strategy = ReconcileStrategy::midpoint);

}  // namespace polyflow
