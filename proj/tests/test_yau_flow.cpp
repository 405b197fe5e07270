#include <doctest.h>

#include <cmath>
#include <vector>

#include "polyflow/circulant.hpp"
#include "polyflow/errors.hpp"
#include "polyflow/integrate.hpp"
#include "polyflow/yau_flow.hpp"
#include "support/fixtures.hpp"

using namespace polyflow;
using polyflow::testing::random_polygon;
using polyflow::testing::rng;

TEST_CASE("problem validation") {
  auto gen = rng(40);
  const auto a = random_polygon(gen, 5, 2);
  CHECK_THROWS_AS(YauProblem(1, a, random_polygon(gen, 6, 2)), SizeMismatch);
  CHECK_THROWS_AS(YauProblem(1, a, random_polygon(gen, 5, 3)), SizeMismatch);
  CHECK_THROWS_AS(YauProblem(0, a, a), InvalidArgument);
  CHECK_THROWS_AS(YauProblem(1, Polygon::from_rows({{0, 0}, {1, 1}}), Polygon::from_rows({{0, 0}, {1, 1}})),
                  InvalidArgument);
  const YauProblem ok(2, a, a);
  CHECK(&ok.target_at(3.0) == &ok.target);
}

TEST_CASE("X0 = Y is stationary") {
  auto gen = rng(41);
  for (int m = 1; m <= 3; ++m) {
    const auto y = random_polygon(gen, 6, 3);
    const YauProblem problem(m, y, y);
    for (double t : {-5.0, 0.0, 1.0, 50.0}) CHECK(yau_solve(problem, t) == y);
    CHECK(yau_limit(problem) == y);
  }
}

TEST_CASE("single mode difference") {
  auto gen = rng(42);
  const std::size_t n = 7;
  const auto y = random_polygon(gen, n, 2);
  for (int m = 1; m <= 3; ++m) {
    for (std::size_t k = 1; k < n; ++k) {
      const double c = 0.75;
      const auto pk = polyflow::testing::mode_combination(n, {{k, Complex(c, 0.0)}});
      const YauProblem problem(m, y + pk, y);
      for (double t : {0.0, 0.4, 2.0}) {
        const auto expected = y + pk * std::exp(flow_eigenvalue(n, m, k) * t);
        CHECK(max_abs_diff(yau_solve(problem, t), expected) < 1e-13);
      }
    }
  }
}

TEST_CASE("yau_solve equals the Fourier sandwich form") {
  auto gen = rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 9);
    const std::size_t p = 2 + static_cast<std::size_t>(trial % 3);
    const int m = 1 + trial % 4;
    const auto x0 = random_polygon(gen, n, p);
    const auto y = random_polygon(gen, n, p);
    const YauProblem problem(m, x0, y);
    for (double t : {0.0, 0.3, 1.7}) {
      std::vector<double> d(n);
      for (std::size_t k = 0; k < n; ++k) d[k] = std::exp(flow_eigenvalue(n, m, k) * t);
      const auto oracle = polyflow::testing::fourier_sandwich(d, x0 - y) + y;
      CHECK(max_abs_diff(yau_solve(problem, t), oracle) < 1e-10);
    }
  }
}

TEST_CASE("yau_solve matches RK4") {
  auto gen = rng(44);
  for (int trial = 0; trial < 5; ++trial) {
    const auto x0 = random_polygon(gen, 5, 2);
    const auto y = random_polygon(gen, 5, 2);
    IntegratorConfig config;
    config.dt = 1e-3;
    config.final_time = 1.0;
    config.rhs = RhsKind::yau(2, y);
    const auto result = integrate(x0, config);
    CHECK(sup_vertex_distance(result.trajectory.samples.back().polygon, yau_solve(YauProblem(2, x0, y), 1.0)) < 1e-6);
  }
}

TEST_CASE("limit is the translate of the target") {
  auto gen = rng(45);
  const auto y = random_polygon(gen, 6, 2);
  const std::vector<double> d{1.25, -0.5};
  const YauProblem shifted(2, y + Polygon::constant(6, d), y);
  CHECK(max_abs_diff(yau_limit(shifted), y + Polygon::constant(6, d)) < 1e-15);
  // pure mode-0 difference: the solution is the shifted target at all times
  CHECK(max_abs_diff(yau_solve(shifted, 3.0), y + Polygon::constant(6, d)) < 1e-14);

  // equal centroids: the limit is Y itself
  const auto x0 = polyflow::testing::random_centered_polygon(gen, 6, 2);
  const auto yc = polyflow::testing::random_centered_polygon(gen, 6, 2);
  const YauProblem centered(1, x0, yc);
  const auto lim = yau_limit(centered);
  CHECK(max_abs_diff(lim, yc) < 1e-15);
  const double t = 40.0 / std::abs(flow_eigenvalue(6, 1, 1));
  CHECK(max_abs_diff(yau_solve(centered, t), yc) < 1e-8);
}

TEST_CASE("exponential approach at the dominant rate of the difference") {
  auto gen = rng(46);
  for (int m = 1; m <= 2; ++m) {
    const auto x0 = random_polygon(gen, 5, 2);
    const auto y = random_polygon(gen, 5, 2);
    const YauFlow flow(YauProblem(m, x0, y));
    const auto limit = flow.limit();
    std::vector<double> ts, logs;
    for (int s = 0; s <= 50; ++s) {
      const double t = 5.0 + 0.1 * s;
      ts.push_back(t);
      logs.push_back(std::log(max_abs_diff(flow.evaluate(t), limit)));
    }
    const double rate = flow.rescaled_limit(LimitDirection::forward).rate;
    CHECK(rate == flow_eigenvalue(5, m, 1));
    CHECK(std::abs(polyflow::testing::fitted_slope(ts, logs) - rate) < 0.01 * std::abs(rate));
  }
}

TEST_CASE("energy of the difference decreases") {
  auto gen = rng(47);
  for (int m = 1; m <= 3; ++m) {
    const auto x0 = random_polygon(gen, 8, 3);
    const auto y = random_polygon(gen, 8, 3);
    const YauFlow flow(YauProblem(m, x0, y));
    double previous = energy(x0 - y, m);
    for (int s = 1; s <= 40; ++s) {
      const double e = energy(flow.evaluate(0.05 * s) - y, m);
      CHECK(e < previous);
      previous = e;
    }
  }
}

TEST_CASE("convergence speed is ordered in m") {
  auto gen = rng(48);
  for (int trial = 0; trial < 5; ++trial) {
    for (std::size_t n : {5u, 7u}) {
      const auto x0 = random_polygon(gen, n, 2);
      const auto y = random_polygon(gen, n, 2);
      const double t = 3.0;
      std::vector<double> distances;
      for (int m = 1; m <= 3; ++m) {
        const YauProblem problem(m, x0, y);
        distances.push_back(max_abs_diff(yau_solve(problem, t), yau_limit(problem)));
      }
      if (n == 5) {
        // |lambda_1| > 1: larger m converges faster
        CHECK(distances[1] < distances[0]);
        CHECK(distances[2] < distances[1]);
      } else {
        CHECK(distances[1] > distances[0]);
        CHECK(distances[2] > distances[1]);
      }
    }
  }
}

TEST_CASE("flowing between polygons with different vertex counts") {
  const auto quad = Polygon::from_rows({{0, 0}, {2, 0}, {2, 1}, {0, 1.5}});
  const auto pentagon = eigen_polygon(5, 1);
  const auto triangle = Polygon::from_rows({{0, 0}, {1, 0}, {0.5, 1}});

  const auto fig_a = yau_flow_between(quad, pentagon, 1, ReconcileStrategy::duplicate);
  CHECK(fig_a.problem().initial.size() == 5);
  CHECK(fig_a.problem().target == pentagon);
  CHECK(fig_a.evaluate(0.0) == fig_a.problem().initial);

  const auto fig_b = yau_flow_between(pentagon, triangle, 3, ReconcileStrategy::duplicate);
  const auto& y_b = fig_b.problem().target;
  CHECK(y_b.size() == 5);
  for (std::size_t j = 2; j < 5; ++j) {
    CHECK(y_b(j, 0) == 0.5);
    CHECK(y_b(j, 1) == 1.0);
  }

  const auto fig_c = yau_flow_between(pentagon, triangle, 3);
  const auto& y_c = fig_c.problem().target;
  CHECK(y_c.size() == 5);
  CHECK_FALSE(y_c == y_b);

  for (const auto* flow : {&fig_a, &fig_b, &fig_c}) {
    const int m = flow->problem().m;
    const double t = 40.0 / std::abs(flow_eigenvalue(5, m, 1));
    CHECK(max_abs_diff(flow->evaluate(t), flow->limit()) < 1e-8);
  }

  // a segment target: the limit is a translated segment
  const auto segment = Polygon::from_rows({{-1, 0}, {-0.5, 0}, {0, 0}, {0.5, 0}, {1, 0}});
  const auto to_segment = yau_flow_between(pentagon, segment, 2);
  const auto lim = to_segment.limit();
  for (std::size_t j = 0; j < 5; ++j) CHECK(std::abs(lim(j, 1) - lim(0, 1)) < 1e-15);

  CHECK_THROWS_AS(yau_flow_between(pentagon, Polygon::from_rows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), 1),
                  SizeMismatch);
}

TEST_CASE("ancient rescaled limit of the difference") {
  auto gen = rng(49);
  const auto x0 = random_polygon(gen, 6, 2);
  const auto y = random_polygon(gen, 6, 2);
  const YauFlow flow(YauProblem(1, x0, y));
  const auto lim = flow.rescaled_limit(LimitDirection::ancient);
  CHECK(lim.mode == 3);
  CHECK(max_abs_diff(lim.limit, decompose(x0 - y).component(3)) < 1e-14);
}
