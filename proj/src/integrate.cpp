#include "polyflow/integrate.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "polyflow/errors.hpp"

namespace polyflow {

namespace {

void validate_kind(const Polygon& x, const RhsKind& kind) {
  if (x.size() < 3) throw InvalidArgument("flow needs at least 3 vertices");
  if (kind.m < 1) throw InvalidArgument("order m must be at least 1");
  if (kind.target && (kind.target->size() != x.size() || kind.target->dim() != x.dim())) {
    throw SizeMismatch("Yau target shape does not match the evolving polygon");
  }
}

Polygon shifted(const Polygon& x, const RhsKind& kind) {
  return kind.target ? x - *kind.target : x;
}

class FlowOperator {
 public:
  FlowOperator(std::size_t n, const RhsKind& kind)
      : matrix_(power_of_m(static_cast<int>(n), kind.m).signed_for_order(kind.m)), kind_(kind) {}

  Polygon operator()(const Polygon& x) const { return apply(matrix_, shifted(x, kind_)); }

 private:
  CirculantMatrix matrix_;
  const RhsKind& kind_;
};

}  // namespace

Polygon rhs(const Polygon& x, const RhsKind& kind) {
  validate_kind(x, kind);
  return FlowOperator(x.size(), kind)(x);
}

Polygon rhs_stencil(const Polygon& x, const RhsKind& kind) {
  validate_kind(x, kind);
  const Polygon z = shifted(x, kind);
  const int m = kind.m;
  const double outer = (m % 2 == 1) ? 1.0 : -1.0;
  Polygon out(z.size(), z.dim());
  const auto n = static_cast<std::ptrdiff_t>(z.size());
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    auto dst = out.vertex(j);
    for (int k = 0; k <= 2 * m; ++k) {
      const double coeff = outer * ((k % 2 == 0) ? 1.0 : -1.0) * static_cast<double>(binomial(2 * m, k));
      const auto src = z.vertex(j - m + k);
      for (std::size_t i = 0; i < z.dim(); ++i) dst[i] += coeff * src[i];
    }
  }
  return out;
}

double stiffest_rate(std::size_t n, int m) {
  return std::abs(flow_eigenvalue(n, m, n / 2));
}

IntegrationResult integrate(const Polygon& initial, const IntegratorConfig& config) {
  validate_kind(initial, config.rhs);
  if (!(config.dt > 0.0) || !std::isfinite(config.dt)) throw InvalidArgument("dt must be positive");
  if (!(config.final_time >= 0.0) || !std::isfinite(config.final_time)) {
    throw InvalidArgument("final time must be non-negative");
  }
  if (config.record_every == 0) throw InvalidArgument("record_every must be positive");

  IntegrationResult result;
  result.trajectory.kind = config.rhs.kind();
  result.trajectory.m = config.rhs.m;

  const double ratio = config.final_time / config.dt;
  auto whole_steps = static_cast<std::size_t>(std::floor(ratio));
  double last_step = 0.0;
  if (std::abs(ratio - std::round(ratio)) <= 1e-9 * std::max(1.0, ratio)) {
    whole_steps = static_cast<std::size_t>(std::llround(ratio));
  } else {
    last_step = config.final_time - static_cast<double>(whole_steps) * config.dt;
    result.partial_final_step = true;
  }

  const double stiffness = config.dt * stiffest_rate(initial.size(), config.rhs.m);
  if (stiffness > kRk4StabilityBound) {
    std::ostringstream msg;
    msg << "dt * |lambda_max| = " << stiffness << " exceeds the RK4 stability bound "
        << kRk4StabilityBound << "; expect blowup (use dt <= "
        << 0.1 / stiffest_rate(initial.size(), config.rhs.m) << ")";
    result.stiffness_warning = true;
    result.trajectory.warnings.push_back(msg.str());
  }

  const FlowOperator f(initial.size(), config.rhs);
  Polygon x = initial;
  result.trajectory.samples.push_back({0.0, x});

  auto step = [&](double h, std::size_t index) {
    const Polygon k1 = f(x);
    const Polygon k2 = f(x + k1 * (0.5 * h));
    const Polygon k3 = f(x + k2 * (0.5 * h));
    const Polygon k4 = f(x + k3 * h);
    x += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    if (!x.all_finite()) {
      std::ostringstream msg;
      msg << "RK4 state became non-finite at step " << index << " (last finite norm "
          << frobenius_norm(k1) << " of the right-hand side)";
      throw RangeError(msg.str());
    }
  };

  const std::size_t total = whole_steps + (result.partial_final_step ? 1 : 0);
  for (std::size_t s = 1; s <= whole_steps; ++s) {
    step(config.dt, s);
    if (s % config.record_every == 0 || s == total) {
      result.trajectory.samples.push_back({static_cast<double>(s) * config.dt, x});
    }
  }
  if (result.partial_final_step) {
    step(last_step, total);
    result.trajectory.samples.push_back({config.final_time, x});
  }
  result.steps = total;
  return result;
}

}  // namespace polyflow
