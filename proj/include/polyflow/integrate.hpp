#pragma once

#include <cstddef>
#include <optional>

#include "polyflow/circulant.hpp"
#include "polyflow/polygon.hpp"
#include "polyflow/trajectory.hpp"

namespace polyflow {

// Right-hand side selector: polyharmonic (target empty) or Yau (target set).
struct RhsKind {
  int m = 1;
  std::optional<Polygon> target;

  static RhsKind polyharmonic(int m) { return {m, std::nullopt}; }
  static RhsKind yau(int m, Polygon target) { return {m, std::move(target)}; }

  FlowKind kind() const { return target ? FlowKind::yau : FlowKind::polyharmonic; }
};

// RK4 amplification of z = dt * lambda stays below 1 in modulus for
// -2.785 <= z <= 0 on the real axis.
inline constexpr double kRk4StabilityBound = 2.8;

struct IntegratorConfig {
  double dt = 1e-3;
  double final_time = 1.0;
  RhsKind rhs;
  // Keep every k-th step in the trajectory (the initial and final states are
  // always kept).
  std::size_t record_every = 1;
};

/// (-1)^{m+1} M^m X, or (-1)^{m+1} M^m (X - Y), via circulant application.
Polygon rhs(const Polygon& x, const RhsKind& kind);

/// Same right-hand side from the per-vertex stencil
/// (-1)^{m+1} sum_{k=0}^{2m} (-1)^k C(2m,k) X_{j-m+k}.
Polygon rhs_stencil(const Polygon& x, const RhsKind& kind);

struct IntegrationResult {
  Trajectory trajectory;
  std::size_t steps = 0;
  bool partial_final_step = false;
  bool stiffness_warning = false;
};

/// Classical fixed-step RK4 from t = 0 to final_time. When final_time is not
/// a whole number of steps the final step is shortened and flagged. Throws
/// RangeError (with step and norm) if the state stops being finite.
IntegrationResult integrate(const Polygon& initial, const IntegratorConfig& config);

// Largest |lambda_{m,k}|, attained at k = floor(n/2).
double stiffest_rate(std::size_t n, int m);

}  // namespace polyflow
