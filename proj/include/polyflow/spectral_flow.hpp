#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polyflow/circulant.hpp"
#include "polyflow/polygon.hpp"

namespace polyflow {

// A mode pair counts as present above this fraction of the largest pair norm.
inline constexpr double kModePresenceThreshold = 1e-12;
// Relative residual below which a polygon is taken to lie in a single mode pair.
inline constexpr double kSelfSimilarTolerance = 1e-9;

// Real coefficients of one mode k in the (c_k, s_k) basis, one entry per
// coordinate column: x_i = sum_k alpha_{ik} c_k + beta_{ik} s_k.
struct RealMode {
  std::size_t k = 0;
  std::vector<double> alpha;
  std::vector<double> beta;  // zero when s_k vanishes (k = 0, k = n/2)
};

class SpectralDecomposition {
 public:
  explicit SpectralDecomposition(const Polygon& x);

  std::size_t size() const noexcept { return n_; }
  std::size_t dim() const noexcept { return p_; }

  // Complex coefficients a_k, k = 0..n-1, with X = sum a_k P_k. Planar only.
  bool has_planar_view() const noexcept { return p_ == 2; }
  std::span<const Complex> planar() const noexcept { return planar_; }

  // Modes k = 0..floor(n/2).
  std::span<const RealMode> real_modes() const noexcept { return modes_; }
  std::size_t mode_count() const noexcept { return modes_.size(); }

  // The part of X carried by mode pair k: (c_k s_k) [alpha_k; beta_k].
  Polygon component(std::size_t k) const;
  const std::vector<double>& component_norms() const noexcept { return norms_; }
  bool is_present(std::size_t k) const;

  Polygon reconstruct() const;
  Polygon reconstruct_planar() const;

 private:
  std::size_t n_;
  std::size_t p_;
  std::vector<Complex> planar_;
  std::vector<RealMode> modes_;
  std::vector<RealBasisVectors> basis_;
  std::vector<double> norms_;  // Frobenius norm of component(k)
};

enum class LimitDirection { forward, ancient };

struct RescaledLimit {
  std::size_t mode = 0;  // k*
  double rate = 0.0;     // lambda_{m,k*}
  Polygon limit;
};

struct SelfSimilarity {
  std::size_t mode = 0;
  double rate = 0.0;
  bool is_trivial = false;  // constant polygon: stationary, no rotation or translation
};

/// Exact solution of dX/dt = (-1)^{m+1} M^m X from fixed initial data,
/// X(t) = sum_k a_k e^{lambda_{m,k} t} P_k. Any real t is accepted; large
/// negative t throws RangeError instead of producing inf.
class FlowSolution {
 public:
  FlowSolution(const Polygon& initial, int m);

  int order() const noexcept { return m_; }
  const Polygon& initial() const noexcept { return initial_; }
  const SpectralDecomposition& decomposition() const noexcept { return decomposition_; }
  std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
  const std::vector<double>& centroid() const noexcept { return centroid_; }

  // Dispatches to the complex path for p = 2 and the real path otherwise.
  Polygon evaluate(double t) const;
  Polygon evaluate_planar(double t) const;
  Polygon evaluate_real(double t) const;

  // e^{-lambda_{m,k} t} (X(t) - centroid), summed mode by mode so that
  // no cancellation against the centroid occurs. Absent modes are dropped.
  Polygon rescaled(double t, std::size_t k) const;

  std::optional<std::size_t> dominant_mode(LimitDirection direction) const;
  RescaledLimit rescaled_limit(LimitDirection direction) const;

 private:
  void check_range(double t) const;

  Polygon initial_;
  int m_;
  SpectralDecomposition decomposition_;
  std::vector<double> eigenvalues_;
  std::vector<double> centroid_;
  bool constant_;
};

SpectralDecomposition decompose(const Polygon& x);

Polygon solve(const Polygon& initial, int m, double t);

RescaledLimit rescaled_limit(const Polygon& initial, int m, LimitDirection direction);

std::optional<SelfSimilarity> classify_self_similar(const Polygon& x, int m);

// X E + (a, ..., a); E is p x p row-major.
Polygon affine_pushforward(const Polygon& x, std::span<const double> linear,
                           std::span<const double> translation);

}  // namespace polyflow
