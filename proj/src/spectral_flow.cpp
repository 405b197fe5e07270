#include "polyflow/spectral_flow.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>

#include "polyflow/errors.hpp"

namespace polyflow {

namespace {

// Largest exponent whose exp() is still finite.
const double kMaxExponent = std::log(DBL_MAX);

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

SpectralDecomposition::SpectralDecomposition(const Polygon& x) : n_(x.size()), p_(x.dim()) {
  if (n_ < 3) throw InvalidArgument("spectral decomposition needs at least 3 vertices");

  if (p_ == 2) {
    const auto z = x.to_complex();
    planar_ = idft(z);
  }

  const std::size_t half = n_ / 2;
  modes_.reserve(half + 1);
  basis_.reserve(half + 1);
  norms_.reserve(half + 1);
  std::vector<std::vector<double>> columns(p_);
  for (std::size_t i = 0; i < p_; ++i) columns[i] = x.column(i);

  for (std::size_t k = 0; k <= half; ++k) {
    auto basis = real_basis(n_, k);
    const double cc = dot(basis.cos_part, basis.cos_part);
    const double ss = dot(basis.sin_part, basis.sin_part);
    RealMode mode{k, std::vector<double>(p_, 0.0), std::vector<double>(p_, 0.0)};
    double norm2 = 0.0;
    for (std::size_t i = 0; i < p_; ++i) {
      mode.alpha[i] = dot(basis.cos_part, columns[i]) / cc;
      if (ss > 0.0) mode.beta[i] = dot(basis.sin_part, columns[i]) / ss;
      norm2 += mode.alpha[i] * mode.alpha[i] * cc + mode.beta[i] * mode.beta[i] * ss;
    }
    modes_.push_back(std::move(mode));
    basis_.push_back(std::move(basis));
    norms_.push_back(std::sqrt(norm2));
  }
}

Polygon SpectralDecomposition::component(std::size_t k) const {
  if (k >= modes_.size()) throw InvalidArgument("mode index beyond floor(n/2)");
  Polygon out(n_, p_);
  const auto& b = basis_[k];
  const auto& mode = modes_[k];
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t i = 0; i < p_; ++i) {
      out(j, i) = b.cos_part[j] * mode.alpha[i] + b.sin_part[j] * mode.beta[i];
    }
  }
  return out;
}

bool SpectralDecomposition::is_present(std::size_t k) const {
  if (k >= norms_.size()) return false;
  const double largest = *std::max_element(norms_.begin(), norms_.end());
  return largest > 0.0 && norms_[k] > kModePresenceThreshold * largest;
}

Polygon SpectralDecomposition::reconstruct() const {
  Polygon out(n_, p_);
  for (std::size_t k = 0; k < modes_.size(); ++k) out += component(k);
  return out;
}

Polygon SpectralDecomposition::reconstruct_planar() const {
  if (!has_planar_view()) throw InvalidArgument("planar reconstruction requires p = 2");
  const auto z = dft(planar_);
  return Polygon::from_complex(z);
}

FlowSolution::FlowSolution(const Polygon& initial, int m)
    : initial_(initial),
      m_(m),
      decomposition_(initial),
      eigenvalues_(flow_eigenvalues(initial.size(), m)),
      centroid_(polyflow::centroid(initial)),
      constant_(initial.is_constant()) {}

void FlowSolution::check_range(double t) const {
  for (std::size_t k = 1; k < decomposition_.mode_count(); ++k) {
    if (!decomposition_.is_present(k)) continue;
    const double exponent = eigenvalues_[k] * t;
    if (exponent > kMaxExponent) {
      throw RangeError("exp(" + std::to_string(exponent) + ") overflows at t = " +
                       std::to_string(t) + " for mode " + std::to_string(k));
    }
  }
}

Polygon FlowSolution::evaluate(double t) const {
  return initial_.dim() == 2 ? evaluate_planar(t) : evaluate_real(t);
}

Polygon FlowSolution::evaluate_planar(double t) const {
  if (initial_.dim() != 2) throw InvalidArgument("planar evaluation requires p = 2");
  if (constant_ || t == 0.0) return initial_;
  check_range(t);
  const auto a = decomposition_.planar();
  const std::size_t n = a.size();
  std::vector<Complex> evolved(n);
  evolved[0] = a[0];
  for (std::size_t k = 1; k < n; ++k) {
    if (decomposition_.is_present(std::min(k, n - k))) evolved[k] = a[k] * std::exp(eigenvalues_[k] * t);
  }
  auto out = Polygon::from_complex(dft(evolved));
  if (!out.all_finite()) throw RangeError("planar flow evaluation is not finite at t = " + std::to_string(t));
  return out;
}

Polygon FlowSolution::evaluate_real(double t) const {
  if (constant_ || t == 0.0) return initial_;
  check_range(t);
  Polygon out = decomposition_.component(0);
  for (std::size_t k = 1; k < decomposition_.mode_count(); ++k) {
    if (!decomposition_.is_present(k)) continue;
    out += decomposition_.component(k) * std::exp(eigenvalues_[k] * t);
  }
  if (!out.all_finite()) throw RangeError("flow evaluation is not finite at t = " + std::to_string(t));
  return out;
}

Polygon FlowSolution::rescaled(double t, std::size_t k) const {
  if (k == 0 || k >= decomposition_.mode_count()) {
    throw InvalidArgument("rescaling mode must satisfy 1 <= k <= floor(n/2)");
  }
  Polygon out(initial_.size(), initial_.dim());
  for (std::size_t l = 1; l < decomposition_.mode_count(); ++l) {
    if (!decomposition_.is_present(l)) continue;
    const double exponent = (eigenvalues_[l] - eigenvalues_[k]) * t;
    if (exponent > kMaxExponent) {
      throw RangeError("rescaled evaluation overflows at t = " + std::to_string(t));
    }
    out += decomposition_.component(l) * std::exp(exponent);
  }
  if (!out.all_finite()) throw RangeError("rescaled evaluation is not finite");
  return out;
}

std::optional<std::size_t> FlowSolution::dominant_mode(LimitDirection direction) const {
  const std::size_t count = decomposition_.mode_count();
  if (direction == LimitDirection::forward) {
    for (std::size_t k = 1; k < count; ++k) {
      if (decomposition_.is_present(k)) return k;
    }
  } else {
    for (std::size_t k = count - 1; k >= 1; --k) {
      if (decomposition_.is_present(k)) return k;
    }
  }
  return std::nullopt;
}

RescaledLimit FlowSolution::rescaled_limit(LimitDirection direction) const {
  const auto k = dominant_mode(direction);
  if (!k) throw DegenerateError("constant polygon has no limit shape under rescaling");
  return {*k, eigenvalues_[*k], decomposition_.component(*k)};
}

SpectralDecomposition decompose(const Polygon& x) { return SpectralDecomposition(x); }

Polygon solve(const Polygon& initial, int m, double t) {
  return FlowSolution(initial, m).evaluate(t);
}

RescaledLimit rescaled_limit(const Polygon& initial, int m, LimitDirection direction) {
  return FlowSolution(initial, m).rescaled_limit(direction);
}

std::optional<SelfSimilarity> classify_self_similar(const Polygon& x, int m) {
  if (x.is_constant()) return SelfSimilarity{0, 0.0, true};
  const SpectralDecomposition decomposition(x);
  const auto& norms = decomposition.component_norms();
  double total2 = 0.0;
  for (double v : norms) total2 += v * v;
  if (total2 == 0.0) return SelfSimilarity{0, 0.0, true};

  for (std::size_t k = 0; k < norms.size(); ++k) {
    double rest2 = 0.0;
    for (std::size_t l = 0; l < norms.size(); ++l) {
      if (l != k) rest2 += norms[l] * norms[l];
    }
    if (std::sqrt(rest2 / total2) < kSelfSimilarTolerance) {
      if (k == 0) return SelfSimilarity{0, 0.0, true};
      return SelfSimilarity{k, flow_eigenvalue(x.size(), m, k), false};
    }
  }
  return std::nullopt;
}

Polygon affine_pushforward(const Polygon& x, std::span<const double> linear,
                           std::span<const double> translation) {
  const std::size_t p = x.dim();
  if (linear.size() != p * p) {
    throw SizeMismatch("affine map needs a " + std::to_string(p) + "x" + std::to_string(p) + " matrix");
  }
  if (translation.size() != p) {
    throw SizeMismatch("affine translation needs " + std::to_string(p) + " components");
  }
  Polygon out(x.size(), p);
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t c = 0; c < p; ++c) {
      double v = translation[c];
      for (std::size_t r = 0; r < p; ++r) v += x(j, r) * linear[r * p + c];
      out(j, c) = v;
    }
  }
  return out;
}

}  // namespace polyflow
