#pragma once

// Shared test fixtures: seeded random polygons and independent dense oracles.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "polyflow/circulant.hpp"
#include "polyflow/polygon.hpp"

namespace polyflow::testing {

inline std::uint64_t base_seed() {
  if (const char* env = std::getenv("POLYFLOW_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return 20240611ULL;
}

inline std::mt19937_64 rng(std::uint64_t stream = 0) {
  return std::mt19937_64(base_seed() * 1000003ULL + stream);
}

inline Polygon random_polygon(std::mt19937_64& gen, std::size_t n, std::size_t p, double scale = 1.0) {
  std::uniform_real_distribution<double> coord(-scale, scale);
  Polygon x(n, p);
  for (double& v : x.data()) v = coord(gen);
  return x;
}

// Random polygon shifted so that its centroid is (numerically) the origin.
inline Polygon random_centered_polygon(std::mt19937_64& gen, std::size_t n, std::size_t p) {
  Polygon x = random_polygon(gen, n, p);
  const auto c = centroid(x);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < p; ++i) x(j, i) -= c[i];
  }
  return x;
}

inline Polygon unit_square() {
  return Polygon::from_rows({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
}

// Complex linear combination sum_k w_k P_k as a planar polygon.
inline Polygon mode_combination(std::size_t n, const std::vector<std::pair<std::size_t, std::complex<double>>>& terms) {
  std::vector<std::complex<double>> z(n);
  for (const auto& [k, w] : terms) {
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = 2.0 * M_PI * static_cast<double>((j * k) % n) / static_cast<double>(n);
      z[j] += w * std::complex<double>(std::cos(angle), std::sin(angle));
    }
  }
  return Polygon::from_complex(z);
}

// Dense integer matrices for brute-force checks.
using DenseInt = std::vector<std::vector<long long>>;

inline DenseInt dense_second_difference(std::size_t n) {
  DenseInt a(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = -2;
    a[i][(i + 1) % n] += 1;
    a[i][(i + n - 1) % n] += 1;
  }
  return a;
}

inline DenseInt dense_multiply(const DenseInt& a, const DenseInt& b) {
  const std::size_t n = a.size();
  DenseInt c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline DenseInt dense_power(std::size_t n, int m) {
  DenseInt out = dense_second_difference(n);
  for (int i = 1; i < m; ++i) out = dense_multiply(out, dense_second_difference(n));
  return out;
}

inline DenseInt dense_of(const CirculantMatrix& a) {
  const std::size_t n = a.size();
  DenseInt d(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = a.entry(i, j);
  return d;
}

// Dense real matrix-vector product on every coordinate column.
inline Polygon dense_apply(const DenseInt& a, const Polygon& x) {
  Polygon out(x.size(), x.dim());
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t k = 0; k < x.size(); ++k)
      for (std::size_t i = 0; i < x.dim(); ++i) out(j, i) += static_cast<double>(a[j][k]) * x(k, i);
  return out;
}

// Fourier matrix F_{jk} = exp(2 pi i jk / n), built independently of the library.
inline std::vector<std::vector<std::complex<double>>> fourier_matrix(std::size_t n) {
  std::vector<std::vector<std::complex<double>>> f(n, std::vector<std::complex<double>>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) f[j][k] = std::polar(1.0, 2.0 * M_PI * static_cast<double>(j * k) / static_cast<double>(n));
  return f;
}

// (1/n) F diag(d) conj(F) applied to the real columns of x.
inline Polygon fourier_sandwich(const std::vector<double>& d, const Polygon& x) {
  const std::size_t n = x.size();
  const auto f = fourier_matrix(n);
  Polygon out(n, x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    std::vector<std::complex<double>> y(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) y[k] += std::conj(f[j][k]) * x(j, i);
    for (std::size_t k = 0; k < n; ++k) y[k] *= d[k];
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> acc;
      for (std::size_t k = 0; k < n; ++k) acc += f[j][k] * y[k];
      out(j, i) = acc.real() / static_cast<double>(n);
    }
  }
  return out;
}

// Least-squares slope of y against t.
inline double fitted_slope(const std::vector<double>& t, const std::vector<double>& y) {
  const double count = static_cast<double>(t.size());
  double st = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sy += y[i];
  }
  const double mt = st / count, my = sy / count;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    num += (t[i] - mt) * (y[i] - my);
    den += (t[i] - mt) * (t[i] - mt);
  }
  return num / den;
}

inline double sup_distance_to_point(const Polygon& x, const std::vector<double>& c) {
  return max_abs_diff(x, Polygon::constant(x.size(), c));
}

}  // namespace polyflow::testing
