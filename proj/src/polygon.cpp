#include "polyflow/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polyflow/circulant.hpp"
#include "polyflow/errors.hpp"

namespace polyflow {

namespace {

std::size_t wrap(std::ptrdiff_t j, std::size_t n) {
  const auto sn = static_cast<std::ptrdiff_t>(n);
  auto r = j % sn;
  if (r < 0) r += sn;
  return static_cast<std::size_t>(r);
}

void require_same_shape(const Polygon& a, const Polygon& b, const char* what) {
  if (a.size() != b.size() || a.dim() != b.dim()) {
    throw SizeMismatch(std::string(what) + ": polygons are " + std::to_string(a.size()) + "x" +
                       std::to_string(a.dim()) + " and " + std::to_string(b.size()) + "x" +
                       std::to_string(b.dim()));
  }
}

}  // namespace

Polygon::Polygon(std::size_t n, std::size_t p) : n_(n), p_(p), coords_(n * p, 0.0) {
  if (n == 0) throw InvalidArgument("polygon needs at least one vertex");
  if (p < 2) throw InvalidArgument("polygon ambient dimension must be at least 2");
}

Polygon::Polygon(std::size_t n, std::size_t p, std::vector<double> coords)
    : n_(n), p_(p), coords_(std::move(coords)) {
  if (n == 0) throw InvalidArgument("polygon needs at least one vertex");
  if (p < 2) throw InvalidArgument("polygon ambient dimension must be at least 2");
  if (coords_.size() != n * p) {
    throw SizeMismatch("polygon coordinate count " + std::to_string(coords_.size()) +
                       " does not match " + std::to_string(n) + "x" + std::to_string(p));
  }
  if (!all_finite()) throw InvalidArgument("polygon coordinates must be finite");
}

Polygon Polygon::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw InvalidArgument("polygon needs at least one vertex");
  const std::size_t p = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * p);
  for (const auto& row : rows) {
    if (row.size() != p) throw SizeMismatch("ragged vertex rows");
    coords.insert(coords.end(), row.begin(), row.end());
  }
  return Polygon(rows.size(), p, std::move(coords));
}

Polygon Polygon::constant(std::size_t n, std::span<const double> point) {
  return replicate(n, point);
}

Polygon Polygon::from_complex(std::span<const Complex> z) {
  Polygon x(z.size(), 2);
  for (std::size_t j = 0; j < z.size(); ++j) {
    x(j, 0) = z[j].real();
    x(j, 1) = z[j].imag();
  }
  return x;
}

std::span<const double> Polygon::vertex(std::ptrdiff_t j) const {
  return std::span<const double>(coords_).subspan(wrap(j, n_) * p_, p_);
}

std::span<double> Polygon::vertex(std::ptrdiff_t j) {
  return std::span<double>(coords_).subspan(wrap(j, n_) * p_, p_);
}

std::vector<double> Polygon::column(std::size_t i) const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = (*this)(j, i);
  return out;
}

void Polygon::set_column(std::size_t i, std::span<const double> values) {
  if (values.size() != n_) throw SizeMismatch("column length does not match vertex count");
  for (std::size_t j = 0; j < n_; ++j) (*this)(j, i) = values[j];
}

std::vector<Complex> Polygon::to_complex() const {
  if (p_ != 2) throw InvalidArgument("complex view requires a planar polygon");
  std::vector<Complex> z(n_);
  for (std::size_t j = 0; j < n_; ++j) z[j] = {(*this)(j, 0), (*this)(j, 1)};
  return z;
}

bool Polygon::is_constant() const noexcept {
  for (std::size_t j = 1; j < n_; ++j) {
    for (std::size_t i = 0; i < p_; ++i) {
      if (coords_[j * p_ + i] != coords_[i]) return false;
    }
  }
  return true;
}

bool Polygon::all_finite() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double v) { return std::isfinite(v); });
}

Polygon& Polygon::operator+=(const Polygon& other) {
  require_same_shape(*this, other, "polygon addition");
  for (std::size_t q = 0; q < coords_.size(); ++q) coords_[q] += other.coords_[q];
  return *this;
}

Polygon& Polygon::operator-=(const Polygon& other) {
  require_same_shape(*this, other, "polygon subtraction");
  for (std::size_t q = 0; q < coords_.size(); ++q) coords_[q] -= other.coords_[q];
  return *this;
}

Polygon& Polygon::operator*=(double s) {
  for (double& v : coords_) v *= s;
  return *this;
}

double max_abs_diff(const Polygon& a, const Polygon& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t q = 0; q < a.data().size(); ++q) {
    worst = std::max(worst, std::abs(a.data()[q] - b.data()[q]));
  }
  return worst;
}

double sup_vertex_distance(const Polygon& a, const Polygon& b) {
  require_same_shape(a, b, "sup_vertex_distance");
  double worst = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const double d = a(j, i) - b(j, i);
      s += d * d;
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

double sup_norm(const Polygon& a) {
  double worst = 0.0;
  for (double v : a.data()) worst = std::max(worst, std::abs(v));
  return worst;
}

double frobenius_norm(const Polygon& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

std::vector<double> difference(const Polygon& x, int order, std::ptrdiff_t j) {
  if (order < 1) throw InvalidArgument("difference order must be at least 1");
  std::vector<double> out(x.dim(), 0.0);
  for (int k = 0; k <= order; ++k) {
    const auto sign = ((order + k) % 2 == 0) ? 1.0 : -1.0;
    const auto coeff = sign * static_cast<double>(binomial(order, k));
    const auto v = x.vertex(j + k);
    for (std::size_t i = 0; i < x.dim(); ++i) out[i] += coeff * v[i];
  }
  return out;
}

Polygon normals(const Polygon& x) {
  if (x.size() < 3) throw InvalidArgument("normals need at least 3 vertices");
  Polygon out(x.size(), x.dim());
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const auto prev = x.vertex(j - 1);
    const auto cur = x.vertex(j);
    const auto next = x.vertex(j + 1);
    auto dst = out.vertex(j);
    for (std::size_t i = 0; i < x.dim(); ++i) dst[i] = (next[i] - cur[i]) + (prev[i] - cur[i]);
  }
  return out;
}

double energy(const Polygon& x, int order) {
  double total = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    for (double d : difference(x, order, j)) total += d * d;
  }
  return 0.5 * total;
}

std::vector<double> centroid(const Polygon& x) {
  std::vector<double> c(x.dim(), 0.0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t i = 0; i < x.dim(); ++i) c[i] += x(j, i);
  }
  for (double& v : c) v /= static_cast<double>(x.size());
  return c;
}

Polygon replicate(std::size_t n, std::span<const double> point) {
  std::vector<double> coords;
  coords.reserve(n * point.size());
  for (std::size_t j = 0; j < n; ++j) coords.insert(coords.end(), point.begin(), point.end());
  return Polygon(n, point.size(), std::move(coords));
}

Complex unit_root(std::size_t n, long long q) {
  const auto sn = static_cast<long long>(n);
  q %= sn;
  if (q < 0) q += sn;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

Polygon eigen_polygon(std::size_t n, std::size_t k) {
  if (n == 0) throw InvalidArgument("eigen_polygon needs n >= 1");
  if (k >= n) throw InvalidArgument("eigen_polygon index k must satisfy 0 <= k < n");
  Polygon x(n, 2);
  for (std::size_t j = 0; j < n; ++j) {
    const auto w = unit_root(n, static_cast<long long>(j * k));
    x(j, 0) = w.real();
    x(j, 1) = w.imag();
  }
  return x;
}

RealBasisVectors real_basis(std::size_t n, std::size_t k) {
  if (n == 0) throw InvalidArgument("real_basis needs n >= 1");
  RealBasisVectors b{n, k, std::vector<double>(n), std::vector<double>(n)};
  const bool real_mode = (k % n == 0) || (2 * (k % n) == n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto w = unit_root(n, static_cast<long long>(j * k));
    b.cos_part[j] = w.real();
    // sin part vanishes identically for k = 0 and k = n/2.
    b.sin_part[j] = real_mode ? 0.0 : w.imag();
  }
  return b;
}

Polygon augment_vertices(const Polygon& x, std::size_t target_n, ReconcileStrategy strategy) {
  if (target_n < x.size()) throw InvalidArgument("cannot reduce the vertex count");
  std::vector<std::vector<double>> rows;
  rows.reserve(target_n);
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto v = x.vertex(static_cast<std::ptrdiff_t>(j));
    rows.emplace_back(v.begin(), v.end());
  }

  if (strategy == ReconcileStrategy::duplicate) {
    while (rows.size() < target_n) rows.push_back(rows.back());
    return Polygon::from_rows(rows);
  }

  auto edge_length2 = [&](std::size_t e) {
    const auto& a = rows[e];
    const auto& b = rows[(e + 1) % rows.size()];
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (b[i] - a[i]) * (b[i] - a[i]);
    return s;
  };

  while (rows.size() < target_n) {
    std::size_t best = 0;
    double best_len = edge_length2(0);
    for (std::size_t e = 1; e < rows.size(); ++e) {
      const double len = edge_length2(e);
      if (len > best_len) {
        best = e;
        best_len = len;
      }
    }
    const auto& a = rows[best];
    const auto& b = rows[(best + 1) % rows.size()];
    std::vector<double> mid(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mid[i] = 0.5 * (a[i] + b[i]);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(best + 1), std::move(mid));
  }
  return Polygon::from_rows(rows);
}

std::pair<Polygon, Polygon> reconcile_vertex_counts(const Polygon& a, const Polygon& b,
                                                    ReconcileStrategy strategy) {
  if (a.dim() != b.dim()) {
    throw SizeMismatch("cannot reconcile polygons in R^" + std::to_string(a.dim()) + " and R^" +
                       std::to_string(b.dim()));
  }
  const std::size_t n = std::max(a.size(), b.size());
  return {augment_vertices(a, n, strategy), augment_vertices(b, n, strategy)};
}

}  // namespace polyflow
