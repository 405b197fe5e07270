#include "polyflow/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polyflow/errors.hpp"

namespace polyflow {

namespace {

Integer checked_add(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in circulant entry");
  return out;
}

Integer checked_mul(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in circulant entry");
  return out;
}

void validate_order(int n, int m) {
  if (n < 3) throw InvalidArgument("circulant size n must be at least 3, got " + std::to_string(n));
  if (m < 1) throw InvalidArgument("order m must be at least 1, got " + std::to_string(m));
}

std::vector<Complex> twiddles(std::size_t n) {
  std::vector<Complex> w(n);
  for (std::size_t q = 0; q < n; ++q) w[q] = unit_root(n, static_cast<long long>(q));
  return w;
}

}  // namespace

Integer binomial(int n, int k) {
  if (n < 0) throw InvalidArgument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // C(n, i) = C(n, i-1) * (n - i + 1) / i stays integral at every step.
  __extension__ using Wide = __int128;
  Wide acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > INT64_MAX) throw OverflowError("binomial C(" + std::to_string(n) + ", " +
                                             std::to_string(k) + ") exceeds 64 bits");
  }
  return static_cast<Integer>(acc);
}

CirculantMatrix::CirculantMatrix(std::vector<Integer> first_row) : row_(std::move(first_row)) {
  if (row_.empty()) throw InvalidArgument("circulant matrix needs a nonempty first row");
}

CirculantMatrix CirculantMatrix::identity(std::size_t n) {
  std::vector<Integer> row(n, 0);
  if (n > 0) row[0] = 1;
  return CirculantMatrix(std::move(row));
}

CirculantMatrix CirculantMatrix::second_difference(std::size_t n) {
  if (n < 3) throw InvalidArgument("second-difference matrix needs n >= 3");
  std::vector<Integer> row(n, 0);
  row[0] = -2;
  row[1] = 1;
  row[n - 1] = 1;
  return CirculantMatrix(std::move(row));
}

Integer CirculantMatrix::entry(std::size_t i, std::size_t j) const {
  const std::size_t n = row_.size();
  return row_[(j + n - i % n) % n];
}

CirculantMatrix CirculantMatrix::signed_for_order(int m) const {
  if (m % 2 == 1) return *this;
  std::vector<Integer> row(row_.size());
  std::transform(row_.begin(), row_.end(), row.begin(), [](Integer v) { return -v; });
  return CirculantMatrix(std::move(row));
}

Integer um_value(int m, int n, int r, int k) {
  validate_order(n, m);
  if (r < 1) throw InvalidArgument("repetition count r must be positive");
  const long long span = static_cast<long long>(r) * n;
  if (span - (2LL * m + 1) < 2) {
    throw InvalidArgument("u_m needs rn - (2m+1) >= 2; got r=" + std::to_string(r) +
                          " n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  if (k < 0 || k >= span) throw InvalidArgument("u_m index k out of range [0, rn)");

  auto signed_binomial = [m](long long offset) {
    const Integer c = binomial(2 * m, static_cast<int>(m + offset));
    return ((m + offset) % 2 == 0) ? c : -c;
  };
  if (k <= m) return signed_binomial(k);
  if (k >= span - m) return signed_binomial(k - span);
  return 0;
}

int minimal_r(int m, int n) {
  validate_order(n, m);
  return (2 * m + 3 + n - 1) / n;
}

CirculantMatrix power_of_m_with_r(int n, int m, int r, int max_order) {
  validate_order(n, m);
  if (m > max_order) {
    throw OverflowError("order m=" + std::to_string(m) + " exceeds the exact-integer budget (max " +
                        std::to_string(max_order) + ")");
  }
  if (static_cast<long long>(r) * n < 2LL * m + 3) {
    throw InvalidArgument("power_of_m needs rn >= 2m + 3");
  }
  // C(2m, m) is the largest term of u_m; fail early if it cannot be represented.
  (void)binomial(2 * m, m);
  std::vector<Integer> row(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    Integer b = 0;
    for (int j = 0; j < r; ++j) b = checked_add(b, um_value(m, n, r, j * n + k));
    row[static_cast<std::size_t>(k)] = b;
  }
  return CirculantMatrix(std::move(row));
}

CirculantMatrix power_of_m(int n, int m, int max_order) {
  return power_of_m_with_r(n, m, minimal_r(m, n), max_order);
}

CirculantMatrix circulant_multiply(const CirculantMatrix& a, const CirculantMatrix& b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("circulant_multiply: sizes " + std::to_string(a.size()) + " and " +
                       std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  std::vector<Integer> row(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Integer acc = 0;
    for (std::size_t l = 0; l < n; ++l) {
      acc = checked_add(acc, checked_mul(a[l], b[(j + n - l) % n]));
    }
    row[j] = acc;
  }
  return CirculantMatrix(std::move(row));
}

Polygon apply(const CirculantMatrix& a, const Polygon& x) {
  if (a.size() != x.size()) {
    throw SizeMismatch("apply: matrix size " + std::to_string(a.size()) + " vs polygon with " +
                       std::to_string(x.size()) + " vertices");
  }
  const std::size_t n = x.size();
  Polygon out(n, x.dim());
  for (std::size_t j = 0; j < n; ++j) {
    auto dst = out.vertex(static_cast<std::ptrdiff_t>(j));
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] == 0) continue;
      const auto coeff = static_cast<double>(a[k]);
      const auto src = x.vertex(static_cast<std::ptrdiff_t>(j + k));
      for (std::size_t i = 0; i < x.dim(); ++i) dst[i] += coeff * src[i];
    }
  }
  return out;
}

double flow_eigenvalue(std::size_t n, int m, std::size_t k) {
  if (n < 1) throw InvalidArgument("flow_eigenvalue: n must be positive");
  if (m < 1) throw InvalidArgument("flow_eigenvalue: m must be at least 1");
  k %= n;
  // Fold onto k <= n/2 so the pair lambda_k = lambda_{n-k} is bitwise symmetric.
  const std::size_t folded = std::min(k, n - k);
  const double s = std::sin(std::numbers::pi * static_cast<double>(folded) / static_cast<double>(n));
  const double magnitude = 4.0 * s * s;
  double power = 1.0;
  for (int i = 0; i < m; ++i) power *= magnitude;
  return folded == 0 ? 0.0 : -power;
}

std::vector<double> flow_eigenvalues(std::size_t n, int m) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = flow_eigenvalue(n, m, k);
  return out;
}

EigenSystem eigen_system(std::size_t n, int m) {
  validate_order(static_cast<int>(n), m);
  EigenSystem sys;
  sys.n = n;
  sys.m = m;
  sys.base_eigenvalues = flow_eigenvalues(n, 1);
  sys.eigenvalues = flow_eigenvalues(n, m);
  const auto w = twiddles(n);
  sys.eigenpolygons.assign(n, std::vector<Complex>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) sys.eigenpolygons[k][j] = w[(j * k) % n];
  }
  return sys;
}

std::vector<Complex> dft(std::span<const Complex> v) {
  const std::size_t n = v.size();
  if (n == 0) throw InvalidArgument("dft of an empty vector");
  const auto w = twiddles(n);
  std::vector<Complex> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) acc += w[(j * k) % n] * v[k];
    out[j] = acc;
  }
  return out;
}

std::vector<Complex> idft(std::span<const Complex> v) {
  const std::size_t n = v.size();
  if (n == 0) throw InvalidArgument("idft of an empty vector");
  const auto w = twiddles(n);
  std::vector<Complex> out(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) acc += std::conj(w[(j * k) % n]) * v[k];
    out[j] = acc * scale;
  }
  return out;
}

}  // namespace polyflow
