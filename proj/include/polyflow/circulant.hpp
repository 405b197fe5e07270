#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polyflow/polygon.hpp"

namespace polyflow {

using Integer = std::int64_t;

inline constexpr int kDefaultMaxOrder = 20;

// Exact C(n, k); throws OverflowError when the value exceeds int64.
Integer binomial(int n, int k);

// An n x n circulant matrix circ(b_0, ..., b_{n-1}); row i is the first row
// shifted right by i, so entry (i, j) is b_{(j - i) mod n}.
class CirculantMatrix {
 public:
  explicit CirculantMatrix(std::vector<Integer> first_row);

  static CirculantMatrix identity(std::size_t n);
  // M = circ(-2, 1, 0, ..., 0, 1), the second-difference matrix of the n-cycle.
  static CirculantMatrix second_difference(std::size_t n);

  std::size_t size() const noexcept { return row_.size(); }
  std::span<const Integer> first_row() const noexcept { return row_; }
  Integer operator[](std::size_t k) const { return row_[k]; }
  Integer entry(std::size_t i, std::size_t j) const;

  // Entrywise product with (-1)^{m+1}; the flow matrix of order m.
  CirculantMatrix signed_for_order(int m) const;

  friend bool operator==(const CirculantMatrix&, const CirculantMatrix&) = default;

 private:
  std::vector<Integer> row_;
};

/// u_m(k) on Z/(rn)Z: signed binomials C(2m, .) around k = 0 padded by zeros.
/// Requires rn - (2m+1) >= 2 and 0 <= k < rn.
Integer um_value(int m, int n, int r, int k);

// Smallest r with rn >= 2m + 3.
int minimal_r(int m, int n);

/// M^m as b_k = sum_{j<r} u_m(jn + k), without the (-1)^{m+1} flow sign.
CirculantMatrix power_of_m(int n, int m, int max_order = kDefaultMaxOrder);
CirculantMatrix power_of_m_with_r(int n, int m, int r, int max_order = kDefaultMaxOrder);

// Cyclic convolution of first rows, checked against int64 overflow.
CirculantMatrix circulant_multiply(const CirculantMatrix& a, const CirculantMatrix& b);

// (AX)_j = sum_k b_k X_{j+k}, applied to every coordinate column.
Polygon apply(const CirculantMatrix& a, const Polygon& x);

struct EigenSystem {
  std::size_t n = 0;
  int m = 0;
  // lambda_k = -4 sin^2(pi k / n), eigenvalues of M.
  std::vector<double> base_eigenvalues;
  // lambda_{m,k} = (-1)^{m+1} lambda_k^m, eigenvalues of the flow matrix.
  std::vector<double> eigenvalues;
  // eigenpolygons[k][j] = omega^{jk}, omega = exp(2 pi i / n).
  std::vector<std::vector<Complex>> eigenpolygons;

  double flow_eigenvalue(std::size_t k) const { return eigenvalues[k % n]; }
};

EigenSystem eigen_system(std::size_t n, int m);

// lambda_{m,k} alone, without materializing the eigenpolygons.
double flow_eigenvalue(std::size_t n, int m, std::size_t k);
std::vector<double> flow_eigenvalues(std::size_t n, int m);

// Direct O(n^2) transforms: dft multiplies by F (F_{jk} = omega^{jk}), idft by
// (1/n) conj(F).
std::vector<Complex> dft(std::span<const Complex> v);
std::vector<Complex> idft(std::span<const Complex> v);

}  // namespace polyflow
