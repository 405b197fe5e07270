#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace polyflow {

using Complex = std::complex<double>;

// A closed n-gon in R^p: an ordered list of n vertices, indices taken mod n,
// consecutive vertices joined by segments. Storage is row-major n x p.
class Polygon {
 public:
  Polygon() = default;
  Polygon(std::size_t n, std::size_t p);
  Polygon(std::size_t n, std::size_t p, std::vector<double> coords);

  static Polygon from_rows(const std::vector<std::vector<double>>& rows);
  static Polygon constant(std::size_t n, std::span<const double> point);
  // Planar view: vertex (x, y) <-> x + iy.
  static Polygon from_complex(std::span<const Complex> z);

  std::size_t size() const noexcept { return n_; }
  std::size_t dim() const noexcept { return p_; }
  bool empty() const noexcept { return n_ == 0; }

  // Vertex j, j taken mod n.
  std::span<const double> vertex(std::ptrdiff_t j) const;
  std::span<double> vertex(std::ptrdiff_t j);

  double operator()(std::size_t j, std::size_t i) const { return coords_[j * p_ + i]; }
  double& operator()(std::size_t j, std::size_t i) { return coords_[j * p_ + i]; }

  // Coordinate column i (the vector x_i of all vertices' i-th coordinates).
  std::vector<double> column(std::size_t i) const;
  void set_column(std::size_t i, std::span<const double> values);

  std::vector<Complex> to_complex() const;

  std::span<const double> data() const noexcept { return coords_; }
  std::span<double> data() noexcept { return coords_; }

  bool is_constant() const noexcept;
  bool all_finite() const noexcept;

  Polygon& operator+=(const Polygon& other);
  Polygon& operator-=(const Polygon& other);
  Polygon& operator*=(double s);

  friend Polygon operator+(Polygon a, const Polygon& b) { return a += b; }
  friend Polygon operator-(Polygon a, const Polygon& b) { return a -= b; }
  friend Polygon operator*(Polygon a, double s) { return a *= s; }
  friend Polygon operator*(double s, Polygon a) { return a *= s; }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::vector<double> coords_;
};

// Tolerance helpers for floating results.
double max_abs_diff(const Polygon& a, const Polygon& b);
double sup_vertex_distance(const Polygon& a, const Polygon& b);
double sup_norm(const Polygon& a);
double frobenius_norm(const Polygon& a);

// D^m(X_j) = sum_{k=0}^{m} (-1)^{m+k} C(m,k) X_{j+k}.
std::vector<double> difference(const Polygon& x, int order, std::ptrdiff_t j);

// N_j = (X_{j+1} - X_j) + (X_{j-1} - X_j).
Polygon normals(const Polygon& x);

// F_m(X) = 1/2 sum_j |D^m(X_j)|^2.
double energy(const Polygon& x, int order);

std::vector<double> centroid(const Polygon& x);

// The polygon with every vertex replaced by `point`, keeping n.
Polygon replicate(std::size_t n, std::span<const double> point);

/// Regular (possibly star or degenerate) polygon P_k in the plane:
/// vertex j = (cos(2 pi jk/n), sin(2 pi jk/n)).
Polygon eigen_polygon(std::size_t n, std::size_t k);

// Real and imaginary parts of P_k.
struct RealBasisVectors {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<double> cos_part;
  std::vector<double> sin_part;
};

RealBasisVectors real_basis(std::size_t n, std::size_t k);

// cos and sin of 2 pi q / n for integer q, with q reduced mod n first.
Complex unit_root(std::size_t n, long long q);

enum class ReconcileStrategy { duplicate, midpoint };

/// Brings both polygons to the larger vertex count without changing their
/// drawn images. `duplicate` repeats the final vertex; `midpoint` splits the
/// currently longest edge at its midpoint (lowest edge index on ties) until
/// the counts agree.
std::pair<Polygon, Polygon> reconcile_vertex_counts(const Polygon& a, const Polygon& b,
                                                    ReconcileStrategy strategy);

Polygon augment_vertices(const Polygon& x, std::size_t target_n, ReconcileStrategy strategy);

}  // namespace polyflow
