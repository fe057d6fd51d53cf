#pragma once

// Orthogonal-distance fitting of a hyperplane to a point cloud.

#include <optional>

#include "tlsq/matrix.hpp"

namespace tlsq {

// m points in R^n, one per row. Requires m >= 2 and n >= 2.
class PointCloud {
 public:
  explicit PointCloud(Matrix points);

  const Matrix& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.rows(); }
  std::size_t dim() const noexcept { return points_.cols(); }

 private:
  Matrix points_;
};

struct HyperplaneFit {
  Vector centroid;
  Vector normal;           // unit length; the plane is {z : normal . (z - centroid) = 0}
  double objective = 0.0;  // sum of squared orthogonal distances = sigma_min(B)^2
  bool unique = false;
  bool expressible = false;  // |normal[n-1]| > tol::kComponent
  // (c0, c1, ..., c_{n-1}) with z_n = c0 + sum_k c_k z_k; set iff expressible.
  std::optional<Vector> explicit_coeffs;
  Vector sigma;  // singular values of the centered matrix
};

Vector centroid(const PointCloud& cloud);

// Row i is (z_i - centroid)^T.
Matrix center_matrix(const PointCloud& cloud);

// Hyperplane through the centroid whose normal is the right singular vector
// of the centered matrix for its smallest singular value. Always returns a
// fit; `unique` is false when the two smallest singular values coincide.
// Throws DimensionError when m < n.
HyperplaneFit fit_hyperplane_tls(const PointCloud& cloud);

// |normal . (z - centroid)|
double point_hyperplane_distance(const HyperplaneFit& fit, const Vector& z);

}  // namespace tlsq
