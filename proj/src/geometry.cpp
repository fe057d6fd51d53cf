#include "tlsq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tlsq/errors.hpp"
#include "tlsq/kernels.hpp"
#include "tlsq/linalg.hpp"

namespace tlsq {

PointCloud::PointCloud(Matrix points) : points_(std::move(points)) {
  if (points_.rows() < 2 || points_.cols() < 2) {
    throw DimensionError("PointCloud: need at least 2 points in at least 2 dimensions, got " +
                         std::to_string(points_.rows()) + "x" + std::to_string(points_.cols()));
  }
}

Vector centroid(const PointCloud& cloud) {
  Vector out(cloud.dim());
  kernels::column_means(cloud.points(), out.values());
  return out;
}

Matrix center_matrix(const PointCloud& cloud) {
  Matrix b = cloud.points();
  const Vector c = centroid(cloud);
  kernels::subtract_row(b, c.values());
  return b;
}

HyperplaneFit fit_hyperplane_tls(const PointCloud& cloud) {
  const std::size_t m = cloud.size();
  const std::size_t n = cloud.dim();
  if (m < n) {
    throw DimensionError("fit_hyperplane_tls: " + std::to_string(m) + " points in R^" +
                         std::to_string(n) + "; need at least " + std::to_string(n));
  }

  HyperplaneFit fit;
  fit.centroid = centroid(cloud);
  Matrix b = cloud.points();
  kernels::subtract_row(b, fit.centroid.values());

  SvdResult svd = jacobi_svd(b, UFactor::Thin);
  fit.sigma = svd.sigma;
  fit.normal = svd.v.col_vector(n - 1);
  const double smin = svd.sigma[n - 1];
  fit.objective = smin * smin;
  fit.unique = svd.sigma[n - 2] - smin > tol::kGap * std::max(svd.sigma[0], 1.0);

  const double rn = fit.normal[n - 1];
  fit.expressible = std::abs(rn) > tol::kComponent;
  if (fit.expressible) {
    Vector coeffs(n);
    double intercept = fit.centroid[n - 1];
    for (std::size_t k = 0; k + 1 < n; ++k) {
      coeffs[k + 1] = -fit.normal[k] / rn;
      intercept -= coeffs[k + 1] * fit.centroid[k];
    }
    coeffs[0] = intercept;
    fit.explicit_coeffs = std::move(coeffs);
  }
  return fit;
}

double point_hyperplane_distance(const HyperplaneFit& fit, const Vector& z) {
  if (z.size() != fit.normal.size()) {
    throw DimensionError("point_hyperplane_distance: point has " + std::to_string(z.size()) +
                         " coordinates, plane lives in R^" + std::to_string(fit.normal.size()));
  }
  return std::abs(fit.normal.dot(z - fit.centroid));
}

}  // namespace tlsq
