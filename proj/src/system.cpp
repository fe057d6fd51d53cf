#include "tlsq/system.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tlsq/errors.hpp"
#include "tlsq/linalg.hpp"

namespace tlsq {

Matrix augment(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) {
    throw DimensionError("augment: rhs length " + std::to_string(b.size()) + " != rows " +
                         std::to_string(a.rows()));
  }
  return hstack(a, Matrix::column(-1.0 * b));
}

TlsSystemSolution solve_tls_system(const Matrix& a, const Vector& b) {
  const std::size_t n = a.cols();
  if (a.rows() < n + 1) {
    throw DimensionError("solve_tls_system: need more equations (" + std::to_string(a.rows()) +
                         ") than unknowns (" + std::to_string(n) + ")");
  }
  const Matrix augmented = augment(a, b);
  SvdResult svd = jacobi_svd(augmented, UFactor::Thin);

  const Vector null_vector = svd.v.col_vector(n);
  const double last = null_vector[n];
  if (std::abs(last) <= tol::kComponent) {
    throw NoTlsSolutionError(
        "no TLS solution: the minimizing right singular vector has a zero last component",
        null_vector.std_vector(), svd.sigma.std_vector());
  }

  TlsSystemSolution out;
  out.coefficients = Vector(n);
  for (std::size_t k = 0; k < n; ++k) out.coefficients[k] = null_vector[k] / last;
  out.nearest_system = truncate_rank(svd, n);
  out.sigma = svd.sigma;
  out.tls_residual = svd.sigma[n];
  out.unique = n == 0 || svd.sigma[n - 1] - svd.sigma[n] > tol::kGap * std::max(svd.sigma[0], 1.0);
  return out;
}

double tls_objective(const Matrix& a, const Vector& b, const Vector& c) {
  if (c.size() != a.cols()) {
    throw DimensionError("tls_objective: coefficient length " + std::to_string(c.size()) +
                         " != cols " + std::to_string(a.cols()));
  }
  if (b.size() != a.rows()) throw DimensionError("tls_objective: rhs length mismatch");
  const double residual = (multiply(a, c) - b).norm();
  return residual * residual / (1.0 + c.dot(c));
}

}  // namespace tlsq
