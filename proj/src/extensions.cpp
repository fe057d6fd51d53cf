#include "tlsq/extensions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tlsq/errors.hpp"
#include "tlsq/linalg.hpp"

namespace tlsq {

namespace {

double squared_frobenius(const Matrix& a) {
  const double f = frobenius_norm(a);
  return f * f;
}

std::string shape(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

struct ReducedSolve {
  Matrix x2;
  Matrix c2;
  Matrix d2;
  Vector sigma;
  bool unique;
};

ReducedSolve solve_reduced(const Matrix& a22, const Matrix& b2) {
  MultiRhsSolution sol = solve_tls_multi(a22, b2);
  const std::size_t k = a22.cols();
  return {std::move(sol.x), sol.nearest_system.cols_range(0, k),
          sol.nearest_system.cols_range(k, b2.cols()), std::move(sol.sigma), sol.unique};
}

}  // namespace

MultiRhsSolution solve_tls_multi(const Matrix& a, const Matrix& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t p = b.cols();
  if (b.rows() != m) {
    throw DimensionError("solve_tls_multi: A is " + shape(a) + ", B is " + shape(b));
  }
  if (p == 0) throw DimensionError("solve_tls_multi: B has no columns");
  if (m < n + p) {
    throw DimensionError("solve_tls_multi: need rows >= n + p, got " + std::to_string(m) +
                         " < " + std::to_string(n + p));
  }

  SvdResult svd = jacobi_svd(hstack(a, b), UFactor::Thin);
  const Matrix v12 = svd.v.block(0, n, n, p);
  const Matrix v22 = svd.v.block(n, n, p, p);
  SvdResult inner = jacobi_svd(v22, UFactor::Full);
  if (inner.sigma_min() <= tol::kComponent) {
    const Vector w = inner.v.col_vector(p - 1);
    const Vector null_vector = multiply(svd.v.cols_range(n, p), w);
    throw NoTlsSolutionError(
        "no TLS solution: the trailing right singular block V22 is singular",
        null_vector.std_vector(), svd.sigma.std_vector());
  }

  // inv(V22) = Q diag(1/s) P^T for V22 = P diag(s) Q^T.
  Matrix q_scaled = inner.v;
  for (std::size_t c = 0; c < p; ++c) {
    for (double& x : q_scaled.col(c)) x /= inner.sigma[c];
  }
  const Matrix v22_inv = multiply(q_scaled, inner.u.transpose());

  MultiRhsSolution out;
  out.x = -1.0 * multiply(v12, v22_inv);
  out.nearest_system = truncate_rank(svd, n);
  out.sigma = svd.sigma;
  out.unique = n == 0 || svd.sigma[n - 1] - svd.sigma[n] > tol::kGap * std::max(svd.sigma[0], 1.0);
  return out;
}

FixedColsSolution solve_tls_fixed(const Matrix& a1, const Matrix& a2, const Matrix& b) {
  const std::size_t m = b.rows();
  const std::size_t j = a1.cols();
  const std::size_t k = a2.cols();
  const std::size_t p = b.cols();
  if (a1.rows() != m || a2.rows() != m) {
    throw DimensionError("solve_tls_fixed: row counts differ (A1 " + shape(a1) + ", A2 " +
                         shape(a2) + ", B " + shape(b) + ")");
  }
  if (p == 0) throw DimensionError("solve_tls_fixed: B has no columns");
  if (m < j + k + p) {
    throw DimensionError("solve_tls_fixed: need rows >= j + k + p, got " + std::to_string(m) +
                         " < " + std::to_string(j + k + p));
  }

  FixedColsSolution out;
  if (j == 0) {
    ReducedSolve red = solve_reduced(a2, b);
    out.x1 = Matrix(0, p);
    out.x2 = std::move(red.x2);
    out.nearest_a2 = std::move(red.c2);
    out.nearest_b = std::move(red.d2);
    out.x1_null_basis = Matrix(0, 0);
    out.reduced_sigma = std::move(red.sigma);
    out.x2_unique = red.unique;
  } else {
    const SvdResult frozen = jacobi_svd(a1, UFactor::Full);
    const std::size_t r = frozen.numerical_rank();
    out.frozen_rank = r;
    out.x1_null_basis = frozen.v.cols_range(r, j - r);

    if (r == j) {
      HouseholderQr qr(a1);
      const Matrix ut_a2 = qr.apply_qt(a2);
      const Matrix ut_b = qr.apply_qt(b);
      const Matrix a12 = ut_a2.rows_range(0, j);
      const Matrix b1 = ut_b.rows_range(0, j);
      ReducedSolve red = solve_reduced(ut_a2.rows_range(j, m - j), ut_b.rows_range(j, m - j));
      out.x1 = solve_upper(qr.r_square(), b1 - multiply(a12, red.x2));
      out.nearest_a2 = qr.apply_q(vstack(a12, red.c2));
      out.nearest_b = qr.apply_q(vstack(b1, red.d2));
      out.x2 = std::move(red.x2);
      out.reduced_sigma = std::move(red.sigma);
      out.x2_unique = red.unique;
    } else {
      const Matrix ut = frozen.u.transpose();
      const Matrix ut_a2 = multiply(ut, a2);
      const Matrix ut_b = multiply(ut, b);
      const Matrix a12 = ut_a2.rows_range(0, r);
      const Matrix b1 = ut_b.rows_range(0, r);
      ReducedSolve red = solve_reduced(ut_a2.rows_range(r, m - r), ut_b.rows_range(r, m - r));

      // Sigma1 V1^T X1 = B1 - A12 X2; X1 = V1 y is the minimum-norm choice.
      Matrix y = b1 - multiply(a12, red.x2);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = 0; c < p; ++c) y(i, c) /= frozen.sigma[i];
      }
      out.x1 = multiply(frozen.v.cols_range(0, r), y);
      out.x1_unique = false;
      out.nearest_a2 = multiply(frozen.u, vstack(a12, red.c2));
      out.nearest_b = multiply(frozen.u, vstack(b1, red.d2));
      out.x2 = std::move(red.x2);
      out.reduced_sigma = std::move(red.sigma);
      out.x2_unique = red.unique;
    }
  }
  out.minimized_value = squared_frobenius(a2 - out.nearest_a2) + squared_frobenius(b - out.nearest_b);
  return out;
}

double fixed_columns_objective(const Matrix& a1, const Matrix& a2, const Matrix& b,
                               const Matrix& x1, const Matrix& x2) {
  const std::size_t p = b.cols();
  if (x1.rows() != a1.cols() || x2.rows() != a2.cols() || x1.cols() != p || x2.cols() != p) {
    throw DimensionError("fixed_columns_objective: X1 " + shape(x1) + " / X2 " + shape(x2) +
                         " do not match A1 " + shape(a1) + ", A2 " + shape(a2) + ", B " +
                         shape(b));
  }
  const Matrix residual = b - multiply(a1, x1) - multiply(a2, x2);
  Matrix gram = multiply(residual.transpose(), residual);
  const Matrix metric = Matrix::identity(p) + multiply(x2.transpose(), x2);
  if (!cholesky_solve(metric, gram, 0.0)) {
    throw ConvergenceError("fixed_columns_objective: I + X2^T X2 not positive definite");
  }
  double trace = 0.0;
  for (std::size_t i = 0; i < p; ++i) trace += gram(i, i);
  return trace;
}

}  // namespace tlsq
