#include "tlsq/ols.hpp"

#include <cmath>
#include <string>

#include "tlsq/errors.hpp"
#include "tlsq/linalg.hpp"

namespace tlsq {

namespace {

// Cholesky pivots below this fraction of max diag(A^T A) mean A is
// numerically rank deficient; A^T A squares the condition number, so this
// sits near the unit roundoff rather than at tol::kRank.
constexpr double kCholeskyPivotTol = 1e-14;

double residual_norm(const Matrix& a, const Vector& c, const Vector& y) {
  return (multiply(a, c) - y).norm();
}

OlsSolution solve_normal_equations(const Matrix& a, const Vector& y) {
  Matrix gram = multiply(a.transpose(), a);
  Matrix rhs = Matrix::column(multiply_transposed(a, y));
  if (!cholesky_solve(gram, rhs, kCholeskyPivotTol)) {
    throw RankDeficiencyError("solve_ols: A^T A is not positive definite; use the SVD method");
  }
  Vector c = rhs.col_vector(0);
  return {c, residual_norm(a, c, y), OlsMethod::NormalEquations, false};
}

OlsSolution solve_qr(const Matrix& a, const Vector& y) {
  HouseholderQr qr(a);
  const Matrix& r = qr.r();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < a.cols(); ++i) max_diag = std::max(max_diag, r(i, i));
  for (std::size_t i = 0; i < a.cols(); ++i) {
    if (max_diag == 0.0 || r(i, i) <= tol::kRank * max_diag) {
      throw RankDeficiencyError("solve_ols: R has a negligible diagonal entry; use the SVD method");
    }
  }
  Matrix qty = qr.apply_qt(Matrix::column(y));
  Matrix c = solve_upper(r, qty.rows_range(0, a.cols()));
  Vector coeffs = c.col_vector(0);
  return {coeffs, residual_norm(a, coeffs, y), OlsMethod::Qr, false};
}

OlsSolution solve_svd(const Matrix& a, const Vector& y) {
  SvdResult svd = jacobi_svd(a, UFactor::Thin);
  Vector c = pinv_apply(svd, y);
  const bool deficient = svd.numerical_rank() < a.cols();
  return {c, residual_norm(a, c, y), OlsMethod::Svd, deficient};
}

}  // namespace

const char* to_string(OlsMethod method) noexcept {
  switch (method) {
    case OlsMethod::NormalEquations: return "normal_equations";
    case OlsMethod::Qr: return "qr";
    case OlsMethod::Svd: return "svd";
    case OlsMethod::ClosedForm: return "closed_form";
  }
  return "unknown";
}

double mean_1d(const Vector& x) {
  if (x.empty()) throw EmptyDataError("mean_1d: empty input");
  double sum = 0.0;
  for (double v : x.values()) sum += v;
  return sum / static_cast<double>(x.size());
}

OlsSolution simple_regression(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("simple_regression: x has " + std::to_string(x.size()) +
                         " entries, y has " + std::to_string(y.size()));
  }
  if (x.size() < 2) throw DimensionError("simple_regression: need at least two points");
  const double xbar = mean_1d(x);
  const double ybar = mean_1d(y);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = xbar - x[i];
    sxy += dx * (ybar - y[i]);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw DegenerateAbscissaError("simple_regression: all abscissae are equal");
  const double slope = sxy / sxx;
  const double intercept = ybar - slope * xbar;

  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = intercept + slope * x[i] - y[i];
    ss += r * r;
  }
  return {Vector{intercept, slope}, std::sqrt(ss), OlsMethod::ClosedForm, false};
}

OlsSolution solve_ols(const Matrix& a, const Vector& y, OlsMethod method) {
  if (y.size() != a.rows()) {
    throw DimensionError("solve_ols: rhs length " + std::to_string(y.size()) +
                         " != rows " + std::to_string(a.rows()));
  }
  if (a.rows() < a.cols()) throw DimensionError("solve_ols: fewer rows than columns");

  switch (method) {
    case OlsMethod::NormalEquations: return solve_normal_equations(a, y);
    case OlsMethod::Qr: return solve_qr(a, y);
    case OlsMethod::Svd: return solve_svd(a, y);
    case OlsMethod::ClosedForm: {
      if (a.cols() != 2) throw DimensionError("solve_ols: closed form needs the design (1 | x)");
      for (double v : a.col(0)) {
        if (v != 1.0) throw DimensionError("solve_ols: closed form needs an all-ones first column");
      }
      return simple_regression(a.col_vector(1), y);
    }
  }
  throw DimensionError("solve_ols: unknown method");
}

}  // namespace tlsq
