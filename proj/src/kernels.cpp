#include "tlsq/kernels.hpp"

#include <cstdint>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace tlsq::kernels {

namespace {

bool worth_parallel(std::size_t work) { return work >= kParallelWorkThreshold; }

}  // namespace

void gemm(const Matrix& a, const Matrix& b, Matrix& out) {
  const auto m = static_cast<std::int64_t>(a.rows());
  const auto n = static_cast<std::int64_t>(b.cols());
  const auto inner = static_cast<std::int64_t>(a.cols());
  // Small calls skip the OpenMP runtime entirely; an if(false) region is
  // still measurably slower than the plain loop.
  if (!worth_parallel(a.rows() * b.cols() * a.cols())) return serial::gemm(a, b, out);

#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t i = 0; i < m; ++i) {
      double acc = 0.0;
      for (std::int64_t k = 0; k < inner; ++k) {
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = acc;
    }
  }
}

void column_means(const Matrix& a, std::span<double> out) {
  const auto n = static_cast<std::int64_t>(a.cols());
  const std::size_t m = a.rows();
  if (!worth_parallel(a.rows() * a.cols()) || n < 2) return serial::column_means(a, out);

#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (double v : a.col(j)) acc += v;
    out[j] = acc / static_cast<double>(m);
  }
}

void subtract_row(Matrix& a, std::span<const double> row) {
  const auto n = static_cast<std::int64_t>(a.cols());
  if (!worth_parallel(a.rows() * a.cols()) || n < 2) return serial::subtract_row(a, row);

#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n; ++j) {
    for (double& v : a.col(j)) v -= row[j];
  }
}

void rotate_pair(std::span<double> x, std::span<double> y, double c, double s) {
  const auto m = static_cast<std::int64_t>(x.size());
  if (!worth_parallel(4 * x.size())) return serial::rotate_pair(x, y, c, s);

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

double dot(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

void gemm(const Matrix& a, const Matrix& b, Matrix& out) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
}

void column_means(const Matrix& a, std::span<double> out) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, j);
    out[j] = acc / static_cast<double>(a.rows());
  }
}

void subtract_row(Matrix& a, std::span<const double> row) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= row[j];
  }
}

void rotate_pair(std::span<double> x, std::span<double> y, double c, double s) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    x[i] = c * xi - s * y[i];
    y[i] = s * xi + c * y[i];
  }
}

}  // namespace serial

}  // namespace tlsq::kernels
