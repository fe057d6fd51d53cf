#pragma once

// Data-parallel inner loops used by the dense solvers.
//
// Every parallel kernel splits work only over independent outputs (columns
// of a product, columns of a data matrix, rows of a rotated column pair), so
// each output is accumulated in the same order as in the serial reference.
// Results are therefore bitwise identical to `serial::` regardless of the
// thread count. Reductions that would change summation order stay serial.

#include <cstddef>
#include <span>

#include "tlsq/matrix.hpp"

namespace tlsq::kernels {

// Below this many scalar operations a kernel runs on the calling thread.
inline constexpr std::size_t kParallelWorkThreshold = 1u << 15;

// out = a * b; out must already be a.rows() x b.cols().
void gemm(const Matrix& a, const Matrix& b, Matrix& out);

// out[j] = mean of column j.
void column_means(const Matrix& a, std::span<double> out);

// Subtracts `row` from every row of `a`.
void subtract_row(Matrix& a, std::span<const double> row);

// Plane rotation of two equally long columns:
//   x <- c x - s y,   y <- s x + c y
void rotate_pair(std::span<double> x, std::span<double> y, double c, double s);

// Plain dot product, always serial (fixed summation order).
double dot(std::span<const double> x, std::span<const double> y);

int max_threads();

// Straightforward single-threaded versions kept as the reference for tests
// and benchmarks.
namespace serial {

void gemm(const Matrix& a, const Matrix& b, Matrix& out);
void column_means(const Matrix& a, std::span<double> out);
void subtract_row(Matrix& a, std::span<const double> row);
void rotate_pair(std::span<double> x, std::span<double> y, double c, double s);

}  // namespace serial

}  // namespace tlsq::kernels
