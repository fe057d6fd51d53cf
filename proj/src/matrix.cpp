#include "tlsq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tlsq/errors.hpp"
#include "tlsq/kernels.hpp"

namespace tlsq {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw DimensionError(std::string(what) + ": non-finite entry");
    }
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

}  // namespace

// --- Vector ---------------------------------------------------------------

Vector::Vector(std::size_t len, double fill) : data_(len, fill) {
  require_finite(data_, "Vector");
}

Vector::Vector(std::initializer_list<double> values) : data_(values) {
  require_finite(data_, "Vector");
}

Vector::Vector(std::vector<double> values) : data_(std::move(values)) {
  require_finite(data_, "Vector");
}

double Vector::norm() const { return std::sqrt(dot(*this)); }

double Vector::dot(const Vector& other) const {
  if (size() != other.size()) throw DimensionError("Vector::dot: length mismatch");
  return kernels::dot(data_, other.data_);
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("Vector+: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("Vector-: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator*(double s, const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

// --- Matrix ---------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> column_major)
    : rows_(rows), cols_(cols), data_(std::move(column_major)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionError("Matrix: data length " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
  require_finite(data_, "Matrix");
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> copy;
  copy.reserve(rows.size());
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(copy);
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  std::vector<double> data(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) throw DimensionError("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < n; ++j) data[j * m + i] = rows[i][j];
  }
  return Matrix(m, n, std::move(data));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

Matrix Matrix::column(const Vector& v) {
  return Matrix(v.size(), 1, v.std_vector());
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

Vector Matrix::col_vector(std::size_t c) const {
  auto s = col(c);
  return Vector(std::vector<double>(s.begin(), s.end()));
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw DimensionError("Matrix::block: range outside matrix");
  }
  Matrix out(nr, nc);
  for (std::size_t j = 0; j < nc; ++j) {
    auto src = col(c0 + j).subspan(r0, nr);
    std::copy(src.begin(), src.end(), out.col(j).begin());
  }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row counts differ");
  Matrix out(a.rows(), a.cols() + b.cols());
  std::copy(a.data().begin(), a.data().end(), out.col(0).data());
  std::copy(b.data().begin(), b.data().end(), out.col(0).data() + a.data().size());
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto dst = out.col(j);
    std::copy(a.col(j).begin(), a.col(j).end(), dst.begin());
    std::copy(b.col(j).begin(), b.col(j).end(), dst.begin() + a.rows());
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "Matrix+");
  Matrix out = a;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) += b(i, j);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "Matrix-");
  Matrix out = a;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) -= b(i, j);
  }
  return out;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix out = a;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (double& v : out.col(j)) v *= s;
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("multiply: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + " differ");
  }
  Matrix out(a.rows(), b.cols());
  kernels::gemm(a, b, out);
  return out;
}

Vector multiply(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw DimensionError("multiply: vector length mismatch");
  Vector out(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double xj = x[j];
    auto c = a.col(j);
    for (std::size_t i = 0; i < a.rows(); ++i) out[i] += c[i] * xj;
  }
  return out;
}

Vector multiply_transposed(const Matrix& a, const Vector& x) {
  if (a.rows() != x.size()) {
    throw DimensionError("multiply_transposed: vector length mismatch");
  }
  Vector out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out[j] = kernels::dot(a.col(j), x.values());
  return out;
}

double frobenius_norm(const Matrix& a) {
  double acc = 0.0;
  for (double v : a.data()) acc += v * v;
  return std::sqrt(acc);
}

}  // namespace tlsq
