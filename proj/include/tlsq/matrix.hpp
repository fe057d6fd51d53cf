#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tlsq {

// Dense real vector. Entries are finite.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t len, double fill = 0.0);
  Vector(std::initializer_list<double> values);
  explicit Vector(std::vector<double> values);

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }

  std::span<const double> values() const noexcept { return data_; }
  std::span<double> values() noexcept { return data_; }
  const std::vector<double>& std_vector() const noexcept { return data_; }

  double norm() const;
  double dot(const Vector& other) const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> data_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& a);

// Dense real matrix stored column-major. Zero-sized dimensions are allowed so
// that empty blocks (no frozen columns, no free columns) compose naturally.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  // Column-major data; throws DimensionError on length mismatch and on
  // non-finite entries.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> column_major);

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix identity(std::size_t n);
  static Matrix column(const Vector& v);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }

  std::span<const double> col(std::size_t c) const {
    return {data_.data() + c * rows_, rows_};
  }
  std::span<double> col(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
  Vector col_vector(std::size_t c) const;

  std::span<const double> data() const noexcept { return data_; }

  Matrix transpose() const;
  // Rows [r0, r0+nr) x columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix cols_range(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }
  Matrix rows_range(std::size_t r0, std::size_t nr) const { return block(r0, 0, nr, cols_); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Horizontal concatenation (A | B); row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
// Vertical concatenation (A ; B); column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& x);
// A^T x without forming the transpose.
Vector multiply_transposed(const Matrix& a, const Vector& x);

double frobenius_norm(const Matrix& a);

}  // namespace tlsq
