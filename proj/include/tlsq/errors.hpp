#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlsq {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class EmptyDataError : public Error {
 public:
  using Error::Error;
};

class DegenerateAbscissaError : public Error {
 public:
  using Error::Error;
};

class RankDeficiencyError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  // 1-based; column 0 means "whole line".
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// The TLS problem has no solution: every minimizing direction has a zero
// component on the right-hand side. Carries the offending null vector and
// the singular values so callers can report them.
class NoTlsSolutionError : public Error {
 public:
  NoTlsSolutionError(const std::string& what, std::vector<double> null_vector,
                     std::vector<double> singular_values)
      : Error(what),
        null_vector_(std::move(null_vector)),
        singular_values_(std::move(singular_values)) {}

  const std::vector<double>& null_vector() const noexcept { return null_vector_; }
  const std::vector<double>& singular_values() const noexcept {
    return singular_values_;
  }

 private:
  std::vector<double> null_vector_;
  std::vector<double> singular_values_;
};

}  // namespace tlsq
