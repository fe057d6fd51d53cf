#pragma once

// Ordinary least squares: residuals measured along the last coordinate.

#include "tlsq/matrix.hpp"

namespace tlsq {

enum class OlsMethod { NormalEquations, Qr, Svd, ClosedForm };

const char* to_string(OlsMethod method) noexcept;

struct OlsSolution {
  Vector coefficients;
  double residual_norm = 0.0;  // |A c - y|_2
  OlsMethod method = OlsMethod::Svd;
  bool rank_deficient = false;
};

// Arithmetic mean; the constant minimizing sum (x_i - c)^2.
double mean_1d(const Vector& x);

// Fits y = a + b x in closed form; coefficients are (a, b).
// Throws DegenerateAbscissaError when all x are equal.
OlsSolution simple_regression(const Vector& x, const Vector& y);

// Minimizes |A c - y|_2. NormalEquations and Qr need full column rank and
// throw RankDeficiencyError otherwise; Svd returns the minimum-norm
// minimizer and flags rank deficiency. ClosedForm accepts only the
// two-column design (1 | x) and defers to simple_regression.
OlsSolution solve_ols(const Matrix& a, const Vector& y, OlsMethod method);

}  // namespace tlsq
