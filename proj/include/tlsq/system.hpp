#pragma once

// Total least squares for an overdetermined system A x = b.
//
// The augmented matrix is (A | -b) and the solution vector is (c; 1), so
// (A | -b)(c; 1) = A c - b. Users of the (A | b), (c; -1) convention get the
// same singular values and the same c.

#include "tlsq/matrix.hpp"

namespace tlsq {

struct TlsSystemSolution {
  Vector coefficients;    // c, length n
  Matrix nearest_system;  // E = (F | -g), rank-n truncation of (A | -b)
  Vector sigma;           // n + 1 singular values of (A | -b)
  bool unique = false;
  double tls_residual = 0.0;  // sigma_{n+1} = |(A | -b) - E|_F
};

// (A | -b)
Matrix augment(const Matrix& a, const Vector& b);

// Requires a.rows() > a.cols(). Throws NoTlsSolutionError when the last
// component of the minimizing right singular vector is (numerically) zero.
TlsSystemSolution solve_tls_system(const Matrix& a, const Vector& b);

// |(A | -b)(c; 1)|^2 / |(c; 1)|^2: sum of squared orthogonal distances of the
// rows of (A | -b) to the subspace (c; 1)^perp.
double tls_objective(const Matrix& a, const Vector& b, const Vector& c);

}  // namespace tlsq
