#pragma once

// TLS for several right-hand sides at once, and TLS with error-free
// ("frozen") columns.

#include <cstddef>

#include "tlsq/matrix.hpp"

namespace tlsq {

struct MultiRhsSolution {
  Matrix x;               // n x p
  Matrix nearest_system;  // E = (F | G), rank-n truncation of (A | B)
  Vector sigma;           // n + p singular values of (A | B)
  bool unique = false;
};

// Solves A X = B in the TLS sense by bending A and B jointly.
//
// With (A | B) = U S V^T and V partitioned as [V11 V12; V21 V22] (V22 is
// p x p), X = -V12 * inv(V22). Note the sign convention differs from
// solve_tls_system: here B enters the augmented matrix as +B.
//
// Throws NoTlsSolutionError if sigma_min(V22) <= tol::kComponent; the carried
// null vector is the unit vector in span(V12; V22) whose bottom block
// vanishes (for p = 1 that is v_{n+1}).
MultiRhsSolution solve_tls_multi(const Matrix& a, const Matrix& b);

struct FixedColsSolution {
  Matrix x1;  // j x p, coefficients of the frozen block
  Matrix x2;  // k x p
  double minimized_value = 0.0;  // |A2 - C|_F^2 + |B - D|_F^2
  bool x1_unique = true;
  std::size_t frozen_rank = 0;
  Matrix nearest_a2;  // C
  Matrix nearest_b;   // D; A1 X1 + C X2 = D
  // Columns spanning the null space of A1 (j x (j - rank)); any combination
  // may be added to x1 without changing the objective.
  Matrix x1_null_basis;
  Vector reduced_sigma;    // singular values of the projected (A22 | B2)
  bool x2_unique = true;   // gap test on the projected problem
};

// Solves A1 X1 + A2 X2 = B in the TLS sense with A1 held fixed: the problem
// is projected onto the orthogonal complement of range(A1), solved there by
// solve_tls_multi, and X1 recovered by back substitution. A rank-deficient
// A1 yields the minimum-norm X1 and x1_unique = false.
//
// Requires equal row counts m >= j + k + p and p >= 1.
FixedColsSolution solve_tls_fixed(const Matrix& a1, const Matrix& a2, const Matrix& b);

// Smallest |A2 - C|_F^2 + |B - D|_F^2 over all C, D with A1 X1 + C X2 = D,
// for the given X1, X2:  trace(R^T R (I + X2^T X2)^-1), R = B - A1 X1 - A2 X2.
double fixed_columns_objective(const Matrix& a1, const Matrix& a2, const Matrix& b,
                               const Matrix& x1, const Matrix& x2);

}  // namespace tlsq
