#pragma once

// Small dense factorizations: Householder QR, one-sided Jacobi SVD,
// pseudo-inverse application, Eckart-Young truncation, Cholesky.

#include <cstddef>
#include <vector>

#include "tlsq/matrix.hpp"

namespace tlsq {

namespace tol {

// sigma_i counts as zero iff sigma_i <= kRank * sigma_1 (or sigma_1 == 0).
inline constexpr double kRank = 1e-12;
// Jacobi pair (i, j) is converged when |a_i . a_j| <= kJacobi * |a_i| |a_j|.
inline constexpr double kJacobi = 1e-14;
inline constexpr int kMaxSweeps = 60;
// "sigma_k == sigma_{k+1}" iff sigma_k - sigma_{k+1} <= kGap * max(sigma_1, 1).
inline constexpr double kGap = 1e-10;
// Absolute threshold on a component of a unit vector (existence and
// expressibility tests) and on sigma_min of the V22 block.
inline constexpr double kComponent = 1e-10;

}  // namespace tol

struct QrResult {
  Matrix q;        // m x m orthogonal
  Matrix r_upper;  // m x n, zero below the diagonal, nonnegative diagonal
};

// Householder QR kept in factored form so that Q^T can be applied to tall
// blocks without forming the m x m factor.
class HouseholderQr {
 public:
  // Requires a.rows() >= a.cols().
  explicit HouseholderQr(const Matrix& a);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return r_.cols(); }

  // m x n upper-triangular factor with nonnegative diagonal.
  const Matrix& r() const noexcept { return r_; }
  // Leading n x n block of R.
  Matrix r_square() const;
  Matrix q() const;

  Matrix apply_qt(const Matrix& b) const;
  Matrix apply_q(const Matrix& b) const;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<double>> reflectors_;  // reflector k acts on rows k..m-1
  std::vector<double> betas_;
  std::vector<double> signs_;  // +-1 per column, folded into Q
  Matrix r_;
};

QrResult householder_qr(const Matrix& a);

struct SvdResult {
  Matrix u;      // m x m, or m x min(m, n) when computed thin
  Vector sigma;  // min(m, n) values, descending
  Matrix v;      // n x n

  std::size_t rows() const noexcept { return u.rows(); }
  std::size_t cols() const noexcept { return v.rows(); }
  // Number of singular values above the shared rank tolerance.
  std::size_t numerical_rank() const;
  double sigma_min() const { return sigma.empty() ? 0.0 : sigma[sigma.size() - 1]; }
};

enum class UFactor { Full, Thin };

// One-sided Jacobi SVD with cyclic pair ordering.
//
// Singular values are sorted descending (stable on ties, lower original
// index first). Each column of V is signed so that its entry of largest
// magnitude (lowest index on ties) is nonnegative; the matching U column
// carries the compensating sign. Inputs with rows < cols are handled by
// factoring the transpose.
//
// Throws ConvergenceError if the sweep budget is exhausted.
SvdResult jacobi_svd(const Matrix& a, UFactor u_factor = UFactor::Full);

// Minimum-norm least-squares solution V * pinv(Sigma) * U^T * y.
Vector pinv_apply(const SvdResult& svd, const Vector& y);

// Sum_{i<k} sigma_i u_i v_i^T: the best rank-k approximation.
Matrix truncate_rank(const SvdResult& svd, std::size_t k);

// Solves S x = b for symmetric positive definite S. Returns false if a pivot
// is not positive beyond `relative_pivot_tol * max diag(S)`.
bool cholesky_solve(const Matrix& s, Matrix& b, double relative_pivot_tol);

// Back substitution with the leading n x n block of an upper-triangular r.
Matrix solve_upper(const Matrix& r, const Matrix& b);

}  // namespace tlsq
