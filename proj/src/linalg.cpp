#include "tlsq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tlsq/errors.hpp"
#include "tlsq/kernels.hpp"

namespace tlsq {

// --- Householder QR -------------------------------------------------------

HouseholderQr::HouseholderQr(const Matrix& a) : rows_(a.rows()), r_(a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) {
    throw DimensionError("householder_qr: rows (" + std::to_string(m) +
                         ") < cols (" + std::to_string(n) + ")");
  }
  reflectors_.resize(n);
  betas_.assign(n, 0.0);
  signs_.assign(n, 1.0);

  for (std::size_t k = 0; k < n; ++k) {
    double sub = 0.0;
    for (std::size_t i = k + 1; i < m; ++i) sub += r_(i, k) * r_(i, k);
    if (sub > 0.0) {
      const double x0 = r_(k, k);
      const double norm = std::sqrt(x0 * x0 + sub);
      const double alpha = x0 >= 0.0 ? -norm : norm;
      std::vector<double> v(m - k);
      v[0] = x0 - alpha;
      for (std::size_t i = k + 1; i < m; ++i) v[i - k] = r_(i, k);
      const double vtv = v[0] * v[0] + sub;
      const double beta = 2.0 / vtv;

      for (std::size_t j = k + 1; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = k; i < m; ++i) s += v[i - k] * r_(i, j);
        s *= beta;
        for (std::size_t i = k; i < m; ++i) r_(i, j) -= s * v[i - k];
      }
      r_(k, k) = alpha;
      for (std::size_t i = k + 1; i < m; ++i) r_(i, k) = 0.0;
      reflectors_[k] = std::move(v);
      betas_[k] = beta;
    }
    if (r_(k, k) < 0.0) {
      signs_[k] = -1.0;
      for (std::size_t j = k; j < n; ++j) r_(k, j) = -r_(k, j);
    }
  }
}

Matrix HouseholderQr::r_square() const { return r_.block(0, 0, cols(), cols()); }

Matrix HouseholderQr::apply_qt(const Matrix& b) const {
  if (b.rows() != rows_) throw DimensionError("apply_qt: row count mismatch");
  Matrix out = b;
  const std::size_t n = cols();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& v = reflectors_[k];
    if (v.empty()) continue;
    for (std::size_t j = 0; j < out.cols(); ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < rows_; ++i) s += v[i - k] * out(i, j);
      s *= betas_[k];
      for (std::size_t i = k; i < rows_; ++i) out(i, j) -= s * v[i - k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (signs_[k] < 0.0) {
      for (std::size_t j = 0; j < out.cols(); ++j) out(k, j) = -out(k, j);
    }
  }
  return out;
}

Matrix HouseholderQr::apply_q(const Matrix& b) const {
  if (b.rows() != rows_) throw DimensionError("apply_q: row count mismatch");
  Matrix out = b;
  const std::size_t n = cols();
  for (std::size_t k = 0; k < n; ++k) {
    if (signs_[k] < 0.0) {
      for (std::size_t j = 0; j < out.cols(); ++j) out(k, j) = -out(k, j);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    const auto& v = reflectors_[kk];
    if (v.empty()) continue;
    for (std::size_t j = 0; j < out.cols(); ++j) {
      double s = 0.0;
      for (std::size_t i = kk; i < rows_; ++i) s += v[i - kk] * out(i, j);
      s *= betas_[kk];
      for (std::size_t i = kk; i < rows_; ++i) out(i, j) -= s * v[i - kk];
    }
  }
  return out;
}

Matrix HouseholderQr::q() const { return apply_q(Matrix::identity(rows_)); }

QrResult householder_qr(const Matrix& a) {
  HouseholderQr qr(a);
  return {qr.q(), qr.r()};
}

// --- Jacobi SVD -----------------------------------------------------------

namespace {

// Appends unit vectors to `basis` (each of length m) until it holds `target`
// orthonormal columns. Candidates are coordinate axes, picked greedily by
// largest residual after projection.
void complete_orthonormal(std::vector<std::vector<double>>& basis, std::size_t m,
                          std::size_t target) {
  std::vector<double> covered(m, 0.0);
  for (const auto& b : basis) {
    for (std::size_t i = 0; i < m; ++i) covered[i] += b[i] * b[i];
  }
  while (basis.size() < target) {
    std::size_t pick = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double residual = 1.0 - covered[i];
      if (residual > best) {
        best = residual;
        pick = i;
      }
    }
    std::vector<double> v(m, 0.0);
    v[pick] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const double proj = kernels::dot(b, v);
        for (std::size_t i = 0; i < m; ++i) v[i] -= proj * b[i];
      }
    }
    const double norm = std::sqrt(kernels::dot(v, v));
    for (double& x : v) x /= norm;
    for (std::size_t i = 0; i < m; ++i) covered[i] += v[i] * v[i];
    basis.push_back(std::move(v));
  }
}

// Index of the entry with largest magnitude; near-ties (within 1e-12
// relative) resolve to the lowest index so that rounding noise cannot flip
// the choice.
std::size_t dominant_index(std::span<const double> v) {
  double max_abs = 0.0;
  for (double x : v) max_abs = std::max(max_abs, std::abs(x));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= max_abs * (1.0 - 1e-12)) return i;
  }
  return 0;
}

// Core routine for rows >= cols.
SvdResult jacobi_svd_tall(const Matrix& a, bool full_u) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix w = a;
  Matrix v = Matrix::identity(n);

  bool converged = n < 2;
  for (int sweep = 0; sweep < tol::kMaxSweeps && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double alpha = kernels::dot(w.col(i), w.col(i));
        const double beta = kernels::dot(w.col(j), w.col(j));
        const double gamma = kernels::dot(w.col(i), w.col(j));
        if (gamma == 0.0 || std::abs(gamma) <= tol::kJacobi * std::sqrt(alpha) * std::sqrt(beta)) {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        kernels::rotate_pair(w.col(i), w.col(j), c, s);
        kernels::rotate_pair(v.col(i), v.col(j), c, s);
      }
    }
    converged = !rotated;
  }
  if (!converged) {
    throw ConvergenceError("jacobi_svd: no convergence within " +
                           std::to_string(tol::kMaxSweeps) + " sweeps");
  }

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = std::sqrt(kernels::dot(w.col(j), w.col(j)));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  const double zero_cut = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  std::vector<std::vector<double>> basis;
  std::vector<bool> has_u(n, false);
  Vector sigma(n);
  Matrix v_sorted(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    sigma[k] = norms[src];
    std::copy(v.col(src).begin(), v.col(src).end(), v_sorted.col(k).begin());
    if (norms[src] > zero_cut) {
      std::vector<double> u(m);
      for (std::size_t i = 0; i < m; ++i) u[i] = w(i, src) / norms[src];
      basis.push_back(std::move(u));
      has_u[k] = true;
    }
  }

  const std::size_t known = basis.size();
  const std::size_t u_cols = full_u ? m : n;
  complete_orthonormal(basis, m, u_cols);

  Matrix u(m, u_cols);
  std::size_t next_known = 0;
  std::size_t next_fill = known;
  for (std::size_t k = 0; k < u_cols; ++k) {
    const auto& src = (k < n && has_u[k]) ? basis[next_known++] : basis[next_fill++];
    std::copy(src.begin(), src.end(), u.col(k).begin());
  }
  return {std::move(u), std::move(sigma), std::move(v_sorted)};
}

}  // namespace

SvdResult jacobi_svd(const Matrix& a, UFactor u_factor) {
  SvdResult out;
  if (a.rows() >= a.cols()) {
    out = jacobi_svd_tall(a, u_factor == UFactor::Full);
  } else {
    SvdResult t = jacobi_svd_tall(a.transpose(), true);
    out = {std::move(t.v), std::move(t.sigma), std::move(t.u)};
  }

  const std::size_t paired = out.sigma.size();
  for (std::size_t k = 0; k < out.v.cols(); ++k) {
    const std::size_t idx = dominant_index(out.v.col(k));
    if (out.v(idx, k) < 0.0) {
      for (double& x : out.v.col(k)) x = -x;
      if (k < paired) {
        for (double& x : out.u.col(k)) x = -x;
      }
    }
  }
  return out;
}

std::size_t SvdResult::numerical_rank() const {
  if (sigma.empty() || sigma[0] == 0.0) return 0;
  const double cut = tol::kRank * sigma[0];
  std::size_t r = 0;
  while (r < sigma.size() && sigma[r] > cut) ++r;
  return r;
}

Vector pinv_apply(const SvdResult& svd, const Vector& y) {
  if (y.size() != svd.rows()) {
    throw DimensionError("pinv_apply: rhs length " + std::to_string(y.size()) +
                         " != rows " + std::to_string(svd.rows()));
  }
  const std::size_t rank = svd.numerical_rank();
  Vector x(svd.cols());
  for (std::size_t i = 0; i < rank; ++i) {
    const double coeff = kernels::dot(svd.u.col(i), y.values()) / svd.sigma[i];
    auto vi = svd.v.col(i);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += coeff * vi[k];
  }
  return x;
}

Matrix truncate_rank(const SvdResult& svd, std::size_t k) {
  if (k > svd.sigma.size()) {
    throw DimensionError("truncate_rank: k=" + std::to_string(k) + " exceeds " +
                         std::to_string(svd.sigma.size()));
  }
  Matrix us(svd.rows(), k);
  for (std::size_t i = 0; i < k; ++i) {
    auto src = svd.u.col(i);
    auto dst = us.col(i);
    for (std::size_t r = 0; r < src.size(); ++r) dst[r] = src[r] * svd.sigma[i];
  }
  Matrix vt(k, svd.cols());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < svd.cols(); ++c) vt(i, c) = svd.v(c, i);
  }
  return multiply(us, vt);
}

bool cholesky_solve(const Matrix& s, Matrix& b, double relative_pivot_tol) {
  const std::size_t n = s.rows();
  if (s.cols() != n || b.rows() != n) throw DimensionError("cholesky_solve: shape mismatch");
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, s(i, i));
  const double cut = relative_pivot_tol * max_diag;

  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = s(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > cut) || d <= 0.0) return false;
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double x = s(i, j);
      for (std::size_t k = 0; k < j; ++k) x -= l(i, k) * l(j, k);
      l(i, j) = x / l(j, j);
    }
  }
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      double x = b(i, c);
      for (std::size_t k = 0; k < i; ++k) x -= l(i, k) * b(k, c);
      b(i, c) = x / l(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
      double x = b(i, c);
      for (std::size_t k = i + 1; k < n; ++k) x -= l(k, i) * b(k, c);
      b(i, c) = x / l(i, i);
    }
  }
  return true;
}

Matrix solve_upper(const Matrix& r, const Matrix& b) {
  const std::size_t n = r.cols();
  if (r.rows() < n || b.rows() != n) throw DimensionError("solve_upper: shape mismatch");
  Matrix x = b;
  for (std::size_t c = 0; c < x.cols(); ++c) {
    for (std::size_t i = n; i-- > 0;) {
      double acc = x(i, c);
      for (std::size_t k = i + 1; k < n; ++k) acc -= r(i, k) * x(k, c);
      x(i, c) = acc / r(i, i);
    }
  }
  return x;
}

}  // namespace tlsq
