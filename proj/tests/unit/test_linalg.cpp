#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "tlsq/errors.hpp"
#include "tlsq/linalg.hpp"

namespace tlsq {
namespace {

using testing::Rng;

Matrix reconstruct(const SvdResult& svd) {
  Matrix us(svd.rows(), svd.sigma.size());
  for (std::size_t k = 0; k < svd.sigma.size(); ++k) {
    for (std::size_t i = 0; i < svd.rows(); ++i) us(i, k) = svd.u(i, k) * svd.sigma[k];
  }
  const Matrix vk = svd.v.cols_range(0, svd.sigma.size());
  return testing::naive_multiply(us, testing::naive_transpose(vk));
}

void expect_svd_invariants(const Matrix& a, const SvdResult& svd) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ASSERT_EQ(svd.sigma.size(), std::min(m, n));
  ASSERT_EQ(svd.u.rows(), m);
  ASSERT_EQ(svd.u.cols(), m);
  ASSERT_EQ(svd.v.rows(), n);
  ASSERT_EQ(svd.v.cols(), n);
  for (std::size_t i = 0; i + 1 < svd.sigma.size(); ++i) {
    EXPECT_GE(svd.sigma[i], svd.sigma[i + 1]);
  }
  for (std::size_t i = 0; i < svd.sigma.size(); ++i) EXPECT_GE(svd.sigma[i], 0.0);
  EXPECT_LE(testing::orthogonality_error(svd.u), 1e-12 * static_cast<double>(m));
  EXPECT_LE(testing::orthogonality_error(svd.v), 1e-12 * static_cast<double>(n));
  const double scale = std::max(1.0, testing::naive_frobenius(a));
  EXPECT_LE(testing::naive_frobenius(reconstruct(svd) - a), 1e-11 * scale);
}

// --- QR ---

TEST(HouseholderQr, UpperTriangularInputIsFixedPoint) {
  const Matrix a = Matrix::from_rows({{2, 1, -1}, {0, 3, 4}, {0, 0, 5}, {0, 0, 0}});
  const QrResult qr = householder_qr(a);
  EXPECT_EQ(qr.q, Matrix::identity(4));
  EXPECT_EQ(qr.r_upper, a);
}

TEST(HouseholderQr, OnesAndRampByHand) {
  // Gram-Schmidt on (e | x), e = 1, x = (0,1,2,3):
  // R11 = |e| = 2, R12 = e.x / |e| = 3, R22 = |x - 1.5 e| = sqrt(5).
  const Matrix a = Matrix::from_rows({{1, 0}, {1, 1}, {1, 2}, {1, 3}});
  const QrResult qr = householder_qr(a);
  EXPECT_NEAR(qr.r_upper(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(qr.r_upper(0, 1), 3.0, 1e-14);
  EXPECT_NEAR(qr.r_upper(1, 1), std::sqrt(5.0), 1e-14);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(qr.r_upper(i, 0), 0.0);
}

TEST(HouseholderQr, RandomInvariants) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = testing::random_matrix(rng, 5, 3);
    const QrResult qr = householder_qr(a);
    EXPECT_LE(testing::orthogonality_error(qr.q), 1e-12 * 5);
    EXPECT_LE(testing::naive_frobenius(testing::naive_multiply(qr.q, qr.r_upper) - a),
              1e-12 * std::max(1.0, testing::naive_frobenius(a)));
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_GE(qr.r_upper(j, j), 0.0);
      for (std::size_t i = j + 1; i < 5; ++i) EXPECT_EQ(qr.r_upper(i, j), 0.0);
    }
  }
}

TEST(HouseholderQr, FactoredApplicationMatchesExplicitQ) {
  Rng rng(6);
  const Matrix a = testing::random_matrix(rng, 7, 3);
  const Matrix b = testing::random_matrix(rng, 7, 2);
  const HouseholderQr qr(a);
  const Matrix q = qr.q();
  EXPECT_LE(testing::max_abs_diff(qr.apply_qt(b), testing::naive_multiply(testing::naive_transpose(q), b)),
            1e-14);
  EXPECT_LE(testing::max_abs_diff(qr.apply_q(qr.apply_qt(b)), b), 1e-14);
}

TEST(HouseholderQr, WideInputRejected) {
  EXPECT_THROW(householder_qr(Matrix(2, 3)), DimensionError);
}

// --- SVD ---

TEST(JacobiSvd, DiagonalMatrix) {
  const Matrix a = Matrix::from_rows({{3, 0}, {0, 1}});
  const SvdResult svd = jacobi_svd(a);
  EXPECT_EQ(svd.sigma, (Vector{3, 1}));
  EXPECT_EQ(svd.u, Matrix::identity(2));
  EXPECT_EQ(svd.v, Matrix::identity(2));
}

TEST(JacobiSvd, DiagonalIsSortedDescending) {
  const Matrix a = Matrix::from_rows({{1, 0}, {0, 3}});
  const SvdResult svd = jacobi_svd(a);
  EXPECT_EQ(svd.sigma, (Vector{3, 1}));
  expect_svd_invariants(a, svd);
}

TEST(JacobiSvd, SignsMatrixHasDoubleSingularValue) {
  const Matrix b = Matrix::from_rows({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  const SvdResult svd = jacobi_svd(b);
  EXPECT_NEAR(svd.sigma[0], 2.0, 1e-12);
  EXPECT_NEAR(svd.sigma[1], 2.0, 1e-12);
  expect_svd_invariants(b, svd);
}

TEST(JacobiSvd, AugmentedRankDeficientExample) {
  const Matrix b = Matrix::from_rows({{1, 0, 1}, {0, 0, 1}, {0, 0, 1}});
  const SvdResult svd = jacobi_svd(b);
  EXPECT_NEAR(svd.sigma[0], std::sqrt(2.0 + std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(svd.sigma[1], std::sqrt(2.0 - std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(svd.sigma[2], 0.0, 1e-12);
  EXPECT_NEAR(svd.v(0, 2), 0.0, 1e-12);
  EXPECT_NEAR(svd.v(1, 2), 1.0, 1e-12);
  EXPECT_NEAR(svd.v(2, 2), 0.0, 1e-12);
  expect_svd_invariants(b, svd);
}

TEST(JacobiSvd, SignConventionOnEveryColumnOfV) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = testing::random_matrix(rng, 6, 4);
    const SvdResult svd = jacobi_svd(a);
    for (std::size_t k = 0; k < 4; ++k) {
      std::size_t arg = 0;
      for (std::size_t i = 1; i < 4; ++i) {
        if (std::abs(svd.v(i, k)) > std::abs(svd.v(arg, k))) arg = i;
      }
      EXPECT_GE(svd.v(arg, k), 0.0);
    }
  }
}

TEST(JacobiSvd, RandomInvariantsIncludingWideAndRankDeficient) {
  Rng rng(9);
  std::uniform_int_distribution<std::size_t> dim(1, 20);
  std::uniform_int_distribution<std::size_t> cols(1, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = dim(rng);
    const std::size_t n = cols(rng);
    Matrix a = trial % 4 == 3 ? testing::random_low_rank(rng, m, n, 1 + (m + n) % 3)
                              : testing::random_matrix(rng, m, n, -10.0, 10.0);
    const SvdResult svd = jacobi_svd(a);
    expect_svd_invariants(a, svd);
    double sum = 0.0;
    for (std::size_t i = 0; i < svd.sigma.size(); ++i) sum += svd.sigma[i] * svd.sigma[i];
    const double f = testing::naive_frobenius(a);
    EXPECT_LE(std::abs(sum - f * f), 1e-10 * std::max(f * f, 1e-300));
  }
}

TEST(JacobiSvd, ZeroMatrix) {
  const Matrix a(4, 3);
  const SvdResult svd = jacobi_svd(a);
  EXPECT_EQ(svd.sigma, (Vector{0, 0, 0}));
  expect_svd_invariants(a, svd);
  EXPECT_EQ(svd.numerical_rank(), 0u);
}

TEST(JacobiSvd, ThinUHasMinDimColumns) {
  Rng rng(10);
  const Matrix a = testing::random_matrix(rng, 30, 3);
  const SvdResult thin = jacobi_svd(a, UFactor::Thin);
  EXPECT_EQ(thin.u.cols(), 3u);
  EXPECT_LE(testing::orthogonality_error(thin.u), 1e-12 * 30);
  EXPECT_LE(testing::naive_frobenius(reconstruct(thin) - a), 1e-11 * testing::naive_frobenius(a));
}

// --- pseudo-inverse ---

TEST(PinvApply, Identity) {
  const SvdResult svd = jacobi_svd(Matrix::identity(3));
  EXPECT_LE(testing::max_abs_diff(pinv_apply(svd, Vector{1, -2, 5}), Vector{1, -2, 5}), 1e-15);
}

TEST(PinvApply, RankDeficientPicksMinimumNorm) {
  const Matrix a = Matrix::from_rows({{1, 0}, {0, 0}, {0, 0}});
  const Vector x = pinv_apply(jacobi_svd(a), Vector{1, 1, 1});
  EXPECT_NEAR(x[0], 1.0, 1e-15);
  EXPECT_EQ(x[1], 0.0);
}

TEST(PinvApply, MatchesNormalEquationsOnFullRank) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = testing::random_matrix(rng, 4, 2);
    const Vector y = testing::random_vector(rng, 4);
    // 2x2 normal equations solved by Cramer's rule.
    double s00 = 0, s01 = 0, s11 = 0, t0 = 0, t1 = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      s00 += a(i, 0) * a(i, 0);
      s01 += a(i, 0) * a(i, 1);
      s11 += a(i, 1) * a(i, 1);
      t0 += a(i, 0) * y[i];
      t1 += a(i, 1) * y[i];
    }
    const double det = s00 * s11 - s01 * s01;
    const Vector expected{(s11 * t0 - s01 * t1) / det, (s00 * t1 - s01 * t0) / det};
    const Vector x = pinv_apply(jacobi_svd(a), y);
    EXPECT_LE(testing::max_abs_diff(x, expected), 1e-8 * expected.norm());
  }
}

TEST(PinvApply, LengthMismatch) {
  EXPECT_THROW(pinv_apply(jacobi_svd(Matrix::identity(2)), Vector(3)), DimensionError);
}

// --- truncation ---

TEST(TruncateRank, FullRankReconstructs) {
  Rng rng(13);
  const Matrix a = testing::random_matrix(rng, 5, 3);
  const Matrix e = truncate_rank(jacobi_svd(a), 3);
  EXPECT_LE(testing::naive_frobenius(e - a), 1e-11 * std::max(1.0, testing::naive_frobenius(a)));
}

TEST(TruncateRank, SignsMatrixRankOne) {
  const Matrix b = Matrix::from_rows({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  const Matrix e = truncate_rank(jacobi_svd(b), 1);
  EXPECT_NEAR(testing::naive_frobenius(b - e), 2.0, 1e-12);
  EXPECT_EQ(jacobi_svd(e).numerical_rank(), 1u);
}

TEST(TruncateRank, DiscardedEnergyIsTailSigma) {
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = testing::random_matrix(rng, 5, 3);
    const SvdResult svd = jacobi_svd(a);
    const double err = testing::naive_frobenius(a - truncate_rank(svd, 2));
    EXPECT_LE(testing::relative(err * err, svd.sigma[2] * svd.sigma[2]), 1e-10);
  }
}

TEST(TruncateRank, OutOfRange) {
  EXPECT_THROW(truncate_rank(jacobi_svd(Matrix(3, 2)), 3), DimensionError);
}

TEST(TruncateRank, BeatsRandomLowRankCompetitors) {
  Rng rng(15);
  const Matrix a = testing::random_matrix(rng, 6, 4);
  for (std::size_t k = 1; k <= 3; ++k) {
    const double best = testing::naive_frobenius(a - truncate_rank(jacobi_svd(a), k));
    for (int trial = 0; trial < 200; ++trial) {
      const Matrix competitor = testing::random_low_rank(rng, 6, 4, k);
      EXPECT_LE(best, testing::naive_frobenius(a - competitor) + 1e-12);
    }
  }
}

// --- helpers ---

TEST(Cholesky, SolvesSpdAndRejectsSingular) {
  Matrix b = Matrix::column(Vector{1, 2});
  ASSERT_TRUE(cholesky_solve(Matrix::from_rows({{4, 2}, {2, 3}}), b, 1e-14));
  EXPECT_NEAR(b(0, 0), -0.125, 1e-15);
  EXPECT_NEAR(b(1, 0), 0.75, 1e-15);
  Matrix c = Matrix::column(Vector{1, 2});
  EXPECT_FALSE(cholesky_solve(Matrix::from_rows({{1, 1}, {1, 1}}), c, 1e-14));
}

}  // namespace
}  // namespace tlsq
