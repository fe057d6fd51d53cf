#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "tlsq/errors.hpp"
#include "tlsq/linalg.hpp"
#include "tlsq/oracles.hpp"

namespace tlsq {
namespace {

using testing::Rng;

TEST(LineAngleSearch, SymmetricSquareIsFlat) {
  const Matrix pts = Matrix::from_rows({{1, 1}, {-1, 1}, {1, -1}, {-1, -1}});
  const auto r = oracles::line_angle_search(pts, 3600);
  EXPECT_LE(r.max_sampled_objective - r.min_sampled_objective, 1e-12);
  EXPECT_NEAR(r.best_objective, 4.0, 1e-12);
  EXPECT_NEAR(oracles::line_objective(pts, 0.0), 4.0, 1e-15);
}

TEST(LineAngleSearch, CollinearPoints) {
  const Matrix pts = Matrix::from_rows({{0, 1}, {1, 3}, {2, 5}, {-1, -1}});
  const auto r = oracles::line_angle_search(pts, 360);
  EXPECT_LE(r.best_objective, 1e-20);
  EXPECT_NEAR(std::tan(r.best_angle), 2.0, 1e-8);
}

TEST(LineAngleSearch, AngleIsNormalizedAndBestOverSamples) {
  // A near-horizontal line sits right at the 0 / pi seam.
  const Matrix pts = Matrix::from_rows({{0, 0}, {1, -0.001}, {2, 0.0005}, {3, -0.002}});
  const auto r = oracles::line_angle_search(pts, 360);
  EXPECT_GE(r.best_angle, 0.0);
  EXPECT_LT(r.best_angle, std::numbers::pi);
  EXPECT_LE(r.best_objective, r.min_sampled_objective);
}

TEST(LineAngleSearch, SampleCountSelfConsistency) {
  Rng rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix pts = testing::random_matrix(rng, 15, 2);
    const auto coarse = oracles::line_angle_search(pts, 360);
    const auto fine = oracles::line_angle_search(pts, 3600);
    EXPECT_NEAR(coarse.best_objective, fine.best_objective, 1e-6);
  }
}

TEST(LineAngleSearch, Errors) {
  EXPECT_THROW(oracles::line_angle_search(Matrix(4, 3), 360), DimensionError);
  EXPECT_THROW(oracles::line_angle_search(Matrix(4, 2), 100), DimensionError);
}

TEST(SymEigenClosedForm, Examples) {
  EXPECT_EQ(oracles::sym_eigen_closed_form(Matrix::from_rows({{4, 0}, {0, 1}})), (Vector{4, 1}));
  const Vector e = oracles::sym_eigen_closed_form(Matrix::from_rows({{4, 0}, {0, 4}}));
  EXPECT_EQ(e, (Vector{4, 4}));
  EXPECT_THROW(oracles::sym_eigen_closed_form(Matrix::from_rows({{1, 2}, {3, 4}})), DimensionError);
  EXPECT_THROW(oracles::sym_eigen_closed_form(Matrix::identity(4)), DimensionError);
}

TEST(SymEigenClosedForm, TraceAndDeterminantIdentities) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix s = testing::random_matrix(rng, 3, 3, -5, 5);
    s = s + s.transpose();
    const Vector e = oracles::sym_eigen_closed_form(s);
    EXPECT_NEAR(e[0] + e[1] + e[2], s(0, 0) + s(1, 1) + s(2, 2), 1e-10);
    EXPECT_GE(e[0], e[1]);
    EXPECT_GE(e[1], e[2]);
  }
}

TEST(SymEigenClosedForm, MatchesJacobiSingularValuesSquared) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = testing::random_matrix(rng, 3, 2, -10, 10);
    const Vector e = oracles::sym_eigen_closed_form(testing::naive_multiply(testing::naive_transpose(a), a));
    const SvdResult svd = jacobi_svd(a);
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_LE(std::abs(svd.sigma[i] * svd.sigma[i] - e[i]), 1e-9 * std::max(1.0, e[0]));
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = testing::random_matrix(rng, 3, 3, -10, 10);
    const Vector e = oracles::sym_eigen_closed_form(testing::naive_multiply(testing::naive_transpose(a), a));
    const SvdResult svd = jacobi_svd(a);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_LE(std::abs(svd.sigma[i] - std::sqrt(std::max(e[i], 0.0))), 1e-9);
    }
  }
}

TEST(SymEigenClosedForm, RepeatedEigenvaluesStayAccurate) {
  // Rank-one Gram matrices have a double zero eigenvalue, where the plain
  // cubic formula would only be good to about sqrt(eps).
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix g = testing::random_matrix(rng, 3, 1, -1000, 1000);
    const Vector e = oracles::sym_eigen_closed_form(testing::naive_multiply(g, testing::naive_transpose(g)));
    const double top = testing::naive_frobenius(g) * testing::naive_frobenius(g);
    EXPECT_LE(testing::relative(e[0], top), 1e-14);
    EXPECT_LE(std::abs(e[1]), 1e-14 * top);
    EXPECT_LE(std::abs(e[2]), 1e-14 * top);
  }
  const Vector twin = oracles::sym_eigen_closed_form(Matrix::from_rows({{2, 1, 0}, {1, 2, 0}, {0, 0, 3}}));
  EXPECT_NEAR(twin[0], 3.0, 1e-15);
  EXPECT_NEAR(twin[1], 3.0, 1e-15);
  EXPECT_NEAR(twin[2], 1.0, 1e-15);
}

TEST(PerturbationProbe, Examples) {
  const auto sq = [](const Vector& x) { return x.dot(x); };
  EXPECT_TRUE(oracles::perturbation_probe(sq, Vector{0, 0, 0}, 50, 0.1));

  Rng rng(4);
  const Matrix a = testing::random_matrix(rng, 8, 3);
  const Vector y = testing::random_vector(rng, 8);
  const auto j = [&](const Vector& c) {
    const double r = (multiply(a, c) - y).norm();
    return r * r;
  };
  const Vector c = pinv_apply(jacobi_svd(a), y);
  EXPECT_TRUE(oracles::perturbation_probe(j, c, 100, 1e-3));
  EXPECT_FALSE(oracles::perturbation_probe(j, c + Vector{0.1, 0.1, 0.1}, 100, 1e-3));
}

TEST(PerturbationProbe, DeterministicForSeed) {
  int calls_a = 0;
  const auto wobbly = [&](const Vector& x) {
    ++calls_a;
    return std::sin(7 * x[0]) + x[1];
  };
  const bool first = oracles::perturbation_probe(wobbly, Vector{0.2, 0.0}, 20, 0.05, 7);
  const bool second = oracles::perturbation_probe(wobbly, Vector{0.2, 0.0}, 20, 0.05, 7);
  EXPECT_EQ(first, second);
}

}  // namespace
}  // namespace tlsq
