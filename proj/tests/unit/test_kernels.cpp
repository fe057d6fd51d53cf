#include <gtest/gtest.h>

#include <vector>

#include "test_support.hpp"
#include "tlsq/kernels.hpp"

namespace tlsq {
namespace {

using testing::Rng;

// Parallel kernels split only over independent outputs, so they must agree
// with the serial reference bit for bit.

TEST(Kernels, GemmBitwiseMatchesSerial) {
  Rng rng(1);
  const Matrix a = testing::random_matrix(rng, 120, 70);
  const Matrix b = testing::random_matrix(rng, 70, 90);
  Matrix par(120, 90);
  Matrix ser(120, 90);
  kernels::gemm(a, b, par);
  kernels::serial::gemm(a, b, ser);
  EXPECT_EQ(par, ser);
}

TEST(Kernels, ColumnMeansAndCenteringBitwiseMatchSerial) {
  Rng rng(2);
  const Matrix a = testing::random_matrix(rng, 50000, 4, -5.0, 5.0);
  std::vector<double> par(4);
  std::vector<double> ser(4);
  kernels::column_means(a, par);
  kernels::serial::column_means(a, ser);
  EXPECT_EQ(par, ser);

  Matrix pa = a;
  Matrix sa = a;
  kernels::subtract_row(pa, par);
  kernels::serial::subtract_row(sa, ser);
  EXPECT_EQ(pa, sa);
}

TEST(Kernels, RotatePairBitwiseMatchesSerial) {
  Rng rng(3);
  const Vector x0 = testing::random_vector(rng, 40000);
  const Vector y0 = testing::random_vector(rng, 40000);
  Vector px = x0, py = y0, sx = x0, sy = y0;
  kernels::rotate_pair(px.values(), py.values(), 0.6, 0.8);
  kernels::serial::rotate_pair(sx.values(), sy.values(), 0.6, 0.8);
  EXPECT_EQ(px, sx);
  EXPECT_EQ(py, sy);
}

TEST(Kernels, SmallInputsStaySerialAndCorrect) {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  Matrix out(2, 2);
  kernels::gemm(a, a, out);
  EXPECT_EQ(out, Matrix::from_rows({{7, 10}, {15, 22}}));
  std::vector<double> means(2);
  kernels::column_means(a, means);
  EXPECT_EQ(means, (std::vector<double>{2, 3}));
  EXPECT_GE(kernels::max_threads(), 1);
}

}  // namespace
}  // namespace tlsq
