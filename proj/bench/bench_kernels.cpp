// Serial reference vs OpenMP kernels, plus the end-to-end fits they feed.
// Run with OMP_NUM_THREADS=N to vary the thread count.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tlsq/geometry.hpp"
#include "tlsq/kernels.hpp"
#include "tlsq/linalg.hpp"

namespace {

using tlsq::Matrix;

Matrix random_matrix(std::size_t m, std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> data(m * n);
  for (double& v : data) v = dist(rng);
  return Matrix(m, n, std::move(data));
}

template <auto Gemm>
void BM_Gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1);
  const Matrix b = random_matrix(n, n, 2);
  Matrix out(n, n);
  for (auto _ : state) {
    Gemm(a, b, out);
    benchmark::DoNotOptimize(out.data().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}

template <auto Means, auto Subtract>
void BM_Center(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Matrix source = random_matrix(m, 8, 3);
  std::vector<double> mean(8);
  for (auto _ : state) {
    Matrix a = source;
    Means(a, mean);
    Subtract(a, mean);
    benchmark::DoNotOptimize(a.data().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(m * 8));
}

template <auto Rotate>
void BM_Rotate(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  Matrix a = random_matrix(m, 2, 4);
  for (auto _ : state) {
    Rotate(a.col(0), a.col(1), 0.8, 0.6);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(m));
}

void BM_JacobiSvdTall(benchmark::State& state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 6, 5);
  for (auto _ : state) benchmark::DoNotOptimize(tlsq::jacobi_svd(a, tlsq::UFactor::Thin));
}

void BM_FitHyperplane(benchmark::State& state) {
  const tlsq::PointCloud cloud(random_matrix(static_cast<std::size_t>(state.range(0)), 4, 6));
  for (auto _ : state) benchmark::DoNotOptimize(tlsq::fit_hyperplane_tls(cloud));
}

namespace k = tlsq::kernels;

BENCHMARK(BM_Gemm<k::serial::gemm>)->Name("gemm/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Gemm<k::gemm>)->Name("gemm/omp")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Center<k::serial::column_means, k::serial::subtract_row>)
    ->Name("center/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 19);
BENCHMARK(BM_Center<k::column_means, k::subtract_row>)
    ->Name("center/omp")->RangeMultiplier(8)->Range(1 << 10, 1 << 19);
BENCHMARK(BM_Rotate<k::serial::rotate_pair>)->Name("rotate/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_Rotate<k::rotate_pair>)->Name("rotate/omp")->RangeMultiplier(8)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_JacobiSvdTall)->RangeMultiplier(8)->Range(1 << 8, 1 << 16);
BENCHMARK(BM_FitHyperplane)->RangeMultiplier(8)->Range(1 << 8, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
