#include <benchmark/benchmark.h>

#include <random>

#include "taptest/clustering.hpp"
#include "taptest/kernels.hpp"
#include "taptest/pca.hpp"
#include "taptest/synthesis.hpp"

using namespace taptest;

namespace {

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  return m;
}

template <bool Parallel>
void BM_ProjectRows(benchmark::State& state) {
  const Matrix x = random_matrix(state.range(0), 100, 1);
  const Vector mean = x.colwise().mean().transpose();
  const Matrix basis = random_matrix(100, 2, 2);
  Matrix out;
  for (auto _ : state) {
    if constexpr (Parallel) kernels::parallel::project_rows(x, mean, basis, out);
    else kernels::serial::project_rows(x, mean, basis, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_WindowPeaks(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  std::vector<double> x(static_cast<std::size_t>(state.range(0)));
  for (auto& v : x) v = g(rng);
  for (auto _ : state) {
    auto p = Parallel ? kernels::parallel::window_peaks(x, 22050) : kernels::serial::window_peaks(x, 22050);
    benchmark::DoNotOptimize(p.data());
  }
  state.SetBytesProcessed(state.iterations() * state.range(0) * static_cast<std::int64_t>(sizeof(double)));
}

template <bool Parallel>
void BM_NearestOnGrid(benchmark::State& state) {
  const Matrix centroids = random_matrix(5, 2, 4);
  const kernels::Grid grid{-3, 3, -3, 3, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) {
    auto cells = Parallel ? kernels::parallel::nearest_on_grid(centroids, grid)
                          : kernels::serial::nearest_on_grid(centroids, grid);
    benchmark::DoNotOptimize(cells.data());
  }
}

void BM_PcaFit(benchmark::State& state) {
  TapTable t;
  t.rows = random_matrix(state.range(0), 100, 5);
  for (auto _ : state) benchmark::DoNotOptimize(fit(t).projection.data());
}

void BM_KMeans(benchmark::State& state) {
  const Matrix points = random_matrix(state.range(0), 2, 6);
  KMeansOptions o;
  o.k = 5;
  for (auto _ : state) benchmark::DoNotOptimize(kmeans_fit(points, o).objective);
}

}  // namespace

BENCHMARK(BM_ProjectRows<false>)->Arg(1000)->Arg(100000);
BENCHMARK(BM_ProjectRows<true>)->Arg(1000)->Arg(100000);
BENCHMARK(BM_WindowPeaks<false>)->Arg(44100 * 40);
BENCHMARK(BM_WindowPeaks<true>)->Arg(44100 * 40);
BENCHMARK(BM_NearestOnGrid<false>)->Arg(200)->Arg(1000);
BENCHMARK(BM_NearestOnGrid<true>)->Arg(200)->Arg(1000);
BENCHMARK(BM_PcaFit)->Arg(90)->Arg(500);
BENCHMARK(BM_KMeans)->Arg(90)->Arg(5000);

BENCHMARK_MAIN();
