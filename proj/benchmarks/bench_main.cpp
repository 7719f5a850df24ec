#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mssc/certify.hpp"
#include "mssc/clustering.hpp"
#include "mssc/objective.hpp"
#include "mssc/oracle.hpp"

namespace {

using namespace mssc;

DataSet random_data(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vec> pts(m, Vec(n));
  for (Vec& p : pts) {
    for (double& c : p) c = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }
  return DataSet::from_points(std::move(pts));
}

void BM_objective(benchmark::State& state) {
  const DataSet data = random_data(static_cast<std::size_t>(state.range(0)), 3, 7);
  const CentroidSystem x = initial_centroids(data, 5, InitStrategy::FirstK);
  for (auto _ : state) {
    benchmark::DoNotOptimize(objective_f(data, x));
  }
}
BENCHMARK(BM_objective)->Arg(100)->Arg(1000);

void BM_kmeans(benchmark::State& state) {
  const DataSet data = random_data(static_cast<std::size_t>(state.range(0)), 2, 11);
  const CentroidSystem init = initial_centroids(data, 8, InitStrategy::RandomPoints, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kmeans(data, init, 0.0, 200));
  }
}
BENCHMARK(BM_kmeans)->Arg(200)->Arg(1000);

void BM_global_solve(benchmark::State& state) {
  const DataSet data = random_data(static_cast<std::size_t>(state.range(0)), 2, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(global_solve(data, 3));
  }
}
BENCHMARK(BM_global_solve)->Arg(8)->Arg(10)->Arg(12);

void BM_certify(benchmark::State& state) {
  const DataSet data = random_data(static_cast<std::size_t>(state.range(0)), 3, 17);
  const KMeansResult km =
      kmeans(data, initial_centroids(data, 4, InitStrategy::RandomPoints, 5), 0.0, 500);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_nontrivial_local(data, km.final_centroids));
  }
}
BENCHMARK(BM_certify)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
