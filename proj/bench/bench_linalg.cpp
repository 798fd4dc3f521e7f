// Serial and OpenMP kernels of exact Gaussian elimination on random matrices.
#include <benchmark/benchmark.h>

#include <random>

#include "findim/linalg.hpp"

using namespace findim;

namespace {

// Rank-deficient by construction: the last quarter of the rows are combinations of the others.
DenseMatrix random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  DenseMatrix m(n, n);
  int free_rows = n - n / 4;
  for (int r = 0; r < free_rows; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = d(rng);
  for (int r = free_rows; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = m.at(r - free_rows, c) - 2 * m.at((r + 1) % free_rows, c);
  return m;
}

Field field_of(int64_t arg) { return arg == 0 ? Field::rationals() : Field::prime(32003); }

void BM_rank(benchmark::State& state, Kernel kernel) {
  Field k = field_of(state.range(1));
  DenseMatrix m = random_matrix(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(k, m, kernel));
}

void BM_batch_rank(benchmark::State& state, Kernel kernel) {
  Field k = field_of(state.range(1));
  std::vector<DenseMatrix> ms;
  for (unsigned i = 0; i < 32; ++i) ms.push_back(random_matrix(static_cast<int>(state.range(0)), i));
  for (auto _ : state) benchmark::DoNotOptimize(batch_rank(k, ms, kernel));
}

void grid(benchmark::internal::Benchmark* b, std::initializer_list<int> ns) {
  for (int n : ns)
    for (int field : {0, 1}) b->Args({n, field});
  b->ArgNames({"n", "Fp"})->Unit(benchmark::kMillisecond)->UseRealTime();
}

void sizes(benchmark::internal::Benchmark* b) { grid(b, {16, 48, 96}); }
void batch_sizes(benchmark::internal::Benchmark* b) { grid(b, {16, 32}); }

}  // namespace

BENCHMARK_CAPTURE(BM_rank, serial, Kernel::serial)->Apply(sizes);
BENCHMARK_CAPTURE(BM_rank, parallel, Kernel::parallel)->Apply(sizes);
BENCHMARK_CAPTURE(BM_batch_rank, serial, Kernel::serial)->Apply(batch_sizes);
BENCHMARK_CAPTURE(BM_batch_rank, parallel, Kernel::parallel)->Apply(batch_sizes);

BENCHMARK_MAIN();
