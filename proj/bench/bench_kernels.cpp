#include <benchmark/benchmark.h>

#include <random>

#include "monogen/exactfield.hpp"
#include "monogen/kernels.hpp"

using namespace monogen;

namespace {

Mat random_mat(const Field& F, std::size_t r, std::size_t c, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> v(-5, 5), z(0, 2);
  Mat m(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (z(rng) == 0) m(i, j) = F.element({v(rng), v(rng)});
  return m;
}

void run_gemm(benchmark::State& st, kernels::Exec exec) {
  const Field& F = Field::extension({1, 0, 1}, "i");
  const auto n = static_cast<std::size_t>(st.range(0));
  Mat a = random_mat(F, n, n, 1), b = random_mat(F, n, n, 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::gemm(a, b, exec));
}

void run_rref(benchmark::State& st, kernels::Exec exec) {
  const Field& F = Field::extension({1, 0, 1}, "i");
  const auto n = static_cast<std::size_t>(st.range(0));
  Mat a = random_mat(F, n, n + n / 2, 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::row_reduce(a, exec));
}

void BM_GemmSerial(benchmark::State& st) { run_gemm(st, kernels::Exec::Serial); }
void BM_GemmParallel(benchmark::State& st) { run_gemm(st, kernels::Exec::Parallel); }
void BM_RrefSerial(benchmark::State& st) { run_rref(st, kernels::Exec::Serial); }
void BM_RrefParallel(benchmark::State& st) { run_rref(st, kernels::Exec::Parallel); }

}  // namespace

BENCHMARK(BM_GemmSerial)->Arg(32)->Arg(64);
BENCHMARK(BM_GemmParallel)->Arg(32)->Arg(64);
BENCHMARK(BM_RrefSerial)->Arg(32)->Arg(64);
BENCHMARK(BM_RrefParallel)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
