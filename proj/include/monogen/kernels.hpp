#pragma once

// Data-parallel kernels. Every kernel has a serial reference path and an
// OpenMP path; the two must produce identical results (exact arithmetic, fixed
// pivot order, deterministic reduction order). Tests compare them and
// bench/bench_kernels.cpp times them.

#include <cstddef>
#include <vector>

#include "monogen/exactfield.hpp"

namespace monogen::kernels {

enum class Exec { Serial, Parallel };

/// True when the library was compiled with OpenMP support.
bool parallel_available();
/// Execution policy used by Mat::operator* and rref. Defaults to Parallel when
/// OpenMP is available.
Exec default_exec();
void set_default_exec(Exec e);

/// Work below this many scalar multiply-adds runs serially even under Parallel.
inline constexpr std::size_t kParallelThreshold = 4096;

Mat gemm(const Mat& a, const Mat& b, Exec exec);
/// Gauss-Jordan elimination; the pivot is the first nonzero entry at or below
/// the current row in the current column.
Echelon row_reduce(Mat m, Exec exec);

/// out[i] = fn(i) for 0 <= i < count. fn must be safe to call concurrently.
template <class R, class Fn>
std::vector<R> tabulate(std::size_t count, Fn&& fn, Exec exec) {
  std::vector<R> out(count);
  if (exec == Exec::Parallel && parallel_available() && count > 1) {
    const long n = static_cast<long>(count);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  }
  return out;
}

}  // namespace monogen::kernels
