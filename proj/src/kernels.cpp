#include "monogen/kernels.hpp"

#include <atomic>

namespace monogen::kernels {

namespace {

std::atomic<Exec> g_default{
#if defined(_OPENMP)
    Exec::Parallel
#else
    Exec::Serial
#endif
};

}  // namespace

bool parallel_available() {
#if defined(_OPENMP)
  return true;
#else
  return false;
#endif
}

Exec default_exec() { return g_default.load(std::memory_order_relaxed); }
void set_default_exec(Exec e) { g_default.store(e, std::memory_order_relaxed); }

Mat gemm(const Mat& a, const Mat& b, Exec exec) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  const Field& F = a.field_ptr() ? a.field() : b.field();
  const std::size_t R = a.rows(), C = b.cols(), K = a.cols();
  Mat out(F, R, C);
  auto row_kernel = [&](std::size_t r) {
    for (std::size_t k = 0; k < K; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < C; ++c) {
        const Scalar& y = b(k, c);
        if (!y.is_zero()) out(r, c) += x * y;
      }
    }
  };
  const bool par = exec == Exec::Parallel && parallel_available() && R * C * K >= kParallelThreshold;
  if (par) {
    const long n = static_cast<long>(R);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (long r = 0; r < n; ++r) row_kernel(static_cast<std::size_t>(r));
  } else {
    for (std::size_t r = 0; r < R; ++r) row_kernel(r);
  }
  return out;
}

Echelon row_reduce(Mat m, Exec exec) {
  Echelon e;
  const std::size_t R = m.rows(), C = m.cols();
  if (!m.field_ptr()) {
    e.reduced = std::move(m);
    return e;
  }
  const bool par = exec == Exec::Parallel && parallel_available() && R * C >= kParallelThreshold;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t piv = row;
    while (piv < R && m(piv, col).is_zero()) ++piv;
    if (piv == R) continue;
    if (piv != row)
      for (std::size_t c = col; c < C; ++c) std::swap(m(piv, c), m(row, c));
    Scalar inv = m(row, col).inv();
    for (std::size_t c = col; c < C; ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    auto eliminate = [&](std::size_t r) {
      if (r == row) return;
      Scalar factor = m(r, col);
      if (factor.is_zero()) return;
      for (std::size_t c = col; c < C; ++c) {
        const Scalar& p = m(row, c);
        if (!p.is_zero()) m(r, c) -= factor * p;
      }
    };
    if (par) {
      const long n = static_cast<long>(R);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
#endif
      for (long r = 0; r < n; ++r) eliminate(static_cast<std::size_t>(r));
    } else {
      for (std::size_t r = 0; r < R; ++r) eliminate(r);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

}  // namespace monogen::kernels
