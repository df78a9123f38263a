#include <immintrin.h>

#include <cmath>

#include "colombeau/kernels/simd.hpp"

namespace colombeau::simd {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

WeightedSum weighted_sum_avx2(std::span<const double> w, std::span<const double> f) {
  const std::size_t n = w.size();
  __m256d acc = _mm256_setzero_pd();
  __m256d acc_abs = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_mul_pd(_mm256_loadu_pd(&w[i]), _mm256_loadu_pd(&f[i]));
    acc = _mm256_add_pd(acc, t);
    acc_abs = _mm256_add_pd(acc_abs, abs_pd(t));
  }
  WeightedSum r{hsum(acc), hsum(acc_abs)};
  for (; i < n; ++i) {
    const double t = w[i] * f[i];
    r.sum += t;
    r.abs_sum += std::fabs(t);
  }
  return r;
}

double max_abs_avx2(std::span<const double> v) {
  const std::size_t n = v.size();
  __m256d m = _mm256_setzero_pd();
  __m256d nan_seen = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(&v[i]);
    nan_seen = _mm256_or_pd(nan_seen, _mm256_cmp_pd(x, x, _CMP_UNORD_Q));
    m = _mm256_max_pd(m, abs_pd(x));
  }
  if (_mm256_movemask_pd(nan_seen) != 0) return std::nan("");
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double r = lanes[0];
  for (int k = 1; k < 4; ++k) r = lanes[k] > r ? lanes[k] : r;
  for (; i < n; ++i) {
    const double a = std::fabs(v[i]);
    if (std::isnan(a)) return a;
    if (a > r) r = a;
  }
  return r;
}

void affine_map_avx2(std::span<const double> in, double scale, double shift,
                     std::span<double> out) {
  const std::size_t n = in.size();
  const __m256d s = _mm256_set1_pd(scale);
  const __m256d t = _mm256_set1_pd(shift);
  std::size_t i = 0;
  // mul then add (no FMA) keeps results bit-identical to the scalar kernel.
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(&out[i], _mm256_add_pd(_mm256_mul_pd(_mm256_loadu_pd(&in[i]), s), t));
  }
  for (; i < n; ++i) out[i] = in[i] * scale + shift;
}

RegressionSums regression_sums_avx2(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  __m256d sx = _mm256_setzero_pd(), sy = _mm256_setzero_pd(), sxx = _mm256_setzero_pd(),
          sxy = _mm256_setzero_pd(), syy = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(&x[i]);
    const __m256d b = _mm256_loadu_pd(&y[i]);
    sx = _mm256_add_pd(sx, a);
    sy = _mm256_add_pd(sy, b);
    sxx = _mm256_fmadd_pd(a, a, sxx);
    sxy = _mm256_fmadd_pd(a, b, sxy);
    syy = _mm256_fmadd_pd(b, b, syy);
  }
  RegressionSums s{static_cast<double>(n), hsum(sx), hsum(sy), hsum(sxx), hsum(sxy), hsum(syy)};
  for (; i < n; ++i) {
    s.sx += x[i];
    s.sy += y[i];
    s.sxx += x[i] * x[i];
    s.sxy += x[i] * y[i];
    s.syy += y[i] * y[i];
  }
  return s;
}

constexpr KernelTable kAvx2{weighted_sum_avx2, max_abs_avx2, affine_map_avx2,
                            regression_sums_avx2};

}  // namespace

const KernelTable* avx2_kernels() { return &kAvx2; }

}  // namespace colombeau::simd
