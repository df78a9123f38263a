#include <cmath>

#include "colombeau/kernels/simd.hpp"

namespace colombeau::simd {
namespace {

WeightedSum weighted_sum_scalar(std::span<const double> w, std::span<const double> f) {
  WeightedSum r;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double t = w[i] * f[i];
    r.sum += t;
    r.abs_sum += std::fabs(t);
  }
  return r;
}

double max_abs_scalar(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) {
    const double a = std::fabs(x);
    // NaN propagates so a broken sweep cannot masquerade as small.
    if (a > m || std::isnan(a)) m = a;
    if (std::isnan(m)) return m;
  }
  return m;
}

void affine_map_scalar(std::span<const double> in, double scale, double shift,
                       std::span<double> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] * scale + shift;
}

RegressionSums regression_sums_scalar(std::span<const double> x, std::span<const double> y) {
  RegressionSums s;
  s.n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    s.sx += x[i];
    s.sy += y[i];
    s.sxx += x[i] * x[i];
    s.sxy += x[i] * y[i];
    s.syy += y[i] * y[i];
  }
  return s;
}

constexpr KernelTable kScalar{weighted_sum_scalar, max_abs_scalar, affine_map_scalar,
                              regression_sums_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace colombeau::simd
