#pragma once

#include <span>
#include <string_view>

namespace colombeau::simd {

// Data-parallel inner loops shared by quadrature, sweeps and regression.
// Every kernel has a scalar reference implementation; wider variants are
// selected once at startup from cpuid and must agree with the reference
// (exactly for max/affine, to round-off for the reductions).

enum class Isa { scalar, avx2 };

std::string_view name(Isa isa);

struct WeightedSum {
  double sum = 0.0;      // sum_i w_i f_i
  double abs_sum = 0.0;  // sum_i |w_i f_i|, the round-off scale of `sum`
};

struct RegressionSums {
  double n = 0.0;
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
};

struct KernelTable {
  WeightedSum (*weighted_sum)(std::span<const double> w, std::span<const double> f);
  double (*max_abs)(std::span<const double> v);
  void (*affine_map)(std::span<const double> in, double scale, double shift, std::span<double> out);
  RegressionSums (*regression_sums)(std::span<const double> x, std::span<const double> y);
};

const KernelTable& scalar_kernels();
/// nullptr when the binary was built without the AVX2 translation unit.
const KernelTable* avx2_kernels();

/// Best ISA supported by both the build and the running CPU.
Isa detected_isa();
Isa active_isa();
/// Overrides dispatch (tests and benchmarks). Throws std::invalid_argument if
/// the ISA is unavailable.
void force_isa(Isa isa);

const KernelTable& kernels();

inline WeightedSum weighted_sum(std::span<const double> w, std::span<const double> f) {
  return kernels().weighted_sum(w, f);
}
inline double max_abs(std::span<const double> v) { return kernels().max_abs(v); }
inline void affine_map(std::span<const double> in, double scale, double shift,
                       std::span<double> out) {
  kernels().affine_map(in, scale, shift, out);
}
inline RegressionSums regression_sums(std::span<const double> x, std::span<const double> y) {
  return kernels().regression_sums(x, y);
}

}  // namespace colombeau::simd
