#include "colombeau/kernels/slope_fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "colombeau/kernels/simd.hpp"

namespace colombeau {

EpsilonGrid::EpsilonGrid(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 4) throw std::invalid_argument("epsilon grid needs at least 4 entries");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double e = values_[i];
    if (!(e > 0.0 && e <= 1.0)) {
      throw std::invalid_argument("epsilon grid entry outside (0,1]: " + std::to_string(e));
    }
    if (i > 0 && !(e < values_[i - 1])) {
      throw std::invalid_argument("epsilon grid must be strictly decreasing");
    }
  }
  const double r = values_[0] / values_[1];
  for (std::size_t i = 1; i + 1 < values_.size(); ++i) {
    if (std::fabs(values_[i] / values_[i + 1] - r) > 1e-9 * r) {
      throw std::invalid_argument("epsilon grid must be geometric");
    }
  }
}

EpsilonGrid EpsilonGrid::powers_of_two(int k_first, int k_last) {
  std::vector<double> v;
  for (int k = k_first; k <= k_last; ++k) v.push_back(std::ldexp(1.0, -k));
  return EpsilonGrid(std::move(v));
}

EpsilonGrid EpsilonGrid::geometric(double eps_max, double eps_min, double ratio) {
  if (!(ratio > 1.0)) throw std::invalid_argument("epsilon grid ratio must exceed 1");
  if (!(eps_min > 0.0) || !(eps_min < eps_max)) {
    throw std::invalid_argument("epsilon grid needs 0 < eps_min < eps_max");
  }
  std::vector<double> v;
  for (int k = 0;; ++k) {
    const double e = eps_max / std::pow(ratio, k);
    if (e < eps_min * (1.0 - 1e-9)) break;
    v.push_back(e);
  }
  return EpsilonGrid(std::move(v));
}

EpsilonGrid EpsilonGrid::truncated(std::size_t n) const {
  if (n >= values_.size()) throw std::invalid_argument("cannot truncate whole grid");
  return EpsilonGrid(std::vector<double>(values_.begin(), values_.end() - static_cast<long>(n)));
}

SlopeFit fit_slope(std::span<const SlopeSample> samples, SlopeFitOptions opts) {
  if (samples.size() < 4) throw std::invalid_argument("fit_slope needs at least 4 samples");
  std::vector<SlopeSample> usable;
  for (const auto& s : samples) {
    if (!(s.value >= 0.0) || !(s.epsilon > 0.0)) {
      throw std::invalid_argument("fit_slope needs positive eps and nonnegative values");
    }
    if (s.value >= std::max(opts.floor, s.floor)) usable.push_back(s);
  }
  SlopeFit fit;
  fit.points_resolvable = static_cast<int>(usable.size());
  if (usable.size() < 3) {
    fit.status = SlopeFit::Status::machine_zero;
    return fit;
  }
  std::sort(usable.begin(), usable.end(),
            [](const SlopeSample& a, const SlopeSample& b) { return a.epsilon < b.epsilon; });
  const auto n_usable = static_cast<int>(usable.size());
  int window = static_cast<int>(std::ceil(opts.tail_fraction * n_usable));
  window = std::clamp(std::max(window, opts.min_points), 3, n_usable);

  std::vector<double> lx(window), ly(window);
  for (int i = 0; i < window; ++i) {
    lx[i] = std::log(usable[i].epsilon);
    ly[i] = std::log(usable[i].value);
  }
  // Center before accumulating so the normal equations stay well conditioned.
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < window; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= window;
  my /= window;
  for (int i = 0; i < window; ++i) {
    lx[i] -= mx;
    ly[i] -= my;
  }
  const simd::RegressionSums s = simd::regression_sums(lx, ly);
  fit.points_used = window;
  fit.slope = s.sxy / s.sxx;
  fit.intercept = my - fit.slope * mx;
  const double ss_tot = s.syy;
  const double ss_res = std::max(0.0, s.syy - fit.slope * s.sxy);
  // A flat series fits its constant exactly.
  const double scale = std::max(1.0, std::fabs(my));
  if (ss_tot <= 1e-24 * scale * scale * window) {
    fit.r2 = 1.0;
  } else {
    fit.r2 = 1.0 - ss_res / ss_tot;
  }
  return fit;
}

}  // namespace colombeau
