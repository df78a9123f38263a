#pragma once

#include <span>
#include <vector>

namespace colombeau {

/// Strictly decreasing geometric sequence of scale parameters in (0, 1].
class EpsilonGrid {
 public:
  /// Validates: >= 4 entries, all in (0,1], strictly decreasing, constant ratio.
  explicit EpsilonGrid(std::vector<double> values);

  /// {2^-k : k = k_first..k_last}.
  static EpsilonGrid powers_of_two(int k_first, int k_last);
  /// eps_max, eps_max/ratio, ... down to the last value >= eps_min (relative slack 1e-9).
  static EpsilonGrid geometric(double eps_max, double eps_min, double ratio = 2.0);
  /// The default sweep {2^-k : k = 2..14}.
  static EpsilonGrid standard() { return powers_of_two(2, 14); }

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double ratio() const { return values_[0] / values_[1]; }

  /// Grid with the smallest `n` entries dropped (used for truncation checks).
  EpsilonGrid truncated(std::size_t n) const;

 private:
  std::vector<double> values_;
};

struct SlopeSample {
  double epsilon;
  double value;
  /// Per-sample noise floor; the effective floor is the larger of this and
  /// SlopeFitOptions::floor.
  double floor = 0.0;
};

struct SlopeFitOptions {
  /// Values below this are treated as exact zeros and excluded from the fit.
  double floor = 1e-14;
  /// Fraction of the resolvable samples (smallest eps first) used in the fit.
  double tail_fraction = 0.5;
  int min_points = 4;
};

struct SlopeFit {
  enum class Status { fitted, machine_zero };
  Status status = Status::fitted;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 1.0;
  int points_used = 0;
  int points_resolvable = 0;

  bool machine_zero() const { return status == Status::machine_zero; }
};

/// Least-squares slope of log(value) against log(eps) over the tail window.
///
/// Fewer than three resolvable samples (value >= floor) is reported as
/// machine zero: the quantity decays below double precision faster than the
/// grid can measure. Throws std::invalid_argument on < 4 samples or negative
/// values.
SlopeFit fit_slope(std::span<const SlopeSample> samples, SlopeFitOptions opts = {});

}  // namespace colombeau
