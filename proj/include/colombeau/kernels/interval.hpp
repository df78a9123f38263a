#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace colombeau {

/// Closed interval [lo, hi] in the global chart, lo < hi.
class Interval {
 public:
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw std::invalid_argument("invalid interval [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
    }
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double midpoint() const { return 0.5 * (lo_ + hi_); }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }

  bool operator==(const Interval&) const = default;

 private:
  double lo_;
  double hi_;
};

}  // namespace colombeau
