#pragma once

#include <functional>

namespace colombeau {

/// (g(t0+h) - g(t0-h)) / (2h).
double central_diff(const std::function<double(double)>& g, double t0, double h);

/// Central difference at h and h/2 combined as (4 D(h/2) - D(h)) / 3, which
/// cancels the h^2 term.
double central_diff_richardson(const std::function<double(double)>& g, double t0, double h);

}  // namespace colombeau
