#include "colombeau/kernels/finite_diff.hpp"

namespace colombeau {

double central_diff(const std::function<double(double)>& g, double t0, double h) {
  return (g(t0 + h) - g(t0 - h)) / (2.0 * h);
}

double central_diff_richardson(const std::function<double(double)>& g, double t0, double h) {
  const double coarse = central_diff(g, t0, h);
  const double fine = central_diff(g, t0, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace colombeau
