#include "colombeau/kernels/smooth_function.hpp"

namespace colombeau {

SmoothFunction SmoothFunction::constant(double c) {
  return SmoothFunction([c](double) { return c; }, [c](const Jet&) { return Jet(c); });
}

SmoothFunction SmoothFunction::identity() {
  return SmoothFunction([](double x) { return x; }, [](const Jet& x) { return x; });
}

double SmoothFunction::derivative(double x, int order) const {
  return (*lift_)(Jet::variable(x)).derivative(order);
}

SmoothFunction SmoothFunction::derivative() const {
  auto lift = lift_;
  return SmoothFunction(
      [lift](double x) { return (*lift)(Jet::variable(x)).derivative(1); },
      [lift](const Jet& x) {
        return compose((*lift)(Jet::variable(x.value())).differentiated(), x);
      });
}

SmoothFunction compose(const SmoothFunction& outer, const SmoothFunction& inner) {
  auto ov = outer.value_, iv = inner.value_;
  auto ol = outer.lift_, il = inner.lift_;
  return SmoothFunction([ov, iv](double x) { return (*ov)((*iv)(x)); },
                        [ol, il](const Jet& x) { return (*ol)((*il)(x)); });
}

SmoothFunction operator+(const SmoothFunction& a, const SmoothFunction& b) {
  auto av = a.value_, bv = b.value_;
  auto al = a.lift_, bl = b.lift_;
  return SmoothFunction([av, bv](double x) { return (*av)(x) + (*bv)(x); },
                        [al, bl](const Jet& x) { return (*al)(x) + (*bl)(x); });
}

SmoothFunction operator-(const SmoothFunction& a, const SmoothFunction& b) {
  auto av = a.value_, bv = b.value_;
  auto al = a.lift_, bl = b.lift_;
  return SmoothFunction([av, bv](double x) { return (*av)(x) - (*bv)(x); },
                        [al, bl](const Jet& x) { return (*al)(x) - (*bl)(x); });
}

SmoothFunction operator*(const SmoothFunction& a, const SmoothFunction& b) {
  auto av = a.value_, bv = b.value_;
  auto al = a.lift_, bl = b.lift_;
  return SmoothFunction([av, bv](double x) { return (*av)(x) * (*bv)(x); },
                        [al, bl](const Jet& x) { return (*al)(x) * (*bl)(x); });
}

SmoothFunction operator*(double c, const SmoothFunction& a) {
  auto av = a.value_;
  auto al = a.lift_;
  return SmoothFunction([av, c](double x) { return c * (*av)(x); },
                        [al, c](const Jet& x) { return c * (*al)(x); });
}

}  // namespace colombeau
