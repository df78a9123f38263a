#include "colombeau/vector_field.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "colombeau/kernels/format.hpp"

namespace colombeau {

VectorField::VectorField(std::string name, SmoothFunction coefficient,
                         std::optional<ClosedFlow> closed_flow)
    : name_(std::move(name)),
      coefficient_(std::move(coefficient)),
      closed_flow_(std::move(closed_flow)) {}

VectorField VectorField::translation() {
  ClosedFlow flow{[](double tau, const Jet& x) { return x + tau; },
                  [](double, const Jet&) { return Jet(1.0); }};
  return VectorField("ddx", SmoothFunction::constant(1.0), flow);
}

VectorField VectorField::euler() {
  ClosedFlow flow{[](double tau, const Jet& x) { return std::exp(tau) * x; },
                  [](double tau, const Jet&) { return Jet(std::exp(tau)); }};
  return VectorField("euler", SmoothFunction::identity(), flow);
}

VectorField VectorField::sine_field(double b) {
  if (!(std::fabs(b) < 1.0)) throw std::invalid_argument("sinefield(b) needs |b| < 1");
  return VectorField("sinefield(" + format_number(b) + ")", SmoothFunction::generic([b](auto x) {
                       using std::sin;
                       return 1.0 + b * sin(x);
                     }));
}

Diffeomorphism VectorField::flow(double tau, FlowOptions opts) const {
  const std::string label = "Fl[" + name_ + "](" + format_number(tau) + ")";
  if (closed_flow_) {
    auto map = closed_flow_->map;
    auto jac = closed_flow_->jacobian;
    SmoothFunction fwd([map, tau](double x) { return map(tau, Jet(x)).value(); },
                       [map, tau](const Jet& x) { return map(tau, x); });
    SmoothFunction dfwd([jac, tau](double x) { return jac(tau, Jet(x)).value(); },
                        [jac, tau](const Jet& x) { return jac(tau, x); });
    SmoothFunction inv([map, tau](double y) { return map(-tau, Jet(y)).value(); },
                       [map, tau](const Jet& y) { return map(-tau, y); });
    auto pull = [map, jac, tau](const Jet& y) {
      return std::pair<Jet, Jet>{map(-tau, y), jac(-tau, y)};
    };
    return Diffeomorphism(label, fwd, dfwd, inv, pull);
  }
  auto fwd_map = std::make_shared<const FlowMap>(coefficient_, tau, opts);
  auto bwd_map = std::make_shared<const FlowMap>(coefficient_, -tau, opts);
  SmoothFunction fwd([fwd_map](double x) { return (*fwd_map)(x); },
                     [fwd_map](const Jet& x) { return (*fwd_map)(x); });
  SmoothFunction dfwd([fwd_map](double x) { return fwd_map->with_jacobian(Jet(x)).second.value(); },
                      [fwd_map](const Jet& x) { return fwd_map->with_jacobian(x).second; });
  SmoothFunction inv([bwd_map](double y) { return (*bwd_map)(y); },
                     [bwd_map](const Jet& y) { return (*bwd_map)(y); });
  auto pull = [bwd_map](const Jet& y) { return bwd_map->with_jacobian(y); };
  return Diffeomorphism(label, fwd, dfwd, inv, pull);
}

double VectorField::flow_point(double x, double tau, FlowOptions opts) const {
  if (closed_flow_) return closed_flow_->map(tau, Jet(x)).value();
  return ode_flow(x, coefficient_, tau, opts);
}

VectorField VectorField::without_closed_flow() const { return VectorField(name_, coefficient_); }

VectorField operator+(const VectorField& a, const VectorField& b) {
  return VectorField(a.name_ + "+" + b.name_, a.coefficient_ + b.coefficient_);
}

}  // namespace colombeau
