#pragma once

#include <functional>
#include <optional>
#include <string>

#include "colombeau/diffeomorphism.hpp"
#include "colombeau/kernels/ode.hpp"
#include "colombeau/kernels/smooth_function.hpp"

namespace colombeau {

/// X = X(x) d/dx on the real line.
class VectorField {
 public:
  /// Exact flow (tau, x) -> Fl_tau(x) and its x-derivative, both on jets.
  struct ClosedFlow {
    std::function<Jet(double, const Jet&)> map;
    std::function<Jet(double, const Jet&)> jacobian;
  };

  VectorField(std::string name, SmoothFunction coefficient,
              std::optional<ClosedFlow> closed_flow = std::nullopt);

  static VectorField translation();           // ddx
  static VectorField euler();                 // euler: x d/dx
  static VectorField sine_field(double b);    // sinefield(b): (1 + b sin x) d/dx

  const std::string& name() const { return name_; }
  double operator()(double x) const { return coefficient_(x); }
  const SmoothFunction& coefficient() const { return coefficient_; }
  bool has_closed_flow() const { return closed_flow_.has_value(); }

  /// Fl_tau as a diffeomorphism, closed form when registered, otherwise a
  /// frozen-step RK4 FlowMap whose inverse is the map at -tau.
  Diffeomorphism flow(double tau, FlowOptions opts = {}) const;
  /// Fl_tau(x): the closed form when registered, otherwise ode_flow.
  double flow_point(double x, double tau, FlowOptions opts = {}) const;

  /// Same field with any closed-form flow dropped (forces the RK4 route).
  VectorField without_closed_flow() const;

  friend VectorField operator+(const VectorField& a, const VectorField& b);

 private:
  std::string name_;
  SmoothFunction coefficient_;
  std::optional<ClosedFlow> closed_flow_;
};

}  // namespace colombeau
