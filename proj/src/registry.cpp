#include "colombeau/registry.hpp"

#include <cmath>
#include <sstream>

#include "colombeau/kernels/jet.hpp"

namespace colombeau {
namespace {

template <class T>
T half_exp(const T& t) {
  using std::exp;
  if (primal(t) <= 0.0) return T(0.0);
  return exp(-1.0 / t);
}

/// 0 for t <= 0, 1 for t >= 1, smooth in between.
template <class T>
T smooth_step(const T& t) {
  if (primal(t) <= 0.0) return T(0.0);
  if (primal(t) >= 1.0) return T(1.0);
  const T a = half_exp(t);
  const T b = half_exp(1.0 - t);
  return a / (a + b);
}

template <class T>
T window(const T& x) {
  return smooth_step(3.0 - x) * smooth_step(3.0 + x);
}

std::vector<NamedFunction> build_functions() {
  auto gen = [](auto f) { return SmoothFunction::generic(f); };
  std::vector<NamedFunction> v;
  v.push_back({"one", "1", SmoothFunction::constant(1.0)});
  v.push_back({"x", "x", SmoothFunction::identity()});
  v.push_back({"x2", "x^2", gen([](const auto& x) { return x * x; })});
  v.push_back({"x3", "x^3", gen([](const auto& x) { return x * x * x; })});
  v.push_back({"x4", "x^4", gen([](const auto& x) { return x * x * x * x; })});
  v.push_back({"x5", "x^5", gen([](const auto& x) { return x * x * x * x * x; })});
  v.push_back({"sin", "sin x", gen([](const auto& x) {
                 using std::sin;
                 return sin(x);
               })});
  v.push_back({"cos", "cos x", gen([](const auto& x) {
                 using std::cos;
                 return cos(x);
               })});
  v.push_back({"exp", "exp x", gen([](const auto& x) {
                 using std::exp;
                 return exp(x);
               })});
  v.push_back({"window", "smooth cutoff, 1 on [-2,2], 0 outside (-3,3)",
               gen([](const auto& x) { return window(x); })});
  v.push_back({"exp_window", "exp x times window", gen([](const auto& x) {
                 using std::exp;
                 return exp(x) * window(x);
               })});
  v.push_back({"x2_window", "x^2 times window",
               gen([](const auto& x) { return x * x * window(x); })});
  return v;
}

}  // namespace

SmoothFunction smooth_window() {
  return SmoothFunction::generic([](const auto& x) { return window(x); });
}

const std::vector<NamedFunction>& named_functions() {
  static const std::vector<NamedFunction> v = build_functions();
  return v;
}

std::optional<SmoothFunction> find_function(const std::string& name) {
  for (const auto& f : named_functions()) {
    if (f.name == name) return f.f;
  }
  return std::nullopt;
}

const std::vector<BuiltinEntry>& builtin_fields() {
  static const std::vector<BuiltinEntry> v{
      {"ddx", "X(x) = 1, translation flow"},
      {"euler", "X(x) = x, flow e^tau x"},
      {"sinefield(b)", "X(x) = 1 + b sin x, |b| < 1, RK4 flow"},
  };
  return v;
}

const std::vector<BuiltinEntry>& builtin_diffeos() {
  static const std::vector<BuiltinEntry> v{
      {"identity", "x"},
      {"shift(a)", "x + a"},
      {"scale(k)", "k x, k > 0"},
      {"cubic", "x^3 + x, Newton inverse"},
      {"sine_perturb(b)", "x + b sin x, |b| < 1, Newton inverse"},
  };
  return v;
}

const std::vector<BuiltinEntry>& builtin_demos() {
  static const std::vector<BuiltinEntry> v{
      {"embedding-lie", "criterion 1: Lie derivative commutes with iota and sigma"},
      {"dual-route", "criterion 2: flow route vs chain-rule route"},
      {"equivariance", "criterion 3: diffeomorphism equivariance of iota and sigma"},
      {"linearity-unit", "criterion 4: linearity of iota, unit sigma(1)"},
      {"product-consistency", "criterion 5: sigma(f)sigma(g) = sigma(fg), iota products in the quotient"},
      {"smooth-negligible", "criterion 6: (iota - sigma)(f) is negligible"},
      {"grading-signatures", "criterion 7: slopes of iota(delta), iota(delta)^2, iota(H)^2 - iota(H)"},
      {"heaviside-power", "criterion 8: iota(H)^n associated with iota(H), n = 2, 3"},
      {"h-times-delta", "criterion 8: iota(H) iota(delta) associated with iota(delta)/2"},
      {"delta-squared", "criterion 8: iota(delta)^2 has no weak limit"},
      {"distributional-derivative", "criterion 9: <u', phi> by the translation flow"},
      {"kernel-invariants", "criterion 10: flows, slope fits, test objects"},
      {"cli-contract", "criterion 11: exit statuses and report determinism"},
  };
  return v;
}

std::string list_builtins() {
  std::ostringstream os;
  os << "functions:\n";
  for (const auto& f : named_functions()) os << "  " << f.name << "  " << f.description << "\n";
  os << "fields:\n";
  for (const auto& f : builtin_fields()) os << "  " << f.name << "  " << f.description << "\n";
  os << "diffeos:\n";
  for (const auto& d : builtin_diffeos()) os << "  " << d.name << "  " << d.description << "\n";
  os << "demos:\n";
  for (const auto& d : builtin_demos()) os << "  " << d.name << "  " << d.description << "\n";
  return os.str();
}

}  // namespace colombeau
