#include "colombeau/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "colombeau/kernels/format.hpp"
#include "colombeau/kernels/quadrature.hpp"

namespace colombeau {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double pair_atom(const Atom& atom, const Form& omega, double tol) {
  const Interval s = omega.support();
  return std::visit(
      Overloaded{
          [&](const Regular& r) {
            double lo = s.lo(), hi = s.hi();
            if (r.support) {
              lo = std::max(lo, r.support->lo());
              hi = std::min(hi, r.support->hi());
            }
            if (!(lo < hi)) return 0.0;
            const SmoothFunction& f = r.f;
            const SmoothFunction& g = omega.density();
            return integrate([&](double x) { return f(x) * g(x); }, Interval(lo, hi), tol);
          },
          [&](const DeltaAt& d) { return omega(d.p); },
          [&](const DeltaDerivative& d) {
            const double sign = (d.order % 2 == 0) ? 1.0 : -1.0;
            return sign * omega.derivative(d.p, d.order);
          },
          [&](const Heaviside& h) {
            if (h.c >= s.hi()) return 0.0;
            const double lo = std::max(h.c, s.lo());
            return integrate(omega.density(), Interval(lo, s.hi()), tol);
          },
          [&](const Functional& f) { return f.pair(omega, tol); },
      },
      atom);
}

std::string atom_string(const Atom& atom) {
  return std::visit(
      Overloaded{
          [](const Regular& r) { return "regular(" + r.name + ")"; },
          [](const DeltaAt& d) { return "delta(" + format_number(d.p) + ")"; },
          [](const DeltaDerivative& d) {
            return "ddelta(" + format_number(d.p) + "," + std::to_string(d.order) + ")";
          },
          [](const Heaviside& h) { return "heaviside(" + format_number(h.c) + ")"; },
          [](const Functional& f) { return f.label; },
      },
      atom);
}

}  // namespace

Distribution Distribution::delta(double p) { return Distribution({{1.0, DeltaAt{p}}}); }

Distribution Distribution::delta_derivative(double p, int order) {
  if (order < 1) throw std::invalid_argument("ddelta order must be >= 1");
  if (order > kJetOrder - 2) {
    throw std::invalid_argument("ddelta order above " + std::to_string(kJetOrder - 2) +
                                " is not supported");
  }
  return Distribution({{1.0, DeltaDerivative{p, order}}});
}

Distribution Distribution::heaviside(double c) { return Distribution({{1.0, Heaviside{c}}}); }

Distribution Distribution::regular(std::string name, SmoothFunction f,
                                   std::optional<Interval> support) {
  return Distribution({{1.0, Regular{std::move(name), std::move(f), support}}});
}

Distribution Distribution::functional(std::string label,
                                      std::function<double(const Form&, double)> pair,
                                      std::vector<double> singular_points) {
  return Distribution(
      {{1.0, Functional{std::move(label), std::move(pair), std::move(singular_points)}}});
}

std::vector<double> Distribution::singular_points() const {
  std::vector<double> pts;
  for (const auto& t : terms_) {
    std::visit(Overloaded{
                   [](const Regular&) {},
                   [&](const DeltaAt& d) { pts.push_back(d.p); },
                   [&](const DeltaDerivative& d) { pts.push_back(d.p); },
                   [&](const Heaviside& h) { pts.push_back(h.c); },
                   [&](const Functional& f) {
                     pts.insert(pts.end(), f.singular_points.begin(), f.singular_points.end());
                   },
               },
               t.atom);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::string Distribution::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const double c = terms_[i].coefficient;
    if (i > 0) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const double a = std::fabs(c);
    if (a != 1.0) os << format_number(a) << "*";
    os << atom_string(terms_[i].atom);
  }
  return os.str();
}

Distribution operator+(const Distribution& a, const Distribution& b) {
  std::vector<Term> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return Distribution(std::move(t));
}

Distribution operator-(const Distribution& a, const Distribution& b) { return a + (-1.0) * b; }

Distribution operator*(double c, const Distribution& a) {
  std::vector<Term> t = a.terms_;
  for (auto& term : t) term.coefficient *= c;
  return Distribution(std::move(t));
}

double pairing(const Distribution& u, const Form& omega, double tol) {
  double total = 0.0;
  for (const auto& t : u.terms()) total += t.coefficient * pair_atom(t.atom, omega, tol);
  return total;
}

}  // namespace colombeau
