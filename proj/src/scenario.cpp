#include "colombeau/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "colombeau/diffeo.hpp"
#include "colombeau/expression.hpp"
#include "colombeau/grading.hpp"
#include "colombeau/kernels/errors.hpp"
#include "colombeau/kernels/parallel.hpp"
#include "colombeau/lie.hpp"
#include "colombeau/registry.hpp"

namespace colombeau {
namespace {

using Json = nlohmann::ordered_json;
constexpr std::size_t npos = std::string_view::npos;

/// Scenario rejected before running; offset is a byte position in the file.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& message, std::size_t offset)
      : std::runtime_error(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Byte offsets of keys and string values in the raw scenario text.
class SourceMap {
 public:
  explicit SourceMap(std::string_view text) : text_(text) {}

  std::size_t key(std::string_view name) const {
    const std::string quoted = "\"" + std::string(name) + "\"";
    for (std::size_t at = text_.find(quoted); at != npos; at = text_.find(quoted, at + 1)) {
      std::size_t k = at + quoted.size();
      while (k < text_.size() && std::isspace(static_cast<unsigned char>(text_[k]))) ++k;
      if (k < text_.size() && text_[k] == ':') return at;
    }
    return npos;
  }

  /// Offset of the first character inside the string value of `name`.
  std::size_t string_value(std::string_view name) const {
    const std::size_t k = key(name);
    if (k == npos) return npos;
    const std::size_t colon = text_.find(':', k + name.size() + 2);
    const std::size_t quote = text_.find('"', colon);
    return quote == npos ? npos : quote + 1;
  }

  std::pair<int, int> line_column(std::size_t offset) const {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return {line, column};
  }

  /// Offset in the file of a (1-based) position inside the string value of `name`.
  std::size_t inside(std::string_view name, int line, int column) const {
    std::size_t at = string_value(name);
    if (at == npos) return npos;
    // JSON strings hold no raw newlines; later lines only arise from "\n" escapes.
    for (int l = 1; l < line; ++l) {
      const std::size_t nl = text_.find("\\n", at);
      if (nl == npos) return at;
      at = nl + 2;
    }
    return at + static_cast<std::size_t>(column - 1);
  }

 private:
  std::string_view text_;
};

/// Typed access to one JSON object with position-aware errors.
class Reader {
 public:
  Reader(const Json& obj, std::string path, const SourceMap& src)
      : obj_(obj), path_(std::move(path)), src_(src) {}

  bool has(const char* key) const { return obj_.contains(key); }

  [[noreturn]] void fail(const char* key, const std::string& message) const {
    throw ScenarioError(path_ + "." + key + ": " + message, src_.key(key));
  }

  const Json& at(const char* key) const { return obj_.at(key); }

  std::string string(const char* key, std::optional<std::string> def = std::nullopt) const {
    if (!has(key)) {
      if (def) return *def;
      throw ScenarioError(path_ + ": missing required field '" + key + "'", object_offset());
    }
    if (!obj_.at(key).is_string()) fail(key, "expected a string");
    return obj_.at(key).get<std::string>();
  }

  double number(const char* key, double def) const {
    if (!has(key)) return def;
    if (!obj_.at(key).is_number()) fail(key, "expected a number");
    return obj_.at(key).get<double>();
  }

  int integer(const char* key, int def) const {
    if (!has(key)) return def;
    if (!obj_.at(key).is_number_integer()) fail(key, "expected an integer");
    return obj_.at(key).get<int>();
  }

  bool boolean(const char* key) const {
    if (!obj_.at(key).is_boolean()) fail(key, "expected true or false");
    return obj_.at(key).get<bool>();
  }

  std::vector<int> integers(const char* key, std::vector<int> def) const {
    if (!has(key)) return def;
    const Json& v = obj_.at(key);
    if (v.is_number_integer()) return {v.get<int>()};
    if (!v.is_array()) fail(key, "expected an integer or a list of integers");
    std::vector<int> out;
    for (const auto& e : v) {
      if (!e.is_number_integer()) fail(key, "expected a list of integers");
      out.push_back(e.get<int>());
    }
    return out;
  }

  Reader object(const char* key) const {
    if (!obj_.at(key).is_object()) fail(key, "expected an object");
    return Reader(obj_.at(key), path_ + "." + key, src_);
  }

  void allow(std::initializer_list<const char*> keys) const {
    const std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& [k, v] : obj_.items()) {
      if (!ok.count(k)) fail(k.c_str(), "unknown field");
    }
  }

  /// Parses the string value of `key` with `parse`, mapping expression
  /// positions to positions in the scenario file.
  template <class T>
  T expression(const char* key, T (*parse)(std::string_view)) const {
    const std::string text = string(key);
    try {
      return parse(text);
    } catch (const ParseError& e) {
      throw ScenarioError(path_ + "." + key + ": " + e.what(),
                          src_.inside(key, e.line(), e.column()));
    } catch (const std::invalid_argument& e) {
      fail(key, e.what());
    }
  }

  const std::string& path() const { return path_; }

 private:
  std::size_t object_offset() const {
    const auto dot = path_.rfind('.');
    return dot == std::string::npos ? 0 : src_.key(path_.substr(dot + 1));
  }

  const Json& obj_;
  std::string path_;
  const SourceMap& src_;
};

struct Record {
  std::optional<int> criterion;
  CheckResult check;
};

struct Plan {
  Json objects = Json::object();
  std::function<std::vector<Record>()> run;
};

Json grid_echo(const EpsilonGrid& g) {
  Json j = Json::object();
  j["eps_max"] = g.values().front();
  j["eps_min"] = g.values().back();
  j["ratio"] = g.ratio();
  j["size"] = g.size();
  return j;
}

EpsilonGrid read_grid(const Reader& objects, const RunOverrides& ov) {
  double eps_max = 0.25, eps_min = std::ldexp(1.0, -14), ratio = 2.0;
  if (objects.has("grid")) {
    const Reader g = objects.object("grid");
    g.allow({"eps_max", "eps_min", "ratio"});
    eps_max = g.number("eps_max", eps_max);
    eps_min = g.number("eps_min", eps_min);
    ratio = g.number("ratio", ratio);
  }
  if (ov.eps_max) eps_max = *ov.eps_max;
  if (ov.eps_min) eps_min = *ov.eps_min;
  try {
    return EpsilonGrid::geometric(eps_max, eps_min, ratio);
  } catch (const std::invalid_argument& e) {
    if (objects.has("grid")) objects.fail("grid", e.what());
    throw ScenarioError(std::string("epsilon grid: ") + e.what(), npos);
  }
}

Interval read_compact(const Reader& objects) {
  if (!objects.has("compact")) return {-1.0, 1.0};
  const Json& v = objects.at("compact");
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    objects.fail("compact", "expected [lo, hi]");
  }
  try {
    return Interval(v[0].get<double>(), v[1].get<double>());
  } catch (const std::invalid_argument& e) {
    objects.fail("compact", e.what());
  }
}

MomentMollifier read_mollifier(const Reader& objects, int q) {
  try {
    return make_moment_mollifier(q);
  } catch (const std::invalid_argument& e) {
    objects.fail("q", e.what());
  }
}

int read_threads(const Reader& objects, const RunOverrides& ov) {
  if (ov.threads) {
    if (*ov.threads < 1) throw ScenarioError("--threads must be >= 1", npos);
    return *ov.threads;
  }
  const int t = objects.integer("threads", 1);
  if (t < 1) objects.fail("threads", "must be >= 1");
  return t;
}

void measure_series(CheckResult& c, const GradingReport& rep) {
  for (const auto& s : rep.series) {
    const std::string k = "d" + std::to_string(s.depth) + "_q" + std::to_string(s.q);
    c.measurements.push_back({k + "_slope", s.fit.machine_zero() ? NAN : s.fit.slope});
    c.measurements.push_back({k + "_r2", s.fit.r2});
    c.measurements.push_back({k + "_points_used", static_cast<double>(s.fit.points_used)});
    c.measurements.push_back({k + "_flat", s.flat ? 1.0 : 0.0});
    for (std::size_t i = 0; i < s.sup_values.size(); ++i) {
      c.measurements.push_back({k + "_sup_" + std::to_string(i), s.sup_values[i]});
    }
  }
}

CheckResult fail_unless(CheckResult c, bool ok, const std::string& why) {
  if (!ok) {
    c.passed = false;
    c.detail += (c.detail.empty() ? "" : "; ") + why;
  }
  return c;
}

Plan plan_grade(const Reader& o, const RunOverrides& ov) {
  o.allow({"representative", "mode", "q", "depth", "grid", "compact", "threads", "expect"});
  Plan plan;
  const std::string expr = o.string("representative");
  const Representative r = o.expression("representative", &parse_representative);
  const std::string mode = o.string("mode", std::string("moderate"));
  if (mode != "moderate" && mode != "negligible") o.fail("mode", "expected moderate or negligible");
  const bool moderate = mode == "moderate";
  std::vector<int> qs = o.integers("q", {moderate ? 0 : 2});
  if (ov.q) qs = {*ov.q};
  if (qs.empty() || (moderate && qs.size() != 1)) o.fail("q", "moderate mode takes one mollifier order");
  const int depth = ov.depth ? *ov.depth : o.integer("depth", 0);
  if (depth < 0 || depth > 3) {
    if (!ov.depth) o.fail("depth", "must be in 0..3");
    throw ScenarioError("--depth must be in 0..3", npos);
  }
  const EpsilonGrid grid = read_grid(o, ov);
  GradingOptions g;
  g.compact = read_compact(o);
  g.threads = read_threads(o, ov);
  std::optional<MomentMollifier> phi;
  if (moderate) phi = read_mollifier(o, qs[0]);
  if (!moderate && !std::is_sorted(qs.begin(), qs.end())) o.fail("q", "orders must be ascending");

  std::optional<double> slope, slope_tol;
  std::optional<std::string> label;
  std::optional<int> order;
  Json expect = Json::object();
  if (o.has("expect")) {
    const Reader e = o.object("expect");
    e.allow({"slope", "slope_tol", "classification", "order"});
    if (e.has("slope")) expect["slope"] = *(slope = e.number("slope", 0.0));
    if (slope) expect["slope_tol"] = *(slope_tol = ov.tol ? *ov.tol : e.number("slope_tol", 0.1));
    if (e.has("classification")) {
      expect["classification"] = *(label = e.string("classification"));
      if (*label != "moderate" && *label != "negligible" && *label != "neither" &&
          *label != "machine_zero") {
        e.fail("classification", "expected moderate, negligible, neither or machine_zero");
      }
    }
    if (e.has("order")) expect["order"] = *(order = e.integer("order", 0));
  }

  plan.objects["representative"] = expr;
  plan.objects["mode"] = mode;
  plan.objects["q"] = moderate ? Json(qs[0]) : Json(qs);
  plan.objects["depth"] = depth;
  plan.objects["grid"] = grid_echo(grid);
  plan.objects["compact"] = {g.compact.lo(), g.compact.hi()};
  plan.objects["threads"] = g.threads;
  plan.objects["probes"] = g.probes;
  plan.objects["convention"] = kGradingConvention;
  plan.objects["expect"] = expect;
  plan.run = [=]() {
    const GradingReport rep = moderate ? grade_moderate(r, *phi, grid, depth, g)
                                       : grade_negligible(r, grid, depth, qs, g);
    CheckResult c{"grade " + expr, true, {}, "classification " + rep.classification_label()};
    if (!rep.diagnostic.empty()) c.detail += " (" + rep.diagnostic + ")";
    c.measurements.push_back({"fitted_slope", rep.fitted_slope()});
    c.measurements.push_back({"r2", rep.r2()});
    c.measurements.push_back({"order", static_cast<double>(rep.order)});
    measure_series(c, rep);
    if (slope) {
      c = fail_unless(c, std::fabs(rep.fitted_slope() - *slope) <= *slope_tol,
                      "slope outside expected range");
    }
    if (label) c = fail_unless(c, to_string(rep.classification) == *label, "classification");
    if (order) c = fail_unless(c, rep.order == *order, "order");
    return std::vector<Record>{{std::nullopt, c}};
  };
  return plan;
}

Plan plan_associate(const Reader& o, const RunOverrides& ov) {
  o.allow({"a", "b", "witness", "q", "grid", "quad_tol", "rel_tol", "threads", "expect"});
  Plan plan;
  const std::string a_expr = o.string("a");
  const Representative a = o.expression("a", &parse_representative);
  std::optional<Representative> b;
  if (o.has("b")) b = o.expression("b", &parse_representative);
  double center = 0.1, radius = 1.0;
  if (o.has("witness")) {
    const Reader w = o.object("witness");
    w.allow({"center", "radius"});
    center = w.number("center", center);
    radius = w.number("radius", radius);
  }
  std::optional<TestObject> psi;
  try {
    psi = make_bump(center, radius);
  } catch (const std::invalid_argument& e) {
    o.fail("witness", e.what());
  }
  const int q = ov.q ? *ov.q : o.integer("q", 0);
  const MomentMollifier phi = read_mollifier(o, q);
  const EpsilonGrid grid = read_grid(o, ov);
  AssociationOptions ao;
  ao.quad_tol = o.number("quad_tol", ao.quad_tol);
  ao.rel_tol = o.number("rel_tol", ao.rel_tol);
  ao.threads = read_threads(o, ov);

  std::optional<bool> associated, converged;
  std::optional<double> limit, limit_tol, min_decay;
  Json expect = Json::object();
  if (o.has("expect")) {
    const Reader e = o.object("expect");
    e.allow({"associated", "converged", "limit", "limit_tol", "min_decay_slope"});
    if (e.has("associated")) {
      if (!b) e.fail("associated", "needs objects.b");
      expect["associated"] = *(associated = e.boolean("associated"));
    }
    if (e.has("converged")) expect["converged"] = *(converged = e.boolean("converged"));
    if (e.has("limit")) expect["limit"] = *(limit = e.number("limit", 0.0));
    if (limit) expect["limit_tol"] = *(limit_tol = ov.tol ? *ov.tol : e.number("limit_tol", 1e-3));
    if (e.has("min_decay_slope")) {
      expect["min_decay_slope"] = *(min_decay = e.number("min_decay_slope", 0.0));
    }
  }

  plan.objects["a"] = a_expr;
  if (b) plan.objects["b"] = o.string("b");
  plan.objects["witness"] = {{"center", center}, {"radius", radius}};
  plan.objects["q"] = q;
  plan.objects["grid"] = grid_echo(grid);
  plan.objects["quad_tol"] = ao.quad_tol;
  plan.objects["rel_tol"] = ao.rel_tol;
  plan.objects["threads"] = ao.threads;
  plan.objects["expect"] = expect;
  const std::string name = b ? "associate " + a_expr + " with " + o.string("b")
                             : "weak limit of " + a_expr;
  plan.run = [=]() {
    std::optional<AssociationReport> rep;
    double value = 0.0;
    if (b) {
      rep = associate(a, *b, *psi, phi, grid, ao);
      value = rep->extrapolated_limit;
    } else {
      WeakLimit w = weak_limit(a, *psi, phi, grid, ao);
      value = w.value;
      rep = std::move(w.report);
    }
    CheckResult c{name, true, {}, ""};
    c.measurements.push_back({"limit", value});
    c.measurements.push_back({"extrapolated_limit", rep->extrapolated_limit});
    c.measurements.push_back({"truncated_limit", rep->truncated_limit});
    c.measurements.push_back({"tolerance", rep->tolerance});
    c.measurements.push_back({"converged", rep->converged ? 1.0 : 0.0});
    if (b) c.measurements.push_back({"associated", rep->associated ? 1.0 : 0.0});
    c.measurements.push_back({"decay_slope", rep->decay.machine_zero() ? NAN : rep->decay.slope});
    c.measurements.push_back({"decay_r2", rep->decay.r2});
    for (std::size_t i = 0; i < rep->integrals.size(); ++i) {
      c.measurements.push_back({"integral_" + std::to_string(i), rep->integrals[i]});
    }
    if (associated) c = fail_unless(c, rep->associated == *associated, "association verdict");
    if (converged) c = fail_unless(c, rep->converged == *converged, "convergence verdict");
    if (limit) c = fail_unless(c, std::fabs(value - *limit) <= *limit_tol, "limit outside expected range");
    if (min_decay) {
      c = fail_unless(c, !rep->decay.machine_zero() && rep->decay.slope >= *min_decay,
                      "decay slope below minimum");
    }
    return std::vector<Record>{{std::nullopt, c}};
  };
  return plan;
}

std::vector<Probe> read_probes(const Reader& o, Json& echo) {
  const int n = o.integer("probes", 20);
  if (n < 1 || n > 10000) o.fail("probes", "expected 1..10000");
  const int seed = o.integer("seed", 1);
  echo["probes"] = n;
  echo["seed"] = seed;
  return probe_pairs(n, static_cast<std::uint64_t>(seed));
}

Plan plan_lie_test(const Reader& o, const RunOverrides& ov) {
  o.allow({"field", "distribution", "representative", "probes", "seed", "tol", "threads"});
  Plan plan;
  const VectorField x = o.expression("field", &parse_field);
  plan.objects["field"] = o.string("field");
  const bool dist = o.has("distribution");
  if (dist == o.has("representative")) {
    throw ScenarioError(o.path() + ": give exactly one of 'distribution' or 'representative'",
                        npos);
  }
  const double tol = ov.tol ? *ov.tol : o.number("tol", dist ? 1e-6 : 1e-5);
  const std::vector<Probe> probes = read_probes(o, plan.objects);
  const int threads = read_threads(o, ov);
  plan.objects["tol"] = tol;
  plan.objects["threads"] = threads;
  if (dist) {
    const Distribution u = o.expression("distribution", &parse_distribution);
    const auto closed = lie_distribution_closed(x, u);
    plan.objects["distribution"] = o.string("distribution");
    plan.objects["reference"] = closed ? "closed form" : "adjoint pairing";
    plan.run = [=]() {
      const Representative r = embed_distribution(u);
      std::vector<std::array<double, 2>> err(probes.size());
      parallel_for(probes.size(), threads, [&](std::size_t i) {
        const auto& [omega, p] = probes[i];
        const double ref = closed ? pairing(*closed, omega)
                                  : -pairing(u, lie_derivative_form(x, omega));
        err[i] = {std::fabs(lie_rep_direct(x, r, omega, p) - ref),
                  std::fabs(lie_rep_formula(x, r, omega, p) - ref)};
      });
      double direct = 0.0, formula = 0.0;
      for (const auto& e : err) {
        direct = std::max(direct, e[0]);
        formula = std::max(formula, e[1]);
      }
      CheckResult c{"lie derivative of iota(" + u.to_string() + ") along " + x.name(), true,
                    {{"max_err_direct", direct}, {"max_err_formula", formula}, {"tolerance", tol}},
                    ""};
      c = fail_unless(c, direct <= tol, "direct route");
      c = fail_unless(c, formula <= tol, "formula route");
      return std::vector<Record>{{std::nullopt, c}};
    };
  } else {
    const Representative r = o.expression("representative", &parse_representative);
    plan.objects["representative"] = o.string("representative");
    plan.run = [=]() {
      std::vector<double> rel(probes.size());
      parallel_for(probes.size(), threads, [&](std::size_t i) {
        const auto& [omega, p] = probes[i];
        const double d = lie_rep_direct(x, r, omega, p);
        const double f = lie_rep_formula(x, r, omega, p, {true});
        rel[i] = std::fabs(d - f) / std::max(std::fabs(f), 1e-5);
      });
      const double worst = *std::max_element(rel.begin(), rel.end());
      CheckResult c{"dual-route lie derivative of " + r.label() + " along " + x.name(), true,
                    {{"max_rel_err", worst}, {"tolerance", tol}},
                    ""};
      return std::vector<Record>{{std::nullopt, fail_unless(c, worst <= tol, "routes disagree")}};
    };
  }
  return plan;
}

Plan plan_diffeo_test(const Reader& o, const RunOverrides& ov) {
  o.allow({"diffeo", "distribution", "probes", "seed", "tol"});
  Plan plan;
  const Diffeomorphism mu = o.expression("diffeo", &parse_diffeo);
  const Distribution u = o.expression("distribution", &parse_distribution);
  const double tol = ov.tol ? *ov.tol : o.number("tol", 1e-8);
  plan.objects["diffeo"] = o.string("diffeo");
  plan.objects["distribution"] = o.string("distribution");
  const std::vector<Probe> probes = read_probes(o, plan.objects);
  plan.objects["tol"] = tol;
  plan.objects["reference"] =
      pullback_distribution_closed(mu, u) ? "closed form" : "adjoint pairing";
  plan.run = [=]() {
    const double d = check_equivariance(mu, u, probes);
    CheckResult c{"equivariance of iota(" + u.to_string() + ") under " + mu.name(), true,
                  {{"max_discrepancy", d}, {"tolerance", tol}},
                  ""};
    return std::vector<Record>{{std::nullopt, fail_unless(c, d <= tol, "equivariance")}};
  };
  return plan;
}

int demo_criterion(const std::string& demo) {
  static const std::vector<std::pair<std::string, int>> table{
      {"embedding-lie", 1},      {"dual-route", 2},
      {"equivariance", 3},       {"linearity-unit", 4},
      {"product-consistency", 5}, {"smooth-negligible", 6},
      {"grading-signatures", 7}, {"heaviside-power", 8},
      {"h-times-delta", 8},      {"delta-squared", 8},
      {"distributional-derivative", 9}, {"kernel-invariants", 10},
      {"cli-contract", 11},
  };
  for (const auto& [name, id] : table) {
    if (name == demo) return id;
  }
  return 0;
}

Plan plan_demo(const Reader& o, const RunOverrides& ov) {
  o.allow({"demo", "threads"});
  Plan plan;
  const std::string demo = o.string("demo");
  const int id = demo_criterion(demo);
  if (id == 0) o.fail("demo", "unknown demo '" + demo + "'");
  SuiteOptions opts;
  opts.threads = read_threads(o, ov);
  plan.objects["demo"] = demo;
  plan.objects["criterion"] = id;
  plan.objects["threads"] = opts.threads;
  plan.run = [=]() {
    std::vector<Record> out;
    const auto checks = demo == "cli-contract" ? check_cli_contract(opts) : run_demo_checks(demo, opts);
    for (const auto& c : checks) out.push_back({id, c});
    return out;
  };
  return plan;
}

Plan plan_verify(const Reader& o, const RunOverrides& ov) {
  o.allow({"criteria", "threads"});
  Plan plan;
  std::vector<int> ids = o.integers("criteria", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  for (int id : ids) {
    if (id < 1 || id > 11) o.fail("criteria", "criterion ids are 1..11");
  }
  SuiteOptions opts;
  opts.threads = read_threads(o, ov);
  plan.objects["criteria"] = ids;
  plan.objects["threads"] = opts.threads;
  plan.run = [=]() {
    std::vector<Record> out;
    for (int id : ids) {
      const auto checks = id == 11 ? check_cli_contract(opts) : run_criterion(id, opts).checks;
      for (const auto& c : checks) out.push_back({id, c});
    }
    return out;
  };
  return plan;
}

/// Start of the token that ends just before the 1-based byte position the
/// JSON parser reports.
std::size_t token_start(std::string_view text, std::size_t byte) {
  if (byte == 0 || byte > text.size()) return std::min(byte, text.size());
  std::size_t last = byte - 1;
  while (last > 0 && std::isspace(static_cast<unsigned char>(text[last]))) --last;
  if (text[last] == '"' && last > 0) {
    std::size_t i = last;
    while (i > 0) {
      --i;
      if (text[i] == '"' && (i == 0 || text[i - 1] != '\\')) return i;
    }
    return last;
  }
  auto word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+';
  };
  if (!word(text[last])) return last;
  while (last > 0 && word(text[last - 1])) --last;
  return last;
}

Json overrides_echo(const RunOverrides& ov) {
  Json j = Json::object();
  if (ov.eps_min) j["eps_min"] = *ov.eps_min;
  if (ov.eps_max) j["eps_max"] = *ov.eps_max;
  if (ov.depth) j["depth"] = *ov.depth;
  if (ov.q) j["q"] = *ov.q;
  if (ov.tol) j["tol"] = *ov.tol;
  if (ov.threads) j["threads"] = *ov.threads;
  return j;
}

std::string record_line(Json j) {
  Json line = Json::object();
  line["schema"] = kReportSchema;
  for (auto& [k, v] : j.items()) line[k] = v;
  return line.dump() + "\n";
}

void finish(RunOutcome& out, int status, std::size_t checks, std::size_t failed) {
  out.status = status;
  out.report += record_line({{"record", "summary"},
                             {"status", status},
                             {"checks", checks},
                             {"failed", failed},
                             {"passed", status == kStatusPass}});
}

}  // namespace

RunOutcome run_scenario(std::string_view text, const RunOverrides& ov) {
  RunOutcome out;
  const SourceMap src(text);
  if (ov.out) out.output_path = *ov.out;
  Plan plan;
  std::string name, kind;
  try {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      std::string msg = e.what();
      const auto colon = msg.find(": ", msg.find("parse error"));
      if (colon != std::string::npos) msg = msg.substr(colon + 2);
      throw ScenarioError("invalid JSON: " + msg, token_start(text, e.byte));
    }
    if (!doc.is_object()) throw ScenarioError("scenario must be a JSON object", 0);
    const Reader top(doc, "scenario", src);
    top.allow({"name", "kind", "objects", "output"});
    name = top.string("name");
    kind = top.string("kind");
    if (!ov.out && top.has("output")) out.output_path = top.string("output");
    const Json empty = Json::object();
    const Reader objects = top.has("objects") ? top.object("objects") : Reader(empty, "objects", src);
    if (kind == "verify") {
      plan = plan_verify(objects, ov);
    } else if (kind == "grade") {
      plan = plan_grade(objects, ov);
    } else if (kind == "associate") {
      plan = plan_associate(objects, ov);
    } else if (kind == "lie-test") {
      plan = plan_lie_test(objects, ov);
    } else if (kind == "diffeo-test") {
      plan = plan_diffeo_test(objects, ov);
    } else if (kind == "demo") {
      plan = plan_demo(objects, ov);
    } else {
      top.fail("kind", "unknown kind '" + kind +
                           "' (expected verify, grade, associate, lie-test, diffeo-test or demo)");
    }
  } catch (const ScenarioError& e) {
    if (e.offset() == npos) {
      out.error = e.what();
    } else {
      const auto [line, column] = src.line_column(e.offset());
      out.error = std::to_string(line) + ":" + std::to_string(column) + ": " + e.what();
    }
    out.report += record_line({{"record", "error"}, {"status", kStatusParseError}, {"message", out.error}});
    out.summary = "parse error: " + out.error + "\n";
    finish(out, kStatusParseError, 0, 0);
    return out;
  }

  Json config{{"record", "config"}, {"name", name}, {"kind", kind}, {"objects", plan.objects},
              {"overrides", overrides_echo(ov)}};
  out.report += record_line(config);
  std::vector<Record> records;
  try {
    records = plan.run();
  } catch (const NumericalError& e) {
    out.error = std::string("numerical error: ") + e.what();
  } catch (const std::invalid_argument& e) {
    out.error = std::string("numerical error: invalid argument: ") + e.what();
  }
  if (!out.error.empty()) {
    out.report += record_line({{"record", "error"}, {"status", kStatusNumericalError}, {"message", out.error}});
    out.summary = out.error + "\n";
    finish(out, kStatusNumericalError, 0, 0);
    return out;
  }

  std::size_t failed = 0;
  std::ostringstream summary;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& [criterion, c] = records[i];
    Json m = Json::object();
    for (const auto& [k, v] : c.measurements) m[k] = v;
    Json rec{{"record", "check"}, {"index", i}};
    rec["criterion"] = criterion ? Json(*criterion) : Json(nullptr);
    rec["name"] = c.name;
    rec["passed"] = c.passed;
    rec["measurements"] = m;
    rec["detail"] = c.detail;
    out.report += record_line(rec);
    if (!c.passed) ++failed;
    summary << (c.passed ? "PASS " : "FAIL ");
    if (criterion) summary << "[" << *criterion << "] ";
    summary << c.name;
    if (!c.detail.empty()) summary << " -- " << c.detail;
    summary << "\n";
  }
  const int status = failed == 0 ? kStatusPass : kStatusCriterionFailure;
  summary << name << ": " << (records.size() - failed) << "/" << records.size() << " checks passed, status "
          << status << "\n";
  out.summary = summary.str();
  finish(out, status, records.size(), failed);
  return out;
}

int run_scenario_file(const std::string& path, const RunOverrides& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << path << ": cannot open scenario file\n";
    return kStatusParseError;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const RunOutcome out = run_scenario(buf.str(), overrides);
  if (out.status == kStatusParseError) {
    const bool positioned = !out.error.empty() && std::isdigit(static_cast<unsigned char>(out.error[0]));
    std::cerr << path << (positioned ? ":" : ": ") << out.error << "\n";
  }
  if (out.status == kStatusNumericalError) std::cerr << path << ": " << out.error << "\n";
  if (out.output_path.empty()) {
    std::cout << out.report;
    std::cerr << out.summary;
  } else {
    std::ofstream report(out.output_path, std::ios::binary);
    if (!report) {
      std::cerr << out.output_path << ": cannot write report\n";
      return kStatusNumericalError;
    }
    report << out.report;
    std::cout << out.summary;
  }
  return out.status;
}

namespace {

const char* const kContractGrade = R"json({
  "name": "contract-grade",
  "kind": "grade",
  "objects": {
    "representative": "mul(iota(delta(0)), iota(delta(0)))",
    "expect": {"slope": -2, "slope_tol": 0.1}
  }
})json";

const char* const kContractLie = R"json({
  "name": "contract-lie",
  "kind": "lie-test",
  "objects": {"field": "sinefield(0.3)", "distribution": "ddelta(-0.2, 1)", "probes": 5}
})json";

const char* const kContractDiffeo = R"json({
  "name": "contract-diffeo",
  "kind": "diffeo-test",
  "objects": {"diffeo": "cubic", "distribution": "heaviside(0.05) + 2*delta(0.1)", "probes": 5}
})json";

const char* const kContractAssociate = R"json({
  "name": "contract-associate",
  "kind": "associate",
  "objects": {
    "a": "mul(iota(heaviside(0)), iota(delta(0)))",
    "b": "scale(0.5, iota(delta(0)))",
    "expect": {"associated": true}
  }
})json";

const char* const kContractDemo = R"json({"name": "contract-demo", "kind": "demo", "objects": {"demo": "linearity-unit"}})json";

const char* const kContractCriterionFailure = R"json({
  "name": "contract-wrong-slope",
  "kind": "grade",
  "objects": {"representative": "iota(delta(0))", "expect": {"slope": -3}}
})json";

const char* const kContractNumerical = R"json({
  "name": "contract-overflow",
  "kind": "grade",
  "objects": {"representative": "pow(iota(delta(0)), 80)"}
})json";

const char* const kContractTruncated = R"json({
  "name": "contract-truncated",
  "kind": "grade",
  "objects": {
    "representative": "mul(iota(delta(0)), iota(delta(0)"
  }
})json";

const char* const kContractUnknownFunction = R"json({
  "name": "contract-unknown",
  "kind": "grade",
  "objects": {
    "representative": "add(sigma(sin), sigma(nosuch))"
  }
})json";

const char* const kContractBadJson = R"json({
  "name": "contract-json",
  "kind": "grade"
  "objects": {}
})json";

const char* const kContractBadKind = R"json({"name": "contract-kind", "kind": "plot"})json";

/// 1-based (line, column) of `needle` in `text` plus `shift` columns.
std::pair<int, int> position_of(std::string_view text, std::string_view needle, int shift) {
  const std::size_t at = text.find(needle);
  int line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < at; ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  return {line, static_cast<int>(at - line_start) + 1 + shift};
}

}  // namespace

std::vector<CheckResult> check_cli_contract(const SuiteOptions& opts) {
  RunOverrides ov;
  ov.threads = opts.threads;
  std::vector<CheckResult> out;

  CheckResult statuses{"exit statuses", true, {}, ""};
  CheckResult determinism{"report determinism", true, {}, ""};
  const std::vector<std::pair<const char*, int>> cases{
      {kContractGrade, kStatusPass},
      {kContractLie, kStatusPass},
      {kContractDiffeo, kStatusPass},
      {kContractAssociate, kStatusPass},
      {kContractDemo, kStatusPass},
      {kContractCriterionFailure, kStatusCriterionFailure},
      {kContractNumerical, kStatusNumericalError},
      {kContractTruncated, kStatusParseError},
      {kContractUnknownFunction, kStatusParseError},
      {kContractBadJson, kStatusParseError},
      {kContractBadKind, kStatusParseError},
  };
  int identical = 0;
  std::vector<RunOutcome> outcomes;
  for (const auto& [text, expected] : cases) {
    const RunOutcome first = run_scenario(text, ov);
    const RunOutcome second = run_scenario(text, ov);
    const Json doc = Json::parse(text, nullptr, false);
    const std::string name = doc.is_object() ? doc.value("name", std::string()) : "contract-json";
    statuses.measurements.push_back({name + "_status", static_cast<double>(first.status)});
    statuses = fail_unless(statuses, first.status == expected,
                           name + " exited " + std::to_string(first.status) + ", expected " +
                               std::to_string(expected));
    if (first.report == second.report && first.summary == second.summary) {
      ++identical;
    } else {
      determinism = fail_unless(determinism, false, name + " report differs between runs");
    }
    outcomes.push_back(first);
  }
  determinism.measurements.push_back({"scenarios", static_cast<double>(cases.size())});
  determinism.measurements.push_back({"identical_reports", static_cast<double>(identical)});
  const std::string listing = list_builtins();
  determinism = fail_unless(determinism, listing == list_builtins(), "builtin listing differs");
  out.push_back(statuses);
  out.push_back(determinism);

  // Parse errors must point into the scenario file, not the expression.
  CheckResult positions{"parse error positions", true, {}, ""};
  const std::string truncated_expr = "mul(iota(delta(0)), iota(delta(0)";
  const auto [tl, tc] = position_of(kContractTruncated, truncated_expr,
                                    static_cast<int>(truncated_expr.size()));
  const auto [ul, uc] = position_of(kContractUnknownFunction, "nosuch", 0);
  const auto [jl, jc] = position_of(kContractBadJson, "\"objects\"", 0);
  const std::vector<std::tuple<std::string, std::size_t, int, int>> expected{
      {"truncated", 7, tl, tc}, {"unknown_function", 8, ul, uc}, {"bad_json", 9, jl, jc}};
  for (const auto& [label, index, line, column] : expected) {
    const std::string want = std::to_string(line) + ":" + std::to_string(column) + ":";
    const std::string& got = outcomes[index].error;
    positions.measurements.push_back({label + "_line", static_cast<double>(line)});
    positions.measurements.push_back({label + "_column", static_cast<double>(column)});
    positions = fail_unless(positions, got.rfind(want, 0) == 0, label + ": '" + got + "'");
  }
  out.push_back(positions);

  CheckResult listing_check{"builtin listing", true, {}, ""};
  for (const char* name : {"sin", "ddx", "cubic", "heaviside-power", "delta-squared", "h-times-delta"}) {
    listing_check = fail_unless(listing_check, listing.find(std::string("  ") + name + " ") != std::string::npos ||
                                                    listing.find(std::string("  ") + name + "(") != std::string::npos,
                                std::string("missing ") + name);
  }
  listing_check.measurements.push_back({"demos", static_cast<double>(builtin_demos().size())});
  out.push_back(listing_check);
  return out;
}

}  // namespace colombeau
