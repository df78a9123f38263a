#include <doctest.h>

#include <sstream>
#include <string>

#include <json.hpp>

#include "colombeau/expression.hpp"
#include "colombeau/registry.hpp"
#include "colombeau/scenario.hpp"

using namespace colombeau;

namespace {

std::vector<nlohmann::json> records(const std::string& report) {
  std::vector<nlohmann::json> out;
  std::istringstream in(report);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

template <class F>
std::pair<int, int> parse_error_at(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("constructor grammar") {
    const Distribution u = parse_distribution("2*delta(0.1) - heaviside(-0.5) + ddelta(0, 2)");
    CHECK(u.terms().size() == 3);
    CHECK(parse_distribution(" ( delta(1e-1) ) ").to_string() == "delta(0.1)");
    const TestObject w = make_bump(0.0, 1.0);
    CHECK(pairing(parse_distribution("-delta(0.2)"), w) == -w(0.2));
    const Representative r = parse_representative("mul(iota(delta(0)), sigma(sin), scale(2, sigma(cos)))");
    CHECK(r(w, Point{0.3}) == doctest::Approx(w(0.0) * std::sin(0.3) * 2 * std::cos(0.3)).epsilon(1e-15));
    CHECK(parse_field("sinefield(0.3)").name() == "sinefield(0.3)");
    CHECK(parse_diffeo("compose(cubic, shift(1))")(0.0) == 2.0);
    CHECK(parse_representative("lie(ddx, act(scale(2), iota(heaviside(0))))").provenance() ==
          Provenance::lie_derivative);
  }

  TEST_CASE("parse errors carry positions") {
    CHECK(parse_error_at([] { parse_distribution("delta("); }) == std::pair{1, 7});
    CHECK(parse_error_at([] { parse_distribution("delta(0) +"); }) == std::pair{1, 11});
    CHECK(parse_error_at([] { parse_representative("sigma(nosuch)"); }) == std::pair{1, 7});
    CHECK(parse_error_at([] { parse_representative("iota(delta(0)) x"); }) == std::pair{1, 16});
    CHECK(parse_error_at([] { parse_field("sinefield(2)"); }) == std::pair{1, 1});
    CHECK(parse_error_at([] { parse_representative("pow(sigma(sin), 0)"); }) == std::pair{1, 17});
    CHECK(parse_error_at([] { parse_distribution("delta(0)\n + bogus(1)"); }) == std::pair{2, 4});
  }

  TEST_CASE("builtin listing") {
    const std::string l = list_builtins();
    CHECK(l == list_builtins());
    for (const char* s : {"functions:", "fields:", "diffeos:", "demos:", "  sin ", "  ddx ", "  cubic ",
                          "  heaviside-power ", "  delta-squared ", "  h-times-delta "}) {
      CHECK(l.find(s) != std::string::npos);
    }
    CHECK(l.find("fields:") < l.find("diffeos:"));
    CHECK(builtin_demos().size() == 13);
  }

  TEST_CASE("grade scenario report") {
    const char* text = R"json({"name": "g", "kind": "grade",
      "objects": {"representative": "mul(iota(delta(0)), iota(delta(0)))", "expect": {"slope": -2}}})json";
    const RunOutcome out = run_scenario(text);
    CHECK(out.status == kStatusPass);
    const auto recs = records(out.report);
    REQUIRE(recs.size() == 3);
    for (const auto& r : recs) CHECK(r["schema"] == 1);
    CHECK(recs[0]["record"] == "config");
    CHECK(recs[0]["objects"]["grid"]["size"] == 13);
    CHECK(recs[0]["objects"]["expect"]["slope_tol"] == 0.1);
    CHECK(recs[1]["record"] == "check");
    CHECK(recs[1]["measurements"]["fitted_slope"].get<double>() == doctest::Approx(-2.0).epsilon(0.05));
    CHECK(recs[2]["record"] == "summary");
    CHECK(recs[2]["status"] == 0);
    CHECK(out.report == run_scenario(text).report);
  }

  TEST_CASE("overrides replace scenario fields") {
    const char* text = R"json({"name": "g", "kind": "grade",
      "objects": {"representative": "iota(delta(0))", "expect": {"slope": -1}}})json";
    RunOverrides ov;
    ov.eps_min = 1.0 / 1024;
    ov.depth = 1;
    ov.tol = 0.5;
    const RunOutcome out = run_scenario(text, ov);
    const auto recs = records(out.report);
    CHECK(recs[0]["objects"]["grid"]["size"] == 9);
    CHECK(recs[0]["objects"]["depth"] == 1);
    CHECK(recs[0]["objects"]["expect"]["slope_tol"] == 0.5);
    CHECK(recs[0]["overrides"]["depth"] == 1);
    // depth 1 puts the derivative series at slope -2, outside -1 +- 0.5.
    CHECK(out.status == kStatusCriterionFailure);
  }

  TEST_CASE("scenario validation errors") {
    const auto status = [](const char* t) { return run_scenario(t).status; };
    CHECK(status(R"json({"name": "x", "kind": "grade", "objects": {"representative": "zero", "colour": 1}})json") ==
          kStatusParseError);
    CHECK(status(R"json({"name": "x", "kind": "grade", "objects": {}})json") == kStatusParseError);
    CHECK(status(R"json({"name": "x", "kind": "grade", "objects": {"representative": 3}})json") ==
          kStatusParseError);
    CHECK(status(R"json({"name": "x", "kind": "demo", "objects": {"demo": "nope"}})json") == kStatusParseError);
    CHECK(status(R"json({"name": "x", "kind": "grade", "objects": {"representative": "zero",
      "grid": {"eps_max": 0.1, "eps_min": 0.2}}})json") == kStatusParseError);
    CHECK(status(R"json([1, 2])json") == kStatusParseError);
    const RunOutcome bad = run_scenario("{\n  \"name\": \"x\",\n  \"kind\": \"lie-test\",\n"
                                        "  \"objects\": {\"field\": \"ddx\", \"distribution\": \"delta(0) +* delta(1)\"}\n}");
    CHECK(bad.status == kStatusParseError);
    CHECK(bad.error.rfind("4:58:", 0) == 0);
  }

  TEST_CASE("numerical failures exit with status 3") {
    const RunOutcome out = run_scenario(
        R"json({"name": "x", "kind": "grade", "objects": {"representative": "pow(iota(delta(0)), 80)"}})json");
    CHECK(out.status == kStatusNumericalError);
    CHECK(out.error.find("numerical error") == 0);
    const auto recs = records(out.report);
    CHECK(recs[0]["record"] == "config");
    CHECK(recs[1]["record"] == "error");
  }
}
