// One PASS/FAIL line per acceptance criterion. Criteria 1-10 run in-process;
// criterion 11 drives the colombeau_lab binary as a subprocess.
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "colombeau/scenario.hpp"
#include "colombeau/suites.hpp"

namespace fs = std::filesystem;
using namespace colombeau;

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

int run_lab(const std::string& args, const fs::path& stdout_file) {
  const std::string cmd = quoted(COLOMBEAU_LAB_PATH) + " " + args + " > " + quoted(stdout_file.string()) + " 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CriterionResult cli_contract(const SuiteOptions& opts) {
  CriterionResult r{11, criterion_title(11), {}};
  const fs::path work = fs::path(COLOMBEAU_ACCEPTANCE_WORKDIR) / "acceptance_cli";
  fs::create_directories(work);

  std::vector<fs::path> demos;
  for (const auto& e : fs::directory_iterator(fs::path(COLOMBEAU_SCENARIO_DIR) / "demos")) {
    if (e.path().extension() == ".json") demos.push_back(e.path());
  }
  std::sort(demos.begin(), demos.end());

  CheckResult runs{"each demo scenario exits 0 with byte-identical reports", true, {}, ""};
  int ok = 0;
  for (const auto& d : demos) {
    const std::string stem = d.stem().string();
    const fs::path a = work / (stem + ".a.jsonl"), b = work / (stem + ".b.jsonl");
    const std::string base = "--scenario " + quoted(d.string()) + " --threads " + std::to_string(opts.threads);
    const int s1 = run_lab(base + " --out " + quoted(a.string()), work / (stem + ".a.log"));
    const int s2 = run_lab(base + " --out " + quoted(b.string()), work / (stem + ".b.log"));
    const bool same = fs::exists(a) && slurp(a) == slurp(b) && !slurp(a).empty();
    runs.measurements.push_back({stem + "_status", static_cast<double>(s1)});
    if (s1 == 0 && s2 == 0 && same) {
      ++ok;
    } else {
      runs.passed = false;
      runs.detail += stem + (s1 != 0 || s2 != 0 ? " exited " + std::to_string(s1) + "/" + std::to_string(s2)
                                                  : " reports differ") + "; ";
    }
  }
  runs.measurements.push_back({"demos", static_cast<double>(demos.size())});
  runs.measurements.push_back({"demos_ok", static_cast<double>(ok)});
  if (demos.size() != 13) {
    runs.passed = false;
    runs.detail += "expected 13 demo scenarios";
  }
  r.checks.push_back(runs);

  CheckResult malformed{"malformed input exits 2 with a position", true, {}, ""};
  const fs::path log = work / "malformed.log";
  const int s = run_lab("--scenario " + quoted((fs::path(COLOMBEAU_SCENARIO_DIR) / "examples" / "malformed.json").string()) +
                            " --out " + quoted((work / "malformed.jsonl").string()),
                        log);
  const std::string text = slurp(log);
  malformed.measurements.push_back({"status", static_cast<double>(s)});
  if (s != 2 || text.find("malformed.json:5:55:") == std::string::npos) {
    malformed.passed = false;
    malformed.detail = "status " + std::to_string(s) + ", output: " + text;
  }
  const int missing = run_lab("--scenario " + quoted((work / "does-not-exist.json").string()), work / "missing.log");
  const int bad_flag = run_lab("--threads 0 --list", work / "flag.log");
  malformed.measurements.push_back({"missing_file_status", static_cast<double>(missing)});
  malformed.measurements.push_back({"bad_flag_status", static_cast<double>(bad_flag)});
  if (missing != 2 || bad_flag != 2) {
    malformed.passed = false;
    malformed.detail += " missing file or bad flag not rejected with status 2";
  }
  r.checks.push_back(malformed);

  CheckResult listing{"--list is stable", true, {}, ""};
  const int l1 = run_lab("--list", work / "list.a");
  const int l2 = run_lab("--list", work / "list.b");
  const std::string la = slurp(work / "list.a");
  if (l1 != 0 || l2 != 0 || la != slurp(work / "list.b") || la.find("  delta-squared ") == std::string::npos) {
    listing.passed = false;
    listing.detail = "listing missing or unstable";
  }
  r.checks.push_back(listing);

  for (auto& c : check_cli_contract(opts)) {
    c.name = "in-process: " + c.name;
    r.checks.push_back(c);
  }
  return r;
}

void print(const CriterionResult& r) {
  std::cout << (r.passed() ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << "\n";
  for (const auto& c : r.checks) {
    std::cout << "    " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << " -- " << c.detail;
    std::cout << "\n";
    for (const auto& [k, v] : c.measurements) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6g", v);
      std::cout << "        " << k << " = " << buf << "\n";
    }
  }
  std::cout.flush();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  SuiteOptions opts;
  int failed = 0;
  for (int id : ids) {
    CriterionResult r{id, "", {}};
    try {
      r = id == 11 ? cli_contract(opts) : run_criterion(id, opts);
    } catch (const std::exception& e) {
      r.title = criterion_title(id);
      r.checks.push_back({"exception", false, {}, e.what()});
    }
    print(r);
    if (!r.passed()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
