// End-to-end acceptance gate: one pass/fail line per criterion, nonzero
// exit when anything fails. Time limits are part of the contract.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qwb/enumerate.hpp"
#include "qwb/ideal.hpp"
#include "qwb/io.hpp"
#include "qwb/k0.hpp"
#include "qwb/suites.hpp"

using namespace qwb;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& name, long limit_ms,
               const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  if (problem.empty() && ms > limit_ms)
    problem = "time limit exceeded: " + std::to_string(ms) + " > " +
              std::to_string(limit_ms) + " ms";
  const bool ok = problem.empty();
  if (!ok) ++g_failures;
  std::cout << "criterion " << num << " (" << name << "): "
            << (ok ? "PASS" : "FAIL") << " [" << ms << " ms]";
  if (!ok) std::cout << " -- " << problem;
  std::cout << '\n';
}

std::string check_suite(const std::string& name, const Fixtures& corpus,
                        const SuiteOptions& opts, long min_cases = 1) {
  Report r = run_suite(name, corpus, opts);
  if (r.cases_failed > 0)
    return name + ": " + std::to_string(r.cases_failed) + " failures, first: " +
           (r.witnesses.empty() ? "?" : r.witnesses.front());
  if (r.cases_total < min_cases)
    return name + ": only " + std::to_string(r.cases_total) + " cases";
  return "";
}

Fixtures unital_corpus() {
  const Fixtures& fx = builtin_fixtures();
  Fixtures out;
  out.quantales = {{"B2", fx.quantale("B2")}, {"L3", fx.quantale("L3")}};
  return out;
}

std::string fixture_path(const std::string& leaf) {
  return std::string(QWB_FIXTURE_DIR) + "/" + leaf;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QWB_CLI) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

int main() {
  const Fixtures& fx = builtin_fixtures();

  criterion(1, "axiom validators", 1000, [&] {
    Workspace ws = load_workspace_file(fixture_path("fixtures.qwb"));
    if (ws.quantales.size() != 4 || ws.modules.size() != 7)
      return std::string("fixture file is missing structures");
    const char* bad[] = {"nonassoc", "nondistrib", "bottom",
                         "unit",     "m1",         "m3"};
    for (const char* leaf : bad) {
      try {
        load_workspace_file(fixture_path("counter/" + std::string(leaf) +
                                         ".qwb"));
        return std::string(leaf) + ".qwb was accepted";
      } catch (const Error& e) {
        if (e.code() == "ParseError")
          return std::string(leaf) + ".qwb failed with a parse error, not a "
                                     "validator witness";
        if (std::string(e.what()).empty())
          return std::string(leaf) + ".qwb rejected without a witness";
      }
    }
    return std::string();
  });

  criterion(2, "residuation-law suites", 5000, [&] {
    SuiteOptions opts;
    std::string p = check_suite("basicmq", fx, opts, 500);
    if (p.empty()) p = check_suite("qxprop", fx, opts, 100);
    return p;
  });

  criterion(3, "adjoint pairs for all 2x2 kernels", 30000, [&] {
    // 16 kernels over B2, 81 over L3; three checks per kernel
    return check_suite("adjoint", unital_corpus(), SuiteOptions{}, 3 * 97);
  });

  criterion(4, "matrix-endomorphism isomorphism", 60000, [&] {
    SuiteOptions opts;
    opts.kernel_pair_budget = 7000;  // covers all 256 + 6561 pairs
    return check_suite("matrixendo", unital_corpus(), opts, 256 + 6561);
  });

  criterion(5, "module congruences from ideals", 30000, [&] {
    std::string p = check_suite("icong", fx, SuiteOptions{});
    if (!p.empty()) return p;
    // non-uniqueness: on the 3-chain over B2 two distinct congruences share
    // the bottom class {0}
    const QModule& m = fx.module_named("chain3");
    int with_trivial_bottom = 0;
    for (const auto& c : enumerate_congruences_module(m)) {
      bool alone = true;
      for (Elem v = 1; v < m.size(); ++v)
        if (c.related(0, v)) alone = false;
      if (alone) ++with_trivial_bottom;
    }
    if (with_trivial_bottom < 2)
      return std::string("expected two congruences with bottom class {0}");
    return std::string();
  });

  criterion(6, "quantale congruences from two-sided elements", 10000, [&] {
    return check_suite("qicong", fx, SuiteOptions{});
  });

  criterion(7, "saturation quotients", 60000, [&] {
    std::string p = check_suite("satquo", fx, SuiteOptions{});
    if (p.empty()) p = check_suite("itop", fx, SuiteOptions{});
    return p;
  });

  criterion(8, "projectivity by splitting", 60000, [&] {
    return check_suite("proj", fx, SuiteOptions{});
  });

  criterion(9, "simple/semisimple over the size-4 census", 300000, [&] {
    auto all = enumerate_quantales(4);
    if (all.size() != 144)
      return "census changed: " + std::to_string(all.size()) +
             " quantales (frozen value 144)";
    for (const auto& q : all) {
      if (!q.flags.integral) continue;
      if (is_simple(q) != (q.size() <= 2))
        return std::string("integral quantale breaks simple <=> |Q|<=2");
      if (is_semisimple(q) != q.flags.frame)
        return std::string("integral quantale breaks semisimple <=> frame");
    }
    return std::string();
  });

  criterion(10, "K0 sanity over B2", 10000, [&] {
    auto classes = projective_classes(fx.quantale("B2"), 2);
    const int B2 = 1, B2sq = 2;
    if (classes.reps[0].size() != 1)
      return std::string("class 0 is not the zero module");
    if (k0_equal(classes, {{B2, B2}, {}}, {{B2sq}, {}}, 2) != K0Verdict::equal)
      return std::string("[B2]+[B2] != [B2^2]");
    if (k0_equal(classes, {{B2}, {}}, {{B2sq}, {}}, 2) != K0Verdict::distinct)
      return std::string("[B2] vs [B2^2] not separated by cardinality");
    if (k0_equal(classes, {{B2, 0}, {}}, {{B2}, {}}, 2) != K0Verdict::equal)
      return std::string("[0] is not the monoid identity");
    return std::string();
  });

  criterion(11, "CLI round trip and exit codes", 60000, [&] {
    // canonical file is a byte-level fixed point
    Workspace ws = load_workspace_file(fixture_path("fixtures.qwb"));
    std::ifstream in(fixture_path("fixtures.qwb"));
    std::stringstream raw;
    raw << in.rdbuf();
    if (serialize_workspace(ws) != raw.str())
      return std::string("fixtures.qwb is not serializer-canonical");
    if (run_cli("verify --all-fixtures --suite all") != 0)
      return std::string("verify --all-fixtures all did not exit 0");
    const char* bad[] = {"nonassoc", "nondistrib", "bottom",
                         "unit",     "m1",         "m3"};
    for (const char* leaf : bad) {
      int rc = run_cli("check " + fixture_path("counter/" + std::string(leaf) +
                                               ".qwb"));
      if (rc != 1)
        return std::string(leaf) + ".qwb: expected exit 1, got " +
               std::to_string(rc);
    }
    return std::string();
  });

  if (g_failures != 0)
    std::cout << g_failures << " criterion(s) failed\n";
  return g_failures == 0 ? 0 : 1;
}
