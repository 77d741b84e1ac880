// One pass/fail line per acceptance criterion.
#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "spc/verify.hpp"

using namespace spc;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
};

const std::vector<Criterion> kCriteria = {
    {1, "frugalization keeps bounded satisfiability", {"frugal-equisat"}},
    {2, "closure evaluation is permutation invariant", {"lemma32"}},
    {3, "witness selection is small and sound", {"thm34"}},
    {4, "stacked interpretations round-trip", {"stack-roundtrip"}},
    {5, "layered translation agrees with the closure", {"trans-lemma39", "rigidity"}},
    {6, "translation of the running example matches the golden file", {"golden"}},
    {7, "DL evaluation agrees with the translation", {"dl-agreement"}},
    {8, "normal forms and role-inclusion separation", {"dl-normal"}},
    {9, "output sizes stay within the limits", {"sizes"}},
};

bool run(const Criterion& c, const SuiteOptions& opt, bool verbose) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::vector<SuiteResult> results;
  for (const auto& s : c.suites) {
    results.push_back(run_suite(s, opt));
    ok &= results.back().passed;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion %d: %s  %s (%.1f s)\n", c.id, ok ? "PASS" : "FAIL", c.title, secs);
  for (const auto& r : results) {
    if (verbose || !r.passed) std::cout << r.text() << "\n";
  }
  std::cout.flush();
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  bool verbose = false;
  SuiteOptions opt;
  app.add_option("--criterion", only, "run one criterion (1-9)")->check(CLI::Range(1, 9));
  app.add_option("--seed", opt.seed, "corpus seed");
  app.add_flag("-v,--verbose", verbose, "print full suite reports");
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  for (const auto& c : kCriteria)
    if (only == 0 || only == c.id) ok &= run(c, opt, verbose);
  return ok ? 0 : 1;
}
