// Property suites over the corpora. Each suite is deterministic for a given seed.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "spc/ground.hpp"
#include "spc/syntax.hpp"

namespace spc {

struct SuiteOptions {
  std::uint64_t seed = 7;
  long long budget = default_budget();
  std::function<void(const std::string&)> progress;  // optional, one call per finished item
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::map<std::string, long long> counts;
  std::vector<std::string> failures;  // capped
  std::vector<std::string> notes;

  void fail(const std::string& what);
  void merge(const SuiteResult& other);
  std::string text() const;  // s-expression report
};

// lemma32, thm34, stack-roundtrip, trans-lemma39, rigidity, dl-agreement, frugal-equisat,
// reductions, golden, dl-normal, sizes
const std::vector<std::string>& suite_names();
// Throws on an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

SuiteResult suite_frugal_equisat(const SuiteOptions& opt);
SuiteResult suite_lemma32(const SuiteOptions& opt);
SuiteResult suite_thm34(const SuiteOptions& opt);
SuiteResult suite_stack_roundtrip(const SuiteOptions& opt);
SuiteResult suite_trans_lemma39(const SuiteOptions& opt);
SuiteResult suite_rigidity(const SuiteOptions& opt);
SuiteResult suite_golden(const SuiteOptions& opt);
SuiteResult suite_dl_agreement(const SuiteOptions& opt);
SuiteResult suite_dl_normal(const SuiteOptions& opt);
SuiteResult suite_sizes(const SuiteOptions& opt);
SuiteResult suite_reductions(const SuiteOptions& opt);

// Exhaustive closure-invariance check for one formula over P/1, R/2 and the rigid E/1,
// with at most `max_domain` elements and `max_worlds` base worlds.
SuiteResult closure_invariance(const F& f, const std::string& name, int max_domain, int max_worlds);

// Size limits checked by the sizes suite.
std::size_t frugal_size_limit(const F& input);
std::size_t removal_size_limit(const F& frugal_input);

}  // namespace spc
