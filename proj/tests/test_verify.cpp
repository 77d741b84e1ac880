#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "spc/corpus.hpp"
#include "spc/verify.hpp"

using namespace spc;

TEST_CASE("corpora are deterministic and large enough") {
  auto a = standard_corpus(7), b = standard_corpus(7);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() >= 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(equal(a[i].formula, b[i].formula));
  }
  auto c = standard_corpus(8);
  bool differs = false;
  for (std::size_t i = 0; i < std::min(a.size(), c.size()); ++i) differs |= !equal(a[i].formula, c[i].formula);
  CHECK(differs);

  for (const auto& e : frugal_corpus(7)) CHECK(fragment_report(e.formula).is_frugal);
  CHECK(dl_corpus(7, 30).size() == 30);
}

TEST_CASE("random formulas respect the generator limits") {
  FormulaGen g;
  g.max_size = 8;
  g.max_depth = 2;
  for (const auto& e : random_formulas(3, 25, g, "r")) {
    auto r = fragment_report(e.formula);
    CHECK(r.size <= 8);
    CHECK(modal_quant_depth(e.formula) <= 2);
    CHECK(is_sentence(e.formula));
    CHECK(r.is_monodic);
  }
}

TEST_CASE("suite registry") {
  for (const auto& n : suite_names()) CHECK_NOTHROW((void)n.size());
  CHECK(suite_names().size() == 11);
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), Error);
}

TEST_CASE("fast suites pass and repeat exactly") {
  for (const char* name : {"golden", "rigidity", "sizes", "thm34"}) {
    CAPTURE(name);
    auto a = run_suite(name, {});
    auto b = run_suite(name, {});
    CHECK(a.passed);
    CHECK(a.text() == b.text());
  }
}

TEST_CASE("closure invariance on a small formula") {
  auto r = closure_invariance(fm("(forall x (implies (dia * (P x)) (exists y (R x y))))"), "small", 2, 2);
  CHECK(r.passed);
  CHECK(r.counts["structures"] > 0);
}

TEST_CASE("size limits") {
  F f = fm("(dia s (P #a))");
  CHECK(frugal_size_limit(f) == 6 * fragment_report(f).size + 6 * 2);
  CHECK(removal_size_limit(fm("(exists x (P x))")) > 0);
}
