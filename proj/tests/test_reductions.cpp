#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spc/corpus.hpp"
#include "spc/ground.hpp"
#include "spc/parser.hpp"
#include "spc/reductions.hpp"

using namespace spc;

namespace {

ReductionCase one(const std::string& text) {
  auto cs = parse_cases(text);
  REQUIRE(cs.size() == 1);
  return cs[0];
}

}  // namespace

TEST_CASE("case files round-trip") {
  auto cs = parse_cases(read_file(data_dir() + "/cases/tiling.spc"));
  CHECK(cs.size() == 5);
  for (const auto& c : cs) {
    auto back = one(print_case(c));
    CHECK(back.name == c.name);
    CHECK(back.tiling.k == c.tiling.k);
    CHECK(back.tiling.h == c.tiling.h);
    CHECK(back.tiling.v == c.tiling.v);
    CHECK(back.tiling.init == c.tiling.init);
    CHECK(back.expected == c.expected);
    CHECK(back.max_domain == c.max_domain);
    CHECK(back.max_worlds == c.max_worlds);
  }
  CHECK_THROWS_AS(parse_cases("(case x (tiles 0) (init 1))"), Error);
}

TEST_CASE("a trivial tiling has a witness") {
  auto r = run_case(one("(case t (tiles 1) (h (1 1)) (v (1 1)) (init 1) (expect sat-evidence) (bounds 5 4))"),
                    default_budget());
  CHECK(r.witness.has_value());
  CHECK(r.agrees);
  CHECK(r.axioms > 0);
}

TEST_CASE("an incompatible tiling has none within bounds") {
  auto r = run_case(one("(case t (tiles 2) (h) (v) (init 1 2) (expect unsat-evidence) (bounds 5 4))"),
                    default_budget());
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.agrees);
  CHECK(r.note.find("evidence only") != std::string::npos);
}

TEST_CASE("unknown cases carry no verdict") {
  auto r = run_case(one("(case t (tiles 1) (h (1 1)) (v (1 1)) (init 1 1) (expect unknown) (bounds 5 4))"),
                    default_budget());
  CHECK(r.agrees);
  CHECK(r.note.find("no witness within bounds") != std::string::npos);
}

TEST_CASE("a contradicted expectation is reported") {
  auto r = run_case(one("(case t (tiles 1) (h (1 1)) (v (1 1)) (init 1) (expect unsat-evidence) (bounds 5 4))"),
                    default_budget());
  CHECK_FALSE(r.agrees);
  auto s = run_case(one("(case t (tiles 2) (h) (v) (init 1 2) (expect sat-evidence) (bounds 5 4))"), default_budget());
  CHECK_FALSE(s.agrees);
}

TEST_CASE("budget exhaustion propagates") {
  CHECK_THROWS_AS(
      run_case(one("(case t (tiles 2) (h (1 2) (2 1)) (v (1 2) (2 1)) (init 1) (expect sat-evidence) (bounds 5 4))"), 1),
      BudgetExceeded);
}

TEST_CASE("malformed tilings are rejected") {
  CHECK_THROWS_AS(parse_cases("(case x (tiles 2) (h (1 3)) (init 1))"), ParseError);
  CHECK_THROWS_AS(parse_cases("(case x (tiles 2) (init 0))"), ParseError);
  CHECK_THROWS_AS(parse_cases("(case x (tiles 2))"), ParseError);
}
