#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "spc/corpus.hpp"

using namespace spc;

namespace {

bool contains(const std::vector<F>& fs, const F& f) {
  return std::any_of(fs.begin(), fs.end(), [&](const F& g) { return equal(f, g); });
}

}  // namespace

TEST_CASE("subformulas") {
  CHECK(subformulas(fm("(P x)")).size() == 1);
  CHECK(subformulas(fm("(and (P x) (not (P x)))")).size() == 3);
  CHECK(subformulas(fm("(and (P x) (P x))")).size() == 2);

  auto sub = subformulas(running_example());
  CHECK(contains(sub, fm("(box * (Good x))")));
  CHECK(contains(sub, fm("(dia * (and (Best x) (forall y (iff (Best y) (= x y)))))")));
  CHECK(contains(sub, fm("(dia * (forall x (or (Good x) (Best x))))")));
}

TEST_CASE("free variables") {
  CHECK(free_vars(fm("(P x)")) == std::set<std::string>{"x"});
  CHECK(free_vars(fm("(exists x (R x y))")) == std::set<std::string>{"y"});
  CHECK(free_vars(fm("(exists x (and (P x) (exists=0 x (R x y))))")) == std::set<std::string>{"y"});
  CHECK(free_vars(fm("(= #a x)")) == std::set<std::string>{"x"});
  CHECK(is_sentence(fm("(forall x (exists y (R x y)))")));
  CHECK_FALSE(is_sentence(fm("(dia * (P x))")));
}

TEST_CASE("fragment flags") {
  auto r = fragment_report(fm("(dia * (P x))"));
  CHECK(r.is_c2);
  CHECK(r.is_monodic);
  CHECK(r.is_s5);
  CHECK(r.nullary_free);
  CHECK(r.constant_free);
  CHECK(r.is_frugal);

  CHECK_FALSE(fragment_report(fm("(dia s (P x))")).is_s5);
  CHECK_FALSE(fragment_report(fm("(dia * (R x y))")).is_monodic);
  CHECK_FALSE(fragment_report(fm("(P #a)")).constant_free);
  CHECK_FALSE(fragment_report(fm("(and (A) (P x))")).nullary_free);
  CHECK_FALSE(fragment_report(fm("(exists z (P z))")).is_c2);
  CHECK_FALSE(fragment_report(fm("(dia s (P x))")).is_frugal);
}

TEST_CASE("diamond sets") {
  auto none = dia_sets(fm("(forall x (P x))"));
  CHECK(none.dia.empty());
  CHECK(none.free_dia.empty());

  auto closed = dia_sets(fm("(dia * (exists x (P x)))"));
  CHECK(closed.dia.size() == 1);
  CHECK(closed.free_dia.empty());

  auto e = dia_sets(running_example());
  CHECK(e.dia.size() == 3);
  CHECK(e.free_dia.size() == 2);

  CHECK_THROWS_AS(dia_sets(fm("(dia * (P x))")), Error);
}

TEST_CASE("sugar elaborates into the core") {
  CHECK(equal(mk_forall("x", mk_atom("P", {var("x")})),
              mk_count(Cmp::Eq, 0, "x", mk_not(mk_atom("P", {var("x")})))));
  CHECK(equal(mk_box(sp_symbol("*"), mk_atom("P", {var("x")})),
              mk_not(mk_dia(sp_symbol("*"), mk_not(mk_atom("P", {var("x")}))))));
  CHECK(equal(fm("(or (P x) (Q x))"), mk_not(mk_and(mk_not(fm("(P x)")), mk_not(fm("(Q x)"))))));
}

TEST_CASE("structural equality and hashing") {
  F a = fm("(exists>=2 x (and (P x) (dia (union s t) (Q x))))");
  F b = fm("(exists>=2 x (and (P x) (dia (union s t) (Q x))))");
  CHECK(equal(a, b));
  CHECK(FHash{}(a) == FHash{}(b));
  CHECK_FALSE(equal(a, fm("(exists>=2 x (and (P x) (dia (union t s) (Q x))))")));
  CHECK(sp_equal(sp_union(sp_symbol("s"), sp_symbol("t")), sp_union(sp_symbol("s"), sp_symbol("t"))));
  CHECK(is_universal(sp_symbol(kUniversal)));
}

TEST_CASE("fresh names avoid taken ones") {
  std::set<std::string> taken{"P", "P_1"};
  auto n = fresh_name("P", taken);
  CHECK(taken.count(n) == 0);
}

TEST_CASE("signature of a formula") {
  auto sig = signature_of(fm("(and (R #a x) (dia s (and (A) (P y))))"));
  CHECK(sig.constants == std::set<std::string>{"a"});
  CHECK(sig.standpoints.count("s") == 1);
  CHECK(sig.standpoints.count(kUniversal) == 1);
  CHECK(sig.binary_predicates().size() == 1);
}

TEST_CASE("hand corpus is inside the declared limits") {
  for (const auto& e : load_formula_corpus(data_dir() + "/corpus/hand.spf", "hand-")) {
    CAPTURE(e.name);
    auto r = fragment_report(e.formula);
    CHECK(is_sentence(e.formula));
    CHECK(r.is_c2);
    CHECK(r.is_monodic);
    CHECK(r.size <= 12);
  }
}
