#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "spc/corpus.hpp"
#include "spc/frugal.hpp"
#include "spc/ground.hpp"
#include "spc/semantics.hpp"

using namespace spc;

namespace {

bool has_sub(const F& f, const F& g) {
  auto sub = subformulas(f);
  return std::any_of(sub.begin(), sub.end(), [&](const F& h) { return equal(g, h); });
}

F nullary(const std::string& p) { return mk_atom(p, {}); }
F unary(const std::string& p, const std::string& v) { return mk_atom(p, {var(v)}); }

void check_equisat(const F& in, const F& out, int d, int w) {
  auto a = bounded_sat(in, d, w);
  auto b = bounded_sat(out, d, w);
  CHECK(a.has_value() == b.has_value());
}

}  // namespace

TEST_CASE("standpoint symbols become nullary atoms") {
  auto t = to_s5(fm("(dia (union s1 s2) (P x))"));
  const auto& m = t.ledger.standpoint_to_nullary;
  REQUIRE(m.count("s1") == 1);
  REQUIRE(m.count("s2") == 1);
  F want = mk_dia(sp_symbol("*"), mk_and(mk_or(nullary(m.at("s1")), nullary(m.at("s2"))), fm("(P x)")));
  CHECK(equal(t.formula, want));
  CHECK(fragment_report(t.formula).is_s5);

  auto u = to_s5(fm("(dia * (P x))"));
  CHECK(equal(u.formula, fm("(dia * (P x))")));
  CHECK(u.ledger.standpoint_to_nullary.empty());

  auto v = to_s5(fm("(dia (minus s s) (P x))"));
  F S = nullary(v.ledger.standpoint_to_nullary.at("s"));
  CHECK(equal(v.formula, mk_dia(sp_symbol("*"), mk_and(mk_and(S, mk_not(S)), fm("(P x)")))));
  CHECK_FALSE(bounded_sat(mk_exists("x", v.formula), 2, 2).has_value());
}

TEST_CASE("nullary predicates become unary") {
  auto t = remove_nullary(fm("(A)"));
  CHECK(equal(t.formula, mk_forall("x", unary(t.ledger.nullary_to_unary.at("A"), "x"))));

  F plain = fm("(forall x (P x))");
  auto same = remove_nullary(plain);
  CHECK(equal(same.formula, plain));
  CHECK(same.ledger == RenameLedger{});

  auto m = remove_nullary(fm("(exists y (dia * (and (A) (P y))))"));
  CHECK(fragment_report(m.formula).is_monodic);
  CHECK(fragment_report(m.formula).nullary_free);
}

TEST_CASE("constants become unary predicates") {
  auto t = remove_constants(fm("(P #a)"));
  std::string Pa = t.ledger.constant_to_unary.at("a");
  CHECK(has_sub(t.formula, mk_exists("x", mk_and(unary(Pa, "x"), unary("P", "x")))));
  CHECK(fragment_report(t.formula).constant_free);

  auto e = remove_constants(fm("(= #a #b)"));
  std::string A = e.ledger.constant_to_unary.at("a"), B = e.ledger.constant_to_unary.at("b");
  CHECK(has_sub(e.formula, mk_exists("x", mk_and(unary(A, "x"), unary(B, "x")))));

  auto inner = remove_constants(fm("(forall x (implies (P x) (R x #a)))"));
  CHECK(fragment_report(inner.formula).constant_free);
  CHECK(fragment_report(inner.formula).is_c2);
  check_equisat(fm("(forall x (implies (P x) (R x #a)))"), inner.formula, 3, 1);

  F free_of = fm("(exists x (P x))");
  CHECK(equal(remove_constants(free_of).formula, free_of));
}

TEST_CASE("frugalize") {
  F frugal = fm("(dia * (exists x (P x)))");
  auto same = frugalize(frugal);
  CHECK(equal(same.formula, frugal));
  CHECK(same.ledger == RenameLedger{});

  for (const char* text : {"(dia s (P #a))", "(forall x (box s1 (implies (P x) (dia s2 (Q x)))))",
                           "(and (box s (forall x (P x))) (dia t (exists x (not (P x)))))",
                           "(and (A) (dia s (not (A))))"}) {
    CAPTURE(text);
    F in = fm(text);
    auto t = frugalize(in);
    CHECK(fragment_report(t.formula).is_frugal);
    check_equisat(in, t.formula, 2, 2);
  }
}

TEST_CASE("ledger text round-trips") {
  auto t = frugalize(fm("(and (dia s (P #a)) (or (A) (dia t (= #a #b))))"));
  CHECK_FALSE(t.ledger.standpoint_to_nullary.empty());
  CHECK(RenameLedger::from_text(t.ledger.to_text()) == t.ledger);
}

TEST_CASE("model mappings carry models across each step") {
  for (const auto& e : load_formula_corpus(data_dir() + "/corpus/hand.spf", "hand-")) {
    CAPTURE(e.name);
    auto t = frugalize(e.formula);
    auto M = bounded_sat(e.formula, 2, 2);
    auto N = bounded_sat(t.formula, 2, 2);
    CHECK(M.has_value() == N.has_value());
    if (M) CHECK(models(frugal_model_forward(*M, t.ledger), t.formula));
    if (N) CHECK(models(frugal_model_backward(*N, t.ledger), e.formula));
  }
}

TEST_CASE("single steps have their own mappings") {
  F in = fm("(and (dia s (A)) (dia (minus * s) (not (A))))");
  auto s5 = to_s5(in);
  auto M = bounded_sat(in, 1, 2);
  REQUIRE(M);
  CHECK(models(s5_model_forward(*M, s5.ledger), s5.formula));
  auto nf = remove_nullary(s5.formula);
  auto M2 = s5_model_forward(*M, s5.ledger);
  CHECK(models(nullary_model_forward(M2, nf.ledger), nf.formula));
  auto back = nullary_model_backward(nullary_model_forward(M2, nf.ledger), nf.ledger);
  CHECK(models(s5_model_backward(back, s5.ledger), in));
}
