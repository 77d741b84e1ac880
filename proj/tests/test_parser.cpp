#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "spc/corpus.hpp"
#include "spc/dl.hpp"
#include "spc/semantics.hpp"

using namespace spc;

TEST_CASE("formula grammar") {
  CHECK(equal(fm("(dia * (exists>=1 x (Good x)))"),
              mk_dia(sp_symbol("*"), mk_count(Cmp::Ge, 1, "x", mk_atom("Good", {var("x")})))));
  CHECK(equal(fm("(forall x (P x))"), mk_count(Cmp::Eq, 0, "x", mk_not(mk_atom("P", {var("x")})))));
  CHECK(equal(fm("(exists<=3 y (R x y))"), mk_count(Cmp::Le, 3, "y", mk_atom("R", {var("x"), var("y")}))));
  CHECK(equal(fm("(dia (minus s (inter t *)) (P x))"),
              mk_dia(sp_diff(sp_symbol("s"), sp_inter(sp_symbol("t"), sp_symbol("*"))), fm("(P x)"))));
  CHECK(equal(fm("(= #a x)"), mk_eq(cst("a"), var("x"))));
}

TEST_CASE("several top-level forms are conjoined") {
  CHECK(equal(fm("(P x) (Q x)"), mk_and(fm("(P x)"), fm("(Q x)"))));
}

TEST_CASE("formula errors") {
  CHECK_THROWS_AS(fm("(and (P x y) (P x))"), ParseError);
  CHECK_THROWS_AS(fm("(foo x)"), ParseError);
  CHECK_THROWS_AS(fm("(exists>=x x (P x))"), ParseError);
  CHECK_THROWS_AS(fm("(P x"), ParseError);
  CHECK_THROWS_AS(fm(""), ParseError);
}

TEST_CASE("errors render the offending line with carets") {
  std::string text = "(and (P x)\n     (bogus x))";
  try {
    parse_formula(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    std::string r = render_error(e, text);
    CHECK(r.find("line 2") != std::string::npos);
    CHECK(r.find("(bogus x))") != std::string::npos);
    CHECK(r.find("^^^^^") != std::string::npos);
  }
}

TEST_CASE("printing uses the core forms") {
  CHECK(print_formula(fm("(dia * (P x))")) == "(dia * (P x))");
  CHECK(print_formula(fm("(forall x (P x))")) == "(exists=0 x (not (P x)))");
  CHECK(print_formula(mk_eq(cst("a"), var("x"))) == "(= #a x)");
}

TEST_CASE("printing round-trips the corpus") {
  for (const auto& e : standard_corpus(7)) {
    CAPTURE(e.name);
    CHECK(equal(fm(print_formula(e.formula)), e.formula));
  }
}

TEST_CASE("deep formulas print within the line width") {
  F f = mk_true();
  for (int i = 0; i < 80; ++i) f = mk_and(mk_atom("P", {var("x")}), mk_not(f));
  std::string text = print_formula(f);
  CHECK(equal(fm(text), f));
}

TEST_CASE("structure grammar") {
  auto M = parse_structure(R"((structure
    (preds (P 1) (R 2))
    (domain d0 d1)
    (worlds p0 p1)
    (sigma (s1 p0))
    (world p0 (P d0) (R d0 d1))
    (world p1)))");
  CHECK(M.num_worlds() == 2);
  CHECK(M.n() == 2);
  CHECK(M.in_sigma("s1", 0));
  CHECK_FALSE(M.in_sigma("s1", 1));
  CHECK(M.in_sigma("*", 0));
  CHECK(M.in_sigma("*", 1));
  CHECK(M.get(0, M.pred_index("R"), 0, 1));
  CHECK_FALSE(M.get(1, M.pred_index("P"), 0));
  CHECK(same_structure(parse_structure(print_structure(M)), M));

  CHECK_THROWS_AS(parse_structure("(structure (preds (P 1)) (domain d0) (worlds p0) (world p0 (P d9)))"),
                  ParseError);
}

TEST_CASE("interpretation grammar round-trips") {
  Rng rng(3);
  Signature sig;
  sig.add_predicate("P", 1);
  sig.add_predicate("R", 2);
  for (int i = 0; i < 20; ++i) {
    auto I = as_interpretation(random_structure(rng, sig, 1 + i % 3, 1));
    CHECK(same_interpretation(parse_interpretation(print_interpretation(I)), I));
  }
}

TEST_CASE("DL grammar") {
  auto doc = parse_dl("(gci (nom #o) (exists HasPart (and Tumour (nom #t1))))");
  CHECK(dl_equal(doc.sentence,
                 s_gci(c_nominal("o"), c_exists(role_name("HasPart"), c_and(c_atomic("Tumour"), c_nominal("t1"))))));

  CHECK_NOTHROW(parse_dl("(gci Top (atleast 2 (rand R S) Top))"));
  CHECK_THROWS_AS(parse_dl("(mode sroiqb-s)\n(declare-nonsimple T)\n(ria (T T) T)\n(gci Top (self T))"), Error);
  CHECK_THROWS_AS(parse_dl("(mode sroiqb-s)\n(ria (T T) T)\n(gci A (atleast 2 T B))"), ParseError);
  CHECK_THROWS_AS(parse_dl("(mode sroiqb-s)\n(declare-nonsimple T)\n(ria (T T) T)\n(ria (T) S)"), ParseError);
  CHECK_NOTHROW(parse_dl("(mode sroiqb-s)\n(ria (S) T)"));

  for (const auto& e : load_dl_corpus(data_dir() + "/corpus/dl")) {
    CAPTURE(e.name);
    auto back = parse_dl(print_dl(e.doc));
    CHECK(dl_equal(back.sentence, e.doc.sentence));
    CHECK(back.header == e.doc.header);
  }
}
