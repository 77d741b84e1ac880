#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "spc/corpus.hpp"
#include "spc/ground.hpp"
#include "spc/removal.hpp"
#include "spc/semantics.hpp"

using namespace spc;

namespace {

bool same_shape(const F& a, const F& b) { return equal(normalize(a), normalize(b)); }

}  // namespace

TEST_CASE("layer count") {
  CHECK(layer_bits(0) == 0);
  CHECK(layer_bits(1) == 1);
  CHECK(layer_bits(2) == 3);
  CHECK(layer_bits(3) == 5);
  for (std::size_t d = 1; d <= 6; ++d) CHECK((std::size_t{1} << layer_bits(d)) >= d * (std::size_t{1} << d));

  auto p = compute_params(running_example());
  CHECK(p.ell == 2);
  CHECK(p.m == 5);
  CHECK(p.e_preds().size() == 2);
  CHECK(p.level_preds.size() == 5);
}

TEST_CASE("introduced names are fresh") {
  auto p = compute_params(fm("(and (forall x (exists y (F x y))) (exists x (dia * (and (L_0 x) (E_1 x)))))"));
  CHECK(p.chain_pred != "F");
  for (const auto& l : p.level_preds) CHECK(l != "L_0");
  for (const auto& e : p.e_preds()) CHECK(e != "E_1");
}

TEST_CASE("stack formula: level bits flip along the chain") {
  auto p = RemovalParams::bare(1, StackNames::standard(1));
  F stack = build_stack_formula(p, {});
  auto I = FOInterpretation::make({"a", "b"}, {{kChainPred, 2}, {level_pred(0), 1}});
  int Fp = I.pred_index(kChainPred), L = I.pred_index(level_pred(0));
  I.set(Fp, true, 0, 1);
  I.set(L, true, 1);
  CHECK(models_fo(I, stack));
  I.set(L, true, 0);
  CHECK_FALSE(models_fo(I, stack));
  CHECK(eval_fo(I, {{"x", 0}, {"y", 1}}, fm("(implies (F x y) (iff (L_0 x) (L_0 y)))")));
}

TEST_CASE("stack formula: binary predicates stay inside a layer") {
  auto names = StackNames::standard(2);
  F stack = build_stack_formula(RemovalParams::bare(2, names), {"R"});
  Signature sig;
  sig.add_predicate("R", 2);
  auto M = blank_structure(sig, 1, 4);
  M.set(2, 0, true, 0, 0);
  auto I = stacked_interpretation(M, names);
  CHECK(models_fo(I, stack));
  int R = I.pred_index("R");
  for (int a = 0; a < I.n(); ++a)
    for (int b = 0; b < I.n(); ++b)
      if (a != b) {
        auto J = I;
        J.set(R, true, a, b);
        CHECK_FALSE(models_fo(J, stack));
      }
}

TEST_CASE("rigidity formula") {
  auto p = RemovalParams::bare(1, StackNames::standard(1));
  p.free_dia_index.emplace_back(fm("(dia * (P x))"), "E_1");
  p.ell = 1;
  CHECK(same_shape(build_rigidity_formula(p), fm("(forall x (forall y (implies (F x y) (iff (E_1 x) (E_1 y)))))")));

  auto q = RemovalParams::bare(1, StackNames::standard(1));
  auto I = FOInterpretation::make({"a"}, {{kChainPred, 2}});
  CHECK(models_fo(I, build_rigidity_formula(q)));

  Signature sig;
  sig.add_predicate("E_1", 1);
  auto M = blank_structure(sig, 2, 2);
  M.set(0, 0, true, 1);
  M.set(1, 0, true, 1);
  CHECK(models_fo(stacked_interpretation(M, p.names()), build_rigidity_formula(p)));
  M.set(1, 0, false, 1);
  CHECK_FALSE(models_fo(stacked_interpretation(M, p.names()), build_rigidity_formula(p)));
}

TEST_CASE("translation shapes") {
  F e = running_example();
  auto p = with_layers(compute_params(e), 2, e);
  std::string E1 = p.free_dia_index.at(0).second, E2 = p.free_dia_index.at(1).second;
  F agree = mk_and(mk_iff(mk_atom(E1, {var("x")}), mk_atom(E1, {var("y")})),
                   mk_iff(mk_atom(E2, {var("x")}), mk_atom(E2, {var("y")})));
  F want = mk_exists("y", mk_and(mk_eq(var("x"), var("y")), mk_forall("x", mk_implies(agree, fm("(Good x)")))));
  CHECK(same_shape(tr(fm("(box * (Good x))"), p), want));
  CHECK(equal(etype_agreement(p), agree));

  auto p0 = compute_params(fm("(exists=1 x (P x))"));
  REQUIRE(p0.m == 0);
  CHECK(same_shape(tr(fm("(exists=1 x (P x))"), p0), mk_count(Cmp::Eq, 1, "x", mk_and(mk_true(), fm("(P x)")))));
  CHECK(same_shape(translate_tr(fm("(exists x (P x))"), p0),
                   mk_forall("x", mk_forall("y", mk_implies(mk_eq(var("x"), var("y")),
                                                            mk_exists("x", mk_and(mk_true(), fm("(P x)"))))))));
}

TEST_CASE("closure truth matches the layered translation") {
  F f = fm("(and (exists x (dia * (P x))) (forall x (implies (dia * (not (P x))) (exists y (R x y)))))");
  auto parts = remove_standpoints_parts(f);
  const auto& p = parts.params;
  REQUIRE(p.m == layer_bits(dia_sets(f).dia.size()));
  Rng rng(17);
  Signature sig = signature_of(f);
  for (const auto& e : p.e_preds()) sig.add_predicate(e, 1);
  for (int k = 0; k < 150; ++k) {
    auto M = random_structure(rng, sig, 1 + k % 2, 1 << p.m);
    for (const auto& e : p.e_preds()) {
      int q = M.pred_index(e);
      for (int w = 1; w < M.num_worlds(); ++w) M.ext[w][q] = M.ext[0][q];
    }
    CHECK(models(permutational_closure(M, p.e_preds()), f) ==
          models_fo(stacked_interpretation(M, p.names()), parts.trans));
  }
}

TEST_CASE("standpoint removal end to end") {
  F plain = fm("(forall x (exists y (and (R x y) (not (R y x)))))");
  CHECK(bounded_sat(plain, 3, 1).has_value() == bounded_sat_fo(remove_standpoints(plain), 3).has_value());

  F one = fm("(dia * (exists x (P x)))");
  auto parts = remove_standpoints_parts(one);
  auto M = bounded_sat(one, 1, 1);
  REQUIRE(M);
  auto S = pad_precisifications(witness_selection(*M, one), 1 << parts.params.m);
  auto I = stacked_interpretation(S, parts.params.names());
  CHECK(I.n() == 2);
  CHECK(models_fo(I, parts.combined));

  F bad = fm("(and (box * (forall x (P x))) (dia * (exists x (not (P x)))))");
  CHECK_FALSE(bounded_sat_fo(remove_standpoints(bad), 6).has_value());
}

TEST_CASE("removal output is plain and two-variable") {
  for (const auto& e : frugal_corpus(7)) {
    CAPTURE(e.name);
    F out = remove_standpoints(e.formula);
    auto r = fragment_report(out);
    CHECK_FALSE(has_dia(out));
    CHECK(r.is_c2);
    CHECK(is_sentence(out));
  }
  CHECK_THROWS_AS(remove_standpoints(fm("(dia s (exists x (P x)))")), Error);
}

TEST_CASE("normalization") {
  CHECK(equal(normalize(fm("(not (not (P x)))")), fm("(P x)")));
  CHECK(equal(normalize(fm("(exists<=0 x (P x))")), fm("(exists=0 x (P x))")));
  CHECK(equal(normalize(mk_and(mk_true(), fm("(P x)"))), fm("(P x)")));
  CHECK(equal(normalize(fm("(not (exists x (P x)))")), fm("(exists=0 x (P x))")));
}
