#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "spc/corpus.hpp"
#include "spc/ground.hpp"
#include "spc/removal.hpp"
#include "spc/semantics.hpp"

using namespace spc;

namespace {

StandpointStructure sps(const std::string& text) { return parse_structure(text); }

int elem(const FOInterpretation& I, const std::string& name) {
  auto it = std::find(I.domain.begin(), I.domain.end(), name);
  REQUIRE(it != I.domain.end());
  return static_cast<int>(it - I.domain.begin());
}

StandpointStructure one_pred(int n, int worlds, const std::vector<std::vector<int>>& ext) {
  Signature sig;
  sig.add_predicate("E", 1);
  auto M = blank_structure(sig, n, worlds);
  for (int w = 0; w < worlds; ++w)
    for (int d : ext[w]) M.set(w, 0, true, d);
  return M;
}

}  // namespace

TEST_CASE("evaluation") {
  auto M = sps(R"((structure (preds (P 1)) (domain d0 d1) (worlds p0 p1) (sigma (s p1))
                   (world p0 (P d0)) (world p1 (P d0) (P d1))))");
  CHECK(eval(M, 0, {{"x", 0}}, fm("(P x)")));
  CHECK_FALSE(eval(M, 0, {{"x", 1}}, fm("(P x)")));
  CHECK(eval(M, 0, {{"x", 1}}, fm("(dia s (P x))")));
  CHECK_FALSE(eval(M, 0, {{"x", 1}}, fm("(box * (P x))")));
  CHECK(eval(M, 0, {}, fm("(exists=1 x (P x))")));
  CHECK_FALSE(eval(M, 1, {}, fm("(exists=1 x (P x))")));
  CHECK(eval(M, 1, {}, fm("(exists>=2 x (P x))")));
  CHECK(models(M, fm("(exists x (P x))")));
  CHECK_FALSE(models(M, fm("(forall x (P x))")));
}

TEST_CASE("first-order evaluation") {
  auto I = FOInterpretation::make({"a", "b"}, {{"P", 1}});
  CHECK_FALSE(eval_fo(I, {}, fm("(exists x (P x))")));
  CHECK(eval_fo(I, {{"x", 0}, {"y", 0}}, fm("(= x y)")));
  CHECK_FALSE(eval_fo(I, {{"x", 0}, {"y", 1}}, fm("(= x y)")));
}

TEST_CASE("compiled evaluator matches the reference") {
  Rng rng(11);
  FormulaGen g;
  auto fs = random_formulas(11, 40, g, "f");
  auto sig = Signature{};
  for (const auto& e : fs) sig.merge(signature_of(e.formula));
  for (int k = 0; k < 40; ++k) {
    auto M = random_structure(rng, sig, 1 + k % 3, 1 + k % 2);
    for (const auto& e : fs) {
      Evaluator ev(M, e.formula);
      CHECK(ev.holds_everywhere() == models(M, e.formula));
    }
  }
}

TEST_CASE("type-preserving permutations") {
  CHECK(e_type_permutations(one_pred(3, 1, {{0, 1}}), {"E"}).size() == 2);
  CHECK(e_type_permutations(one_pred(3, 1, {{0}}), {"E"}).size() == 2);
  CHECK(e_type_permutations(one_pred(3, 1, {{}}), {}).size() == 6);

  Signature two;
  two.add_predicate("E", 1);
  two.add_predicate("G", 1);
  auto M = blank_structure(two, 3, 1);
  M.set(0, 0, true, 0);
  M.set(0, 1, true, 1);
  auto ps = e_type_permutations(M, {"E", "G"});
  REQUIRE(ps.size() == 1);
  CHECK(ps[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("permutational closure") {
  auto M = one_pred(3, 2, {{0, 1}, {0, 1}});
  auto C = permutational_closure(M, {"E"});
  CHECK(C.num_worlds() == 4);

  auto single = one_pred(1, 1, {{0}});
  CHECK(isomorphic(permutational_closure(single, {"E"}), single));
}

TEST_CASE("stacked interpretation") {
  Signature sig;
  sig.add_predicate("P", 1);
  sig.add_predicate("R", 2);
  auto M = blank_structure(sig, 2, 2);
  auto I = stacked_interpretation(M, StackNames::standard(1));
  CHECK(I.n() == 4);
  int edges = 0, F = I.pred_index(kChainPred);
  for (int a = 0; a < I.n(); ++a)
    for (int b = 0; b < I.n(); ++b) edges += I.get(F, a, b);
  CHECK(edges == 2);

  auto M4 = blank_structure(sig, 1, 4);
  auto I4 = stacked_interpretation(M4, StackNames::standard(2));
  int top = elem(I4, "d0@3");
  CHECK(I4.get(I4.pred_index(level_pred(0)), top));
  CHECK(I4.get(I4.pred_index(level_pred(1)), top));
  CHECK_FALSE(I4.get(I4.pred_index(level_pred(1)), elem(I4, "d0@1")));

  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    int m = i % 3;
    auto R = random_structure(rng, sig, 1 + i % 3, 1 << m);
    auto S = stacked_interpretation(R, StackNames::standard(m));
    CHECK(models_fo(S, build_stack_formula(RemovalParams::bare(m, StackNames::standard(m)), {"R"})));
    CHECK(isomorphic(extract_structure(S, m), R));
  }
}

TEST_CASE("extraction") {
  Signature sig;
  sig.add_predicate("P", 1);
  Rng rng(9);
  auto M = random_structure(rng, sig, 2, 2);
  auto I = stacked_interpretation(M, StackNames::standard(1));
  auto broken = I;
  int F = broken.pred_index(kChainPred);
  for (auto& bit : broken.ext[F]) bit = 0;
  CHECK_THROWS_AS(extract_structure(broken, 1), Error);

  auto flat = FOInterpretation::make({"a", "b"}, {{"P", 1}});
  flat.set(0, true, 1);
  flat.add_pred(kChainPred, 2);
  auto one = extract_structure(flat, 0);
  CHECK(one.num_worlds() == 1);
  CHECK(one.n() == 2);
  CHECK(one.get(0, one.pred_index("P"), 1));
  CHECK_FALSE(one.get(0, one.pred_index("P"), 0));
}

TEST_CASE("padding precisifications") {
  Rng rng(2);
  Signature sig;
  sig.add_predicate("P", 1);
  sig.add_predicate("R", 2);
  auto M = random_structure(rng, sig, 2, 2);
  CHECK(same_structure(pad_precisifications(M, 2), M));

  auto one = random_structure(rng, sig, 2, 1);
  auto four = pad_precisifications(one, 4);
  REQUIRE(four.num_worlds() == 4);
  for (int w = 1; w < 4; ++w) CHECK(four.ext[w] == four.ext[0]);

  for (const auto& e : frugal_corpus(7)) {
    auto S = random_structure(rng, signature_of(e.formula), 2, 2);
    CHECK(models(S, e.formula) == models(pad_precisifications(S, 4), e.formula));
  }
}

TEST_CASE("witness selection") {
  F plain = fm("(forall x (exists y (R x y)))");
  auto M = bounded_sat(plain, 2, 2);
  REQUIRE(M);
  CHECK(witness_selection(*M, plain).num_worlds() == 1);

  F e = running_example();
  auto W = bounded_sat(e, 3, 3);
  REQUIRE(W);
  auto S = witness_selection(*W, e);
  CHECK(S.num_worlds() <= 3 * 8);
  auto params = compute_params(e);
  for (const auto& p : params.e_preds()) CHECK(is_rigid(S, p));
  CHECK(models(permutational_closure(S, params.e_preds()), e));
}

TEST_CASE("bounded search") {
  auto a = bounded_sat(fm("(dia * (exists x (P x)))"), 3, 3);
  REQUIRE(a);
  CHECK(a->n() == 1);
  CHECK(a->num_worlds() == 1);

  CHECK_FALSE(bounded_sat(fm("(and (box * (forall x (P x))) (dia * (exists x (not (P x)))))"), 3, 3));

  F two = fm("(exists=2 x (P x))");
  CHECK_FALSE(bounded_sat(two, 1, 1));
  auto b = bounded_sat(two, 2, 1);
  REQUIRE(b);
  CHECK(b->n() == 2);

  auto c = bounded_sat_fo(fm("(exists x (P x))"), 3);
  REQUIRE(c);
  CHECK(c->n() == 1);
  CHECK_FALSE(bounded_sat_fo(fm("(and (forall x (P x)) (exists x (not (P x))))"), 4));

  auto st = bounded_sat_fo(build_stack_formula(RemovalParams::bare(1, StackNames::standard(1)), {}), 4);
  REQUIRE(st);
  CHECK(st->n() == 2);
}

TEST_CASE("search returns the canonical least model") {
  std::vector<F> fs = {fm("(exists x (P x))"), fm("(forall x (exists y (R x y)))"),
                       fm("(and (dia * (exists x (P x))) (dia * (forall x (not (P x)))))"),
                       fm("(exists=1 x (dia * (P x)))"), fm("(and (P #a) (not (P #b)))")};
  for (const auto& f : fs) {
    CAPTURE(print_formula(f));
    for (int d = 1; d <= 2; ++d)
      for (int w = 1; w <= 2; ++w) {
        auto s = sat_at_size(f, d, w);
        auto b = brute_force_sat(f, d, w);
        REQUIRE(s.has_value() == b.has_value());
        if (s) CHECK(same_structure(*s, *b));
      }
  }
}

TEST_CASE("rigid predicates") {
  CHECK(is_rigid(one_pred(2, 2, {{0}, {0}}), "E"));
  CHECK_FALSE(is_rigid(one_pred(2, 2, {{0}, {}}), "E"));

  BsatOptions o;
  o.rigid = {"P"};
  CHECK_FALSE(bounded_sat(fm("(exists x (and (dia * (P x)) (dia * (not (P x)))))"), 2, 2, o));
  CHECK(bounded_sat(fm("(exists x (and (dia * (P x)) (dia * (not (P x)))))"), 2, 2));
}

TEST_CASE("search budget") {
  BsatOptions o;
  o.budget = 1;
  CHECK_THROWS_AS(bounded_sat(fm("(and (exists>=3 x (P x)) (forall x (exists y (R x y))))"), 3, 2, o),
                  BudgetExceeded);
}

TEST_CASE("search agrees with brute force over the corpus") {
  for (const auto& e : standard_corpus(7)) {
    CAPTURE(e.name);
    auto sig = signature_of(e.formula);
    for (auto [d, w] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
      std::size_t bits = 0;
      for (const auto& [p, a] : sig.predicates) bits += a == 2 ? d * d : (a == 1 ? d : 1);
      if (bits * w + sig.standpoints.size() * w > 22) continue;
      auto s = sat_at_size(e.formula, d, w);
      auto b = brute_force_sat(e.formula, d, w);
      REQUIRE(s.has_value() == b.has_value());
      if (s) CHECK(same_structure(*s, *b));
    }
  }
}
