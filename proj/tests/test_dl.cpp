#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "spc/corpus.hpp"
#include "spc/dl.hpp"
#include "spc/ground.hpp"
#include "spc/removal.hpp"
#include "spc/semantics.hpp"

using namespace spc;

namespace {

Role R(const char* n) { return role_name(n); }
Concept A(const char* n) { return c_atomic(n); }

bool same_shape(const F& a, const F& b) { return equal(normalize(a), normalize(b)); }

std::optional<StandpointStructure> dl_sat(const DL& s, const DLHeader& h, int d, int w, bool chains) {
  DLTranslateOptions t;
  t.allow_chains = chains;
  BsatOptions o;
  o.rigid = h.rigid;
  return bounded_sat(dl_to_fosl(s, t), d, w, o);
}

}  // namespace

TEST_CASE("role translation") {
  CHECK(equal(rtrans("x", "y", R("R")), fm("(R x y)")));
  CHECK(equal(rtrans("x", "y", role_inv(R("R"))), fm("(R y x)")));
  CHECK(equal(rtrans("x", "x", role_and(R("R"), role_not(R("S")))), fm("(and (R x x) (not (S x x)))")));
}

TEST_CASE("concept translation") {
  CHECK(equal(ctrans("x", c_nominal("o")), fm("(= x #o)")));
  CHECK(same_shape(ctrans("x", c_atleast(2, R("R"), A("A"))), fm("(exists>=2 y (and (R x y) (A y)))")));
  CHECK(equal(ctrans("y", c_self(R("R"))), fm("(R y y)")));
  CHECK(same_shape(ctrans("y", c_exists(R("R"), c_exists(R("R"), A("A")))),
                   fm("(exists x (and (R y x) (exists y (and (R x y) (A y)))))")));
  CHECK(free_vars(ctrans("y", c_exists(R("R"), c_exists(R("R"), A("A"))))) == std::set<std::string>{"y"});
  CHECK(same_shape(ctrans("x", c_dia(sp_symbol("s"), A("A"))), fm("(dia s (A x))")));
}

TEST_CASE("sentence translation") {
  CHECK(same_shape(dl_to_fosl(s_gci(c_top(), c_exists(R("R"), c_top()))),
                   fm("(forall x (implies true (exists y (and (R x y) true))))")));
  CHECK(same_shape(dl_to_fosl(s_dia(sp_symbol("*"), s_gci(A("A"), A("B")))),
                   fm("(dia * (forall x (implies (A x) (B x))))")));
  CHECK(same_shape(dl_to_fosl(parse_dl("(func Point)").sentence),
                   fm("(forall x (implies true (not (exists>=2 y (and (Point x y) true)))))")));
}

TEST_CASE("the tumour axiom is satisfiable") {
  auto doc = parse_dl(
      "(box process (gci (dia tissue Tumour) (and (atleast 1 TriggeredBy Tumour) (atmost 1 TriggeredBy Tumour))))");
  F f = dl_to_fosl(doc.sentence);
  CHECK(fragment_report(f).is_c2);
  CHECK(fragment_report(f).is_monodic);
  CHECK(bounded_sat(f, 2, 2).has_value());
}

TEST_CASE("direct DL evaluation") {
  auto M = parse_structure(R"((structure (preds (A 1) (R 2)) (domain d0 d1) (worlds p0)
                               (const (#o d1)) (world p0 (R d0 d1) (A d1))))");
  CHECK(eval_dl(M, 0, 1, c_nominal("o")));
  CHECK_FALSE(eval_dl(M, 0, 0, c_nominal("o")));
  CHECK(eval_dl(M, 0, 0, c_atleast(1, R("R"), c_top())));
  CHECK_FALSE(eval_dl(M, 0, 0, c_atleast(2, R("R"), c_top())));
  CHECK(eval_dl(M, 0, 1, c_forall(R("R"), c_bot())));
  CHECK(eval_dl(M, 0, 0, c_exists(R("R"), A("A"))));
  CHECK(eval_role(M, 0, 1, 0, role_inv(R("R"))));
  CHECK(holds_dl(M, 0, s_gci(A("A"), c_nominal("o"))));
  CHECK_FALSE(holds_dl(M, 0, s_gci(c_top(), A("A"))));
}

TEST_CASE("direct evaluation agrees with the translation") {
  Rng rng(21);
  ConceptGen g;
  Signature sig;
  sig.add_predicate("A", 1);
  sig.add_predicate("B", 1);
  sig.add_predicate("R", 2);
  sig.add_predicate("S", 2);
  sig.constants.insert("o");
  sig.standpoints.insert("s");
  for (int k = 0; k < 60; ++k) {
    auto M = random_structure(rng, sig, 1 + k % 3, 1 + k % 2);
    for (int c = 0; c < 10; ++c) {
      Concept C = random_concept(rng, 3, g);
      F t = ctrans("x", C);
      for (int w = 0; w < M.num_worlds(); ++w)
        for (int d = 0; d < M.n(); ++d) CHECK(eval_dl(M, w, d, C) == eval(M, w, {{"x", d}}, t));
    }
  }
}

TEST_CASE("negation normal form") {
  DLHeader h;
  auto n = nnf(s_not(s_gci(A("A"), A("B"))), h);
  REQUIRE(n->kind == DLSentenceNode::Kind::GCI);
  CHECK(concept_equal(n->lhs, c_top()));
  REQUIRE(n->rhs->kind == ConceptExpr::Kind::AtLeast);
  CHECK(n->rhs->n == 1);
  CHECK(concept_equal(n->rhs->a, c_and(A("A"), c_not(A("B")))));
  Role u = n->rhs->role;
  REQUIRE(u->kind == RoleExpr::Kind::Or);
  CHECK(role_equal(u, role_or(u->a, role_not(u->a))));

  auto dm = nnf(s_not(s_and(s_gci(A("A"), A("B")), s_gci(A("B"), A("A")))), h);
  CHECK(dm->kind == DLSentenceNode::Kind::Or);

  auto bx = nnf(s_not(s_dia(sp_symbol("s"), s_gci(A("A"), A("B")))), h);
  CHECK(bx->kind == DLSentenceNode::Kind::Box);
  CHECK(is_nnf(bx));

  CHECK(concept_equal(nnf_concept(c_not(c_and(A("A"), c_exists(R("R"), A("B"))))),
                      c_or(c_not(A("A")), c_forall(R("R"), c_not(A("B"))))));
  CHECK(concept_equal(nnf_concept(c_not(c_atleast(2, R("R"), A("A")))), c_atmost(1, R("R"), A("A"))));
  CHECK(concept_equal(nnf_concept(c_not(c_dia(sp_symbol("s"), A("A")))), c_box(sp_symbol("s"), c_not(A("A")))));
}

TEST_CASE("negation normal form preserves truth") {
  Rng rng(4);
  for (const auto& e : dl_corpus(7, 30)) {
    CAPTURE(e.name);
    DLHeader h = e.doc.header;
    DL n = nnf(e.doc.sentence, h);
    CHECK(is_nnf(n));
    Signature sig = dl_signature(e.doc.sentence);
    if (dl_signature(n).all_names() != sig.all_names()) continue;
    for (int k = 0; k < 30; ++k) {
      auto M = random_structure(rng, sig, 1 + k % 3, 1 + k % 2);
      for (const auto& r : e.doc.header.rigid)
        if (int p = M.pred_index(r); p >= 0)
          for (int w = 1; w < M.num_worlds(); ++w) M.ext[w][p] = M.ext[0][p];
      CHECK(models_dl(M, e.doc.sentence) == models_dl(M, n));
    }
  }
}

TEST_CASE("role inclusion separation") {
  auto doc = parse_dl("(mode sroiqb-s)\n(declare-nonsimple R)\n(ria (R R) R)\n(gci A (exists R B))");
  DLHeader h = doc.header;
  DLNames names = DLNames::from(doc.sentence, h);
  auto sep = separate_rias(nnf(doc.sentence, h, names), h, names);
  REQUIRE(sep.lowered.count("R") == 1);
  REQUIRE(sep.switches.size() == 1);
  const std::string low = sep.lowered.at("R"), sw = sep.switches[0];
  bool hierarchy = false, chain = false;
  for (const auto& r : sep.ria_part) {
    if (r.head != "R") continue;
    if (r.chain.size() == 1 && role_equal(r.chain[0], R(low.c_str()))) hierarchy = true;
    if (r.chain.size() == 3 && role_equal(r.chain[0], R(sw.c_str())) && role_equal(r.chain[1], R(low.c_str())) &&
        role_equal(r.chain[2], R("R")))
      chain = true;
  }
  CHECK(hierarchy);
  CHECK(chain);

  auto none = parse_dl("(mode sroiqb-s)\n(declare-nonsimple R)\n(gci A (exists R B))");
  DLHeader h2 = none.header;
  auto s2 = separate_rias(nnf(none.sentence, h2), h2);
  CHECK(s2.switches.empty());
  REQUIRE(s2.ria_part.size() == 1);
  CHECK(s2.ria_part[0].chain.size() == 1);

  auto modal = parse_dl("(mode sroiqb-s)\n(declare-nonsimple R)\n(dia s (ria (S) R))");
  DLHeader h3 = modal.header;
  auto s3 = separate_rias(nnf(modal.sentence, h3), h3);
  REQUIRE(s3.switches.size() == 1);
  CHECK(dl_equal(s3.rest, s_dia(sp_symbol("s"), s_gci(c_top(), c_self(R(s3.switches[0].c_str()))))));
}

TEST_CASE("completion recipe and least closure") {
  auto doc = parse_dl("(mode sroiqb-s)\n(declare-nonsimple T)\n(ria (T T) T)\n(gci A (exists T B))\n(gci B (exists T A))");
  DLHeader h = doc.header;
  DLNames names = DLNames::from(doc.sentence, h);
  DL n = nnf(doc.sentence, h, names);
  auto sep = separate_rias(n, h, names);
  DL sep_conj = ria_conj(sep.ria_part, sep.rest);

  auto M = dl_sat(n, h, 3, 1, true);
  REQUIRE(M);
  CHECK(models_dl(extend_for_separation(*M, sep), sep_conj));

  auto W = dl_sat(sep_conj, h, 3, 1, true);
  REQUIRE(W);
  auto least = close_roles(*W, sep.ria_part, {"T"}, true);
  CHECK(models_dl(least, sep_conj));
  CHECK(models_dl(least, n));
}

TEST_CASE("transitivity compiles into marker concepts") {
  for (const char* text :
       {"(mode sroiqb-s)\n(declare-nonsimple T)\n(ria (T T) T)\n(gci A (forall T B))\n(gci Top (exists T A))",
        "(mode sroiqb-s)\n(declare-nonsimple T)\n(ria (T T) T)\n(ria (S) T)\n(gci A (forall T B))\n(gci A (exists S (exists S (not B))))",
        "(mode sroiqb-s)\n(declare-nonsimple T)\n(ria (T T) T)\n(gci A (forall T B))\n(gci A (exists T (exists T (not B))))"}) {
    CAPTURE(text);
    auto doc = parse_dl(text);
    DLHeader h = doc.header;
    DLNames names = DLNames::from(doc.sentence, h);
    DL n = nnf(doc.sentence, h, names);
    auto sep = separate_rias(n, h, names);
    DL compiled = compile_sh_rias(sep.ria_part, sep.rest, h, names);
    F out = dl_to_fosl(compiled);
    CHECK(fragment_report(out).is_c2);
    CHECK(dl_sat(doc.sentence, doc.header, 3, 2, true).has_value() == bounded_sat(out, 3, 2).has_value());
  }
}

TEST_CASE("simplicity restrictions") {
  CHECK_THROWS_AS(parse_dl("(mode sroiqb-s)\n(declare-nonsimple T)\n(ria (T T) T)\n(gci A (atleast 2 T B))"), Error);
  CHECK_NOTHROW(parse_dl("(mode sroiqb-s)\n(declare-nonsimple T)\n(ria (T T) T)\n(gci A (exists T B))"));
}

TEST_CASE("pipeline output stays in monodic C2") {
  for (const auto& e : dl_corpus(7, 30)) {
    CAPTURE(e.name);
    auto r = fragment_report(dl_pipeline(e.doc));
    CHECK(r.is_c2);
    CHECK(r.is_monodic);
  }
}

TEST_CASE("tiling gadget") {
  TilingSystem one;
  one.k = 1;
  one.h = one.v = {{1, 1}};
  one.init = {1};
  auto doc = gen_exp_tiling_tbox(one);
  BsatOptions o;
  o.rigid = doc.header.rigid;
  // the grid for one initial tile needs five elements and four worlds
  CHECK_FALSE(bounded_sat(dl_to_fosl(doc.sentence), 4, 3, o).has_value());
  CHECK(bounded_sat(dl_to_fosl(doc.sentence), 5, 4, o).has_value());

  TilingSystem none;
  none.k = 2;
  none.init = {1, 2};
  auto bad = gen_exp_tiling_tbox(none);
  o.rigid = bad.header.rigid;
  CHECK_FALSE(bounded_sat(dl_to_fosl(bad.sentence), 5, 4, o).has_value());

  std::vector<std::size_t> counts;
  for (int n = 1; n <= 4; ++n) {
    TilingSystem t = one;
    t.init.assign(n, 1);
    counts.push_back(axiom_count(gen_exp_tiling_tbox(t).sentence));
  }
  CHECK(counts[1] - counts[0] == counts[2] - counts[1]);
  CHECK(counts[2] - counts[1] == counts[3] - counts[2]);

  auto back = parse_dl(print_dl(doc));
  CHECK(dl_equal(back.sentence, doc.sentence));
}

TEST_CASE("grid gadget") {
  auto g = gen_und_grid_gcis();
  CHECK(axiom_count(g.sentence) == 4);
  CHECK(g.header.rigid.count("E") == 1);
  auto back = parse_dl(print_dl(g));
  CHECK(dl_equal(back.sentence, g.sentence));
  CHECK(back.header == g.header);
}
