#include "spc/removal.hpp"

#include <set>

namespace spc {

namespace {

const Term X = var("x");
const Term Y = var("y");

F unary(const std::string& p, const Term& t) { return mk_atom(p, {t}); }

std::set<std::string> taken_names(const F& f) {
  auto names = signature_of(f).all_names();
  names.insert(kUniversal);
  return names;
}

std::vector<std::string> fresh_levels(int m, std::set<std::string>& taken) {
  std::vector<std::string> out;
  for (int j = 0; j < m; ++j) {
    out.push_back(fresh_name(level_pred(j), taken));
    taken.insert(out.back());
  }
  return out;
}

}  // namespace

std::vector<std::string> RemovalParams::e_preds() const {
  std::vector<std::string> out;
  for (const auto& [d, name] : free_dia_index) out.push_back(name);
  return out;
}

RemovalParams RemovalParams::bare(int m, const StackNames& names) {
  RemovalParams p;
  p.m = m;
  p.level_preds = names.levels;
  p.chain_pred = names.chain;
  return p;
}

int layer_bits(std::size_t d) {
  if (d == 0) return 0;
  int lg = 0;
  while ((std::size_t{1} << lg) < d) ++lg;
  // d + log2 d is an integer only when d is a power of two, so the ceiling is d + ceil(log2 d)
  return static_cast<int>(d) + lg;
}

RemovalParams compute_params(const F& f) {
  if (!is_sentence(f) || !fragment_report(f).is_frugal) throw Error("not frugal");
  auto ds = dia_sets(f);
  auto taken = taken_names(f);
  RemovalParams p;
  p.chain_pred = fresh_name(kChainPred, taken);
  taken.insert(p.chain_pred);
  for (std::size_t i = 0; i < ds.free_dia.size(); ++i) {
    std::string name = fresh_name("E_" + std::to_string(i + 1), taken);
    taken.insert(name);
    p.free_dia_index.emplace_back(ds.free_dia[i], name);
  }
  p.ell = static_cast<int>(p.free_dia_index.size());
  p.m = layer_bits(ds.dia.size());
  p.level_preds = fresh_levels(p.m, taken);
  return p;
}

RemovalParams with_layers(const RemovalParams& p, int m, const F& f) {
  auto taken = taken_names(f);
  taken.insert(p.chain_pred);
  for (const auto& e : p.e_preds()) taken.insert(e);
  RemovalParams q = p;
  q.m = m;
  q.level_preds = fresh_levels(m, taken);
  return q;
}

F level_agreement(const RemovalParams& p) {
  std::vector<F> parts;
  for (const auto& l : p.level_preds) parts.push_back(mk_iff(unary(l, X), unary(l, Y)));
  return conj(parts);
}

F etype_agreement(const RemovalParams& p) {
  std::vector<F> parts;
  for (const auto& e : p.e_preds()) parts.push_back(mk_iff(unary(e, X), unary(e, Y)));
  return conj(parts);
}

F build_stack_formula(const RemovalParams& p, const std::vector<std::string>& binary_preds) {
  const auto& L = p.level_preds;
  F fxy = mk_atom(p.chain_pred, {X, Y});
  F fyx = mk_atom(p.chain_pred, {Y, X});
  std::vector<F> some_zero, all_one, some_one, all_zero;
  for (const auto& l : L) {
    some_zero.push_back(mk_not(unary(l, X)));
    all_one.push_back(unary(l, X));
    some_one.push_back(unary(l, X));
    all_zero.push_back(mk_not(unary(l, X)));
  }
  F f2 = mk_forall("x", mk_implies(conj(all_one), mk_count(Cmp::Eq, 0, "y", fxy)));
  F f4 = mk_forall("x", mk_implies(conj(all_zero), mk_count(Cmp::Eq, 0, "y", fyx)));
  if (p.m == 0) return mk_and(f2, f4);
  F f1 = mk_forall("x", mk_implies(disj(some_zero), mk_count(Cmp::Eq, 1, "y", fxy)));
  F f3 = mk_forall("x", mk_implies(disj(some_one), mk_count(Cmp::Eq, 1, "y", fyx)));
  std::vector<F> counter;
  for (std::size_t j = 0; j < L.size(); ++j) {
    std::vector<F> lower;
    for (std::size_t k = 0; k < j; ++k) lower.push_back(mk_not(unary(L[k], X)));
    counter.push_back(mk_iff(mk_iff(unary(L[j], X), unary(L[j], Y)), disj(lower)));
  }
  F f5 = mk_forall("x", mk_forall("y", mk_implies(fxy, conj(counter))));
  std::vector<F> parts{f1, f2, f3, f4, f5};
  F agree = level_agreement(p);
  for (const auto& b : binary_preds) {
    if (b == p.chain_pred) continue;
    parts.push_back(mk_forall("x", mk_forall("y", mk_implies(mk_atom(b, {X, Y}), agree))));
  }
  return conj(parts);
}

F build_rigidity_formula(const RemovalParams& p) {
  return mk_forall("x", mk_forall("y", mk_implies(mk_atom(p.chain_pred, {X, Y}), etype_agreement(p))));
}

F tr(const F& f, const RemovalParams& p) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Atom:
    case Formula::Kind::Eq:
      return f;
    case Formula::Kind::Not:
      return mk_not(tr(f->a, p));
    case Formula::Kind::And:
      return mk_and(tr(f->a, p), tr(f->b, p));
    case Formula::Kind::Count:
      return mk_count(f->cmp, f->n, f->var, mk_and(level_agreement(p), tr(f->a, p)));
    case Formula::Kind::Dia: {
      if (!is_universal(f->sp)) throw Error("not frugal");
      auto fv = free_vars(f->a);
      std::string nf = fv.count("x") ? "y" : "x";
      std::string mf = nf == "x" ? "y" : "x";
      return mk_forall(nf, mk_implies(mk_eq(X, Y),
                                      mk_exists(mf, mk_and(etype_agreement(p), tr(f->a, p)))));
    }
  }
  return f;
}

F translate_tr(const F& f, const RemovalParams& p) {
  if (!fragment_report(f).is_frugal) throw Error("not frugal");
  return mk_forall("x", mk_forall("y", mk_implies(mk_eq(X, Y), tr(f, p))));
}

RemovalResult remove_standpoints_parts(const F& f) {
  RemovalResult r;
  r.params = compute_params(f);
  r.stack = build_stack_formula(r.params, signature_of(f).binary_predicates());
  r.rigidity = build_rigidity_formula(r.params);
  r.trans = translate_tr(f, r.params);
  r.combined = mk_and(r.stack, mk_and(r.rigidity, r.trans));
  return r;
}

F remove_standpoints(const F& f) { return remove_standpoints_parts(f).combined; }

F normalize(const F& f) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Not: {
      F a = normalize(f->a);
      if (a->kind == K::Not) return a->a;
      if (a->kind == K::True) return mk_false();
      if (a->kind == K::False) return mk_true();
      if (a->kind == K::Count && a->cmp == Cmp::Ge && a->n == 1)
        return mk_count(Cmp::Eq, 0, a->var, a->a);
      if (a->kind == K::Count && a->cmp == Cmp::Eq && a->n == 0)
        return mk_count(Cmp::Ge, 1, a->var, a->a);
      return mk_not(a);
    }
    case K::And: {
      F a = normalize(f->a), b = normalize(f->b);
      if (a->kind == K::False || b->kind == K::False) return mk_false();
      if (a->kind == K::True) return b;
      if (b->kind == K::True) return a;
      return mk_and(a, b);
    }
    case K::Count: {
      F a = normalize(f->a);
      if (f->cmp == Cmp::Le && f->n == 0) return mk_count(Cmp::Eq, 0, f->var, a);
      return mk_count(f->cmp, f->n, f->var, a);
    }
    case K::Dia:
      return mk_dia(f->sp, normalize(f->a));
    default:
      return f;
  }
}

}  // namespace spc
