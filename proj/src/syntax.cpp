#include "spc/syntax.hpp"

#include <functional>
#include <tuple>

namespace spc {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t str_hash(const std::string& s) { return std::hash<std::string>{}(s); }

F finish(Formula&& node) {
  std::size_t h = static_cast<std::size_t>(node.kind) * 1315423911u;
  h = mix(h, str_hash(node.pred));
  for (const auto& t : node.terms) h = mix(mix(h, t.is_const), str_hash(t.name));
  h = mix(h, static_cast<std::size_t>(node.cmp));
  h = mix(h, node.n);
  h = mix(h, str_hash(node.var));
  if (node.sp) h = mix(h, node.sp->hash);
  if (node.a) h = mix(h, node.a->hash);
  if (node.b) h = mix(h, node.b->hash);
  node.hash = h;
  return std::make_shared<const Formula>(std::move(node));
}

SpExpr finish_sp(StandpointExpr&& e) {
  std::size_t h = static_cast<std::size_t>(e.kind) * 2654435761u;
  h = mix(h, str_hash(e.name));
  if (e.a) h = mix(h, e.a->hash);
  if (e.b) h = mix(h, e.b->hash);
  e.hash = h;
  return std::make_shared<const StandpointExpr>(std::move(e));
}

}  // namespace

void Signature::add_predicate(const std::string& name, int arity) {
  auto [it, fresh] = predicates.emplace(name, arity);
  if (!fresh && it->second != arity)
    throw Error("arity conflict for predicate " + name + ": " + std::to_string(it->second) +
                " vs " + std::to_string(arity));
}

void Signature::merge(const Signature& other) {
  for (const auto& [p, a] : other.predicates) add_predicate(p, a);
  constants.insert(other.constants.begin(), other.constants.end());
  standpoints.insert(other.standpoints.begin(), other.standpoints.end());
}

std::vector<std::string> Signature::binary_predicates() const {
  std::vector<std::string> out;
  for (const auto& [p, a] : predicates)
    if (a == 2) out.push_back(p);
  return out;
}

std::set<std::string> Signature::all_names() const {
  std::set<std::string> out = constants;
  for (const auto& [p, a] : predicates) out.insert(p);
  out.insert(standpoints.begin(), standpoints.end());
  return out;
}

SpExpr sp_symbol(const std::string& name) {
  return finish_sp({StandpointExpr::Kind::Symbol, name, nullptr, nullptr});
}
SpExpr sp_union(SpExpr a, SpExpr b) {
  return finish_sp({StandpointExpr::Kind::Union, "", std::move(a), std::move(b)});
}
SpExpr sp_inter(SpExpr a, SpExpr b) {
  return finish_sp({StandpointExpr::Kind::Inter, "", std::move(a), std::move(b)});
}
SpExpr sp_diff(SpExpr a, SpExpr b) {
  return finish_sp({StandpointExpr::Kind::Diff, "", std::move(a), std::move(b)});
}

bool sp_equal(const SpExpr& a, const SpExpr& b) {
  if (a == b) return true;
  if (!a || !b || a->hash != b->hash || a->kind != b->kind) return false;
  if (a->kind == StandpointExpr::Kind::Symbol) return a->name == b->name;
  return sp_equal(a->a, b->a) && sp_equal(a->b, b->b);
}

bool is_universal(const SpExpr& e) {
  return e->kind == StandpointExpr::Kind::Symbol && e->name == kUniversal;
}

void sp_symbols(const SpExpr& e, std::set<std::string>& out) {
  if (e->kind == StandpointExpr::Kind::Symbol) {
    out.insert(e->name);
    return;
  }
  sp_symbols(e->a, out);
  sp_symbols(e->b, out);
}

std::size_t sp_size(const SpExpr& e) {
  if (e->kind == StandpointExpr::Kind::Symbol) return 1;
  return 1 + sp_size(e->a) + sp_size(e->b);
}

F mk_true() {
  static const F t = finish({Formula::Kind::True});
  return t;
}
F mk_false() {
  static const F f = finish({Formula::Kind::False});
  return f;
}

F mk_atom(const std::string& pred, std::vector<Term> terms) {
  Formula n{Formula::Kind::Atom};
  n.pred = pred;
  n.terms = std::move(terms);
  return finish(std::move(n));
}

F mk_eq(Term a, Term b) {
  Formula n{Formula::Kind::Eq};
  n.terms = {std::move(a), std::move(b)};
  return finish(std::move(n));
}

F mk_not(F a) {
  Formula n{Formula::Kind::Not};
  n.a = std::move(a);
  return finish(std::move(n));
}

F mk_and(F a, F b) {
  Formula n{Formula::Kind::And};
  n.a = std::move(a);
  n.b = std::move(b);
  return finish(std::move(n));
}

F mk_count(Cmp c, unsigned k, const std::string& v, F body) {
  Formula n{Formula::Kind::Count};
  n.cmp = c;
  n.n = k;
  n.var = v;
  n.a = std::move(body);
  return finish(std::move(n));
}

F mk_dia(SpExpr e, F body) {
  Formula n{Formula::Kind::Dia};
  n.sp = std::move(e);
  n.a = std::move(body);
  return finish(std::move(n));
}

F mk_or(F a, F b) { return mk_not(mk_and(mk_not(std::move(a)), mk_not(std::move(b)))); }
F mk_implies(F a, F b) { return mk_not(mk_and(std::move(a), mk_not(std::move(b)))); }
F mk_iff(F a, F b) { return mk_and(mk_implies(a, b), mk_implies(b, a)); }
F mk_exists(const std::string& v, F body) { return mk_count(Cmp::Ge, 1, v, std::move(body)); }
F mk_forall(const std::string& v, F body) {
  return mk_count(Cmp::Eq, 0, v, mk_not(std::move(body)));
}
F mk_box(SpExpr e, F body) { return mk_not(mk_dia(std::move(e), mk_not(std::move(body)))); }

F conj(const std::vector<F>& fs) {
  if (fs.empty()) return mk_true();
  F acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = mk_and(fs[i], acc);
  return acc;
}

F disj(const std::vector<F>& fs) {
  if (fs.empty()) return mk_false();
  F acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = mk_or(fs[i], acc);
  return acc;
}

bool equal(const F& a, const F& b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::Atom:
      return a->pred == b->pred && a->terms == b->terms;
    case Formula::Kind::Eq:
      return a->terms == b->terms;
    case Formula::Kind::Not:
      return equal(a->a, b->a);
    case Formula::Kind::And:
      return equal(a->a, b->a) && equal(a->b, b->b);
    case Formula::Kind::Count:
      return a->cmp == b->cmp && a->n == b->n && a->var == b->var && equal(a->a, b->a);
    case Formula::Kind::Dia:
      return sp_equal(a->sp, b->sp) && equal(a->a, b->a);
  }
  return false;
}

std::vector<F> subformulas(const F& f) {
  std::vector<F> out;
  FormulaSet seen;
  std::function<void(const F&)> go = [&](const F& g) {
    if (!seen.insert(g).second) return;
    out.push_back(g);
    if (g->a) go(g->a);
    if (g->b) go(g->b);
  };
  go(f);
  return out;
}

namespace {

void collect_free(const F& f, std::set<std::string>& out, std::multiset<std::string>& bound) {
  switch (f->kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::Eq:
      for (const auto& t : f->terms)
        if (!t.is_const && !bound.count(t.name)) out.insert(t.name);
      return;
    case Formula::Kind::Count: {
      auto it = bound.insert(f->var);
      collect_free(f->a, out, bound);
      bound.erase(it);
      return;
    }
    default:
      if (f->a) collect_free(f->a, out, bound);
      if (f->b) collect_free(f->b, out, bound);
  }
}

}  // namespace

std::set<std::string> free_vars(const F& f) {
  std::set<std::string> out;
  std::multiset<std::string> bound;
  collect_free(f, out, bound);
  return out;
}

bool is_sentence(const F& f) { return free_vars(f).empty(); }

FragmentReport fragment_report(const F& f) {
  FragmentReport r;
  r.is_c2 = r.is_monodic = r.is_s5 = r.nullary_free = r.constant_free = true;
  auto subs = subformulas(f);
  r.size = subs.size();
  for (const auto& g : subs) {
    switch (g->kind) {
      case Formula::Kind::Atom:
        if (g->terms.size() > 2) r.is_c2 = false;
        if (g->terms.empty()) r.nullary_free = false;
        [[fallthrough]];
      case Formula::Kind::Eq:
        for (const auto& t : g->terms) {
          if (t.is_const) r.constant_free = false;
          else if (t.name != "x" && t.name != "y") r.is_c2 = false;
        }
        break;
      case Formula::Kind::Count:
        if (g->var != "x" && g->var != "y") r.is_c2 = false;
        break;
      case Formula::Kind::Dia:
        if (free_vars(g->a).size() > 1) r.is_monodic = false;
        if (!is_universal(g->sp)) r.is_s5 = false;
        break;
      default:
        break;
    }
  }
  std::function<void(const F&)> walk = [&](const F& g) {
    if (g->kind == Formula::Kind::Dia) r.sp_size += sp_size(g->sp);
    if (g->a) walk(g->a);
    if (g->b) walk(g->b);
  };
  walk(f);
  r.is_frugal = r.is_c2 && r.is_monodic && r.is_s5 && r.nullary_free && r.constant_free;
  return r;
}

DiaSets dia_sets(const F& f) {
  if (!is_sentence(f)) throw Error("dia_sets: formula has free variables");
  DiaSets out;
  FormulaSet seen;
  std::function<void(const F&)> go = [&](const F& g) {
    if (g->a) go(g->a);
    if (g->b) go(g->b);
    if (g->kind == Formula::Kind::Dia && seen.insert(g).second) {
      out.dia.push_back(g);
      if (free_vars(g->a).size() == 1) out.free_dia.push_back(g);
    }
  };
  go(f);
  return out;
}

Signature signature_of(const F& f) {
  Signature sig;
  std::function<void(const F&)> go = [&](const F& g) {
    switch (g->kind) {
      case Formula::Kind::Atom:
        sig.add_predicate(g->pred, static_cast<int>(g->terms.size()));
        [[fallthrough]];
      case Formula::Kind::Eq:
        for (const auto& t : g->terms)
          if (t.is_const) sig.constants.insert(t.name);
        break;
      case Formula::Kind::Dia:
        sp_symbols(g->sp, sig.standpoints);
        break;
      default:
        break;
    }
    if (g->a) go(g->a);
    if (g->b) go(g->b);
  };
  go(f);
  return sig;
}

int modal_quant_depth(const F& f) {
  int d = 0;
  if (f->a) d = modal_quant_depth(f->a);
  if (f->b) d = std::max(d, modal_quant_depth(f->b));
  if (f->kind == Formula::Kind::Count || f->kind == Formula::Kind::Dia) ++d;
  return d;
}

std::size_t node_count(const F& f) {
  std::size_t n = 1;
  if (f->a) n += node_count(f->a);
  if (f->b) n += node_count(f->b);
  return n;
}

bool has_dia(const F& f) {
  if (f->kind == Formula::Kind::Dia) return true;
  return (f->a && has_dia(f->a)) || (f->b && has_dia(f->b));
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!taken.count(cand)) return cand;
  }
}

}  // namespace spc
