#include "spc/frugal.hpp"

#include <sstream>

#include "spc/parser.hpp"

namespace spc {

namespace {

const Term X = var("x");
const Term Y = var("y");

std::set<std::string> taken_by(const F& f) {
  auto t = signature_of(f).all_names();
  t.insert(kUniversal);
  return t;
}

std::string take(const std::string& base, std::set<std::string>& taken) {
  std::string n = fresh_name(base, taken);
  taken.insert(n);
  return n;
}

F trans_e(const SpExpr& e, const std::map<std::string, std::string>& names) {
  switch (e->kind) {
    case StandpointExpr::Kind::Symbol:
      if (e->name == kUniversal) return mk_true();
      return mk_atom(names.at(e->name), {});
    case StandpointExpr::Kind::Union:
      return mk_or(trans_e(e->a, names), trans_e(e->b, names));
    case StandpointExpr::Kind::Inter:
      return mk_and(trans_e(e->a, names), trans_e(e->b, names));
    case StandpointExpr::Kind::Diff:
      return mk_and(trans_e(e->a, names), mk_not(trans_e(e->b, names)));
  }
  return mk_true();
}

// Rebuilds f bottom-up, letting leaf() replace atoms and equalities.
template <class Leaf, class DiaFn>
F rebuild(const F& f, Leaf leaf, DiaFn dia) {
  using K = Formula::Kind;
  switch (f->kind) {
    case K::Atom:
    case K::Eq:
      return leaf(f);
    case K::Not:
      return mk_not(rebuild(f->a, leaf, dia));
    case K::And:
      return mk_and(rebuild(f->a, leaf, dia), rebuild(f->b, leaf, dia));
    case K::Count:
      return mk_count(f->cmp, f->n, f->var, rebuild(f->a, leaf, dia));
    case K::Dia:
      return dia(f, rebuild(f->a, leaf, dia));
    default:
      return f;
  }
}

StandpointStructure drop_pred(const StandpointStructure& M, const std::string& name) {
  int p = M.pred_index(name);
  if (p < 0) return M;
  StandpointStructure out = M;
  out.preds.erase(out.preds.begin() + p);
  for (auto& row : out.ext) row.erase(row.begin() + p);
  return out;
}

int ensure_pred(StandpointStructure& M, const std::string& name, int arity) {
  int p = M.pred_index(name);
  return p >= 0 ? p : M.add_pred(name, arity);
}

}  // namespace

void RenameLedger::merge(const RenameLedger& o) {
  standpoint_to_nullary.insert(o.standpoint_to_nullary.begin(), o.standpoint_to_nullary.end());
  nullary_to_unary.insert(o.nullary_to_unary.begin(), o.nullary_to_unary.end());
  constant_to_unary.insert(o.constant_to_unary.begin(), o.constant_to_unary.end());
}

std::string RenameLedger::to_text() const {
  std::ostringstream out;
  out << "; introduced names\n";
  for (const auto& [s, n] : standpoint_to_nullary) out << "(standpoint " << s << " " << n << ")\n";
  for (const auto& [s, n] : nullary_to_unary) out << "(nullary " << s << " " << n << ")\n";
  for (const auto& [s, n] : constant_to_unary) out << "(constant #" << s << " " << n << ")\n";
  return out.str();
}

RenameLedger RenameLedger::from_text(const std::string& text) {
  RenameLedger l;
  for (const auto& s : read_sexps(text)) {
    if (!s.is_list || s.items.size() != 3 || s.items[0].is_list || s.items[1].is_list ||
        s.items[2].is_list)
      throw ParseError(s.span, "malformed ledger entry", {"(kind old new)"});
    const std::string& kind = s.items[0].atom;
    std::string from = s.items[1].atom;
    const std::string& to = s.items[2].atom;
    if (kind == "standpoint") {
      l.standpoint_to_nullary[from] = to;
    } else if (kind == "nullary") {
      l.nullary_to_unary[from] = to;
    } else if (kind == "constant") {
      if (from.empty() || from[0] != '#') throw ParseError(s.items[1].span, "expected a constant");
      l.constant_to_unary[from.substr(1)] = to;
    } else {
      throw ParseError(s.items[0].span, "unknown ledger entry", {"standpoint", "nullary", "constant"});
    }
  }
  return l;
}

Transformed to_s5(const F& f) {
  Transformed out;
  auto taken = taken_by(f);
  for (const auto& s : signature_of(f).standpoints)
    if (s != kUniversal) out.ledger.standpoint_to_nullary[s] = take("_S_" + s, taken);
  const auto& names = out.ledger.standpoint_to_nullary;
  out.formula = rebuild(
      f, [](const F& a) { return a; },
      [&](const F& d, F body) {
        F guard = trans_e(d->sp, names);
        if (guard->kind == Formula::Kind::True) return mk_dia(sp_symbol(kUniversal), body);
        return mk_dia(sp_symbol(kUniversal), mk_and(guard, body));
      });
  return out;
}

Transformed remove_nullary(const F& f) {
  Transformed out;
  auto taken = taken_by(f);
  for (const auto& [p, a] : signature_of(f).predicates)
    if (a == 0) out.ledger.nullary_to_unary[p] = take("_N_" + p, taken);
  const auto& names = out.ledger.nullary_to_unary;
  out.formula = rebuild(
      f,
      [&](const F& a) {
        if (a->kind == Formula::Kind::Atom && a->terms.empty())
          return mk_forall("x", mk_atom(names.at(a->pred), {X}));
        return a;
      },
      [](const F& d, F body) { return mk_dia(d->sp, body); });
  return out;
}

Transformed remove_constants(const F& f) {
  if (!fragment_report(f).is_c2) throw Error("constant removal needs a C2 formula");
  Transformed out;
  auto taken = taken_by(f);
  for (const auto& c : signature_of(f).constants)
    out.ledger.constant_to_unary[c] = take("_A_" + c, taken);
  const auto& names = out.ledger.constant_to_unary;
  auto pa = [&](const Term& c, const Term& v) { return mk_atom(names.at(c.name), {v}); };
  auto other = [](const Term& v) { return v.name == "x" ? Y : X; };
  auto leaf = [&](const F& a) -> F {
    const auto& t = a->terms;
    if (a->kind == Formula::Kind::Eq) {
      if (t[0].is_const && t[1].is_const)
        return mk_exists("x", mk_and(pa(t[0], X), pa(t[1], X)));
      if (t[0].is_const) return pa(t[0], t[1]);
      if (t[1].is_const) return pa(t[1], t[0]);
      return a;
    }
    if (t.size() == 1) {
      if (!t[0].is_const) return a;
      return mk_exists("x", mk_and(pa(t[0], X), mk_atom(a->pred, {X})));
    }
    if (t.size() == 2) {
      bool c0 = t[0].is_const, c1 = t[1].is_const;
      if (!c0 && !c1) return a;
      if (c0 && c1) {
        if (t[0] == t[1]) return mk_exists("x", mk_and(pa(t[0], X), mk_atom(a->pred, {X, X})));
        return mk_exists("x", mk_exists("y", conj({pa(t[0], X), pa(t[1], Y), mk_atom(a->pred, {X, Y})})));
      }
      const Term& v = c0 ? t[1] : t[0];
      const Term& c = c0 ? t[0] : t[1];
      Term z = other(v);
      return mk_exists(z.name, mk_and(pa(c, z), c0 ? mk_atom(a->pred, {z, v}) : mk_atom(a->pred, {v, z})));
    }
    return a;
  };
  F body = rebuild(f, leaf, [](const F& d, F b) { return mk_dia(d->sp, b); });
  std::vector<F> consts;
  for (const auto& [c, p] : names) {
    consts.push_back(mk_count(Cmp::Eq, 1, "x", mk_atom(p, {X})));
    consts.push_back(mk_count(Cmp::Eq, 1, "x", mk_box(sp_symbol(kUniversal), mk_atom(p, {X}))));
  }
  out.formula = consts.empty() ? body : mk_and(conj(consts), body);
  return out;
}

Transformed frugalize(const F& f) {
  Transformed a = to_s5(f);
  Transformed b = remove_nullary(a.formula);
  Transformed c = remove_constants(b.formula);
  Transformed out{c.formula, a.ledger};
  out.ledger.merge(b.ledger);
  out.ledger.merge(c.ledger);
  return out;
}

StandpointStructure s5_model_forward(const StandpointStructure& M, const RenameLedger& l) {
  StandpointStructure out = M;
  for (const auto& [s, n] : l.standpoint_to_nullary) {
    int p = ensure_pred(out, n, 0);
    for (int w = 0; w < out.num_worlds(); ++w) out.set(w, p, M.in_sigma(s, w));
    out.sigma.erase(s);
  }
  return out;
}

StandpointStructure s5_model_backward(const StandpointStructure& M, const RenameLedger& l) {
  StandpointStructure out = M;
  for (const auto& [s, n] : l.standpoint_to_nullary) {
    int p = M.pred_index(n);
    std::vector<bool> row(M.num_worlds(), false);
    if (p >= 0)
      for (int w = 0; w < M.num_worlds(); ++w) row[w] = M.get(w, p);
    out.sigma[s] = row;
    out = drop_pred(out, n);
  }
  return out;
}

StandpointStructure nullary_model_forward(const StandpointStructure& M, const RenameLedger& l) {
  StandpointStructure out = M;
  for (const auto& [nul, un] : l.nullary_to_unary) {
    int src = M.pred_index(nul);
    int p = ensure_pred(out, un, 1);
    for (int w = 0; w < out.num_worlds(); ++w)
      for (int d = 0; d < out.n(); ++d) out.set(w, p, src >= 0 && M.get(w, src), d);
    out = drop_pred(out, nul);
  }
  return out;
}

StandpointStructure nullary_model_backward(const StandpointStructure& M, const RenameLedger& l) {
  StandpointStructure out = M;
  for (const auto& [nul, un] : l.nullary_to_unary) {
    int src = M.pred_index(un);
    int p = ensure_pred(out, nul, 0);
    for (int w = 0; w < out.num_worlds(); ++w) {
      bool all = src >= 0;
      for (int d = 0; d < M.n() && all; ++d) all = M.get(w, src, d);
      out.set(w, p, all);
    }
    out = drop_pred(out, un);
  }
  return out;
}

StandpointStructure constant_model_forward(const StandpointStructure& M, const RenameLedger& l) {
  StandpointStructure out = M;
  for (const auto& [c, un] : l.constant_to_unary) {
    auto it = M.consts.find(c);
    if (it == M.consts.end()) throw Error("constant not interpreted: #" + c);
    int p = ensure_pred(out, un, 1);
    for (int w = 0; w < out.num_worlds(); ++w)
      for (int d = 0; d < out.n(); ++d) out.set(w, p, d == it->second, d);
    out.consts.erase(c);
  }
  return out;
}

StandpointStructure constant_model_backward(const StandpointStructure& M, const RenameLedger& l) {
  StandpointStructure out = M;
  for (const auto& [c, un] : l.constant_to_unary) {
    int p = M.pred_index(un);
    int found = -1;
    if (p >= 0)
      for (int d = 0; d < M.n() && found < 0; ++d)
        if (M.get(0, p, d)) found = d;
    if (found < 0) throw Error("no element carries the constant predicate " + un);
    out.consts[c] = found;
    out = drop_pred(out, un);
  }
  return out;
}

StandpointStructure frugal_model_forward(const StandpointStructure& M, const RenameLedger& l) {
  return constant_model_forward(nullary_model_forward(s5_model_forward(M, l), l), l);
}

StandpointStructure frugal_model_backward(const StandpointStructure& M, const RenameLedger& l) {
  return s5_model_backward(nullary_model_backward(constant_model_backward(M, l), l), l);
}

}  // namespace spc
