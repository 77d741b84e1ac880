#include "spc/dl.hpp"

#include <algorithm>
#include <functional>

#include "spc/semantics.hpp"

namespace spc {

namespace {

template <class T>
std::shared_ptr<const T> share(T v) {
  return std::make_shared<const T>(std::move(v));
}

}  // namespace

Role role_name(const std::string& r) { return share(RoleExpr{RoleExpr::Kind::Name, r, nullptr, nullptr}); }
Role role_inv(Role r) { return share(RoleExpr{RoleExpr::Kind::Inverse, "", std::move(r), nullptr}); }
Role role_not(Role r) { return share(RoleExpr{RoleExpr::Kind::Not, "", std::move(r), nullptr}); }
Role role_and(Role a, Role b) {
  return share(RoleExpr{RoleExpr::Kind::And, "", std::move(a), std::move(b)});
}
Role role_or(Role a, Role b) {
  return share(RoleExpr{RoleExpr::Kind::Or, "", std::move(a), std::move(b)});
}

bool role_equal(const Role& a, const Role& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind || a->name != b->name) return false;
  return role_equal(a->a, b->a) && role_equal(a->b, b->b);
}

namespace {

Concept mk_c(ConceptExpr::Kind k) {
  ConceptExpr c;
  c.kind = k;
  return share(std::move(c));
}

Concept mk_c(ConceptExpr::Kind k, Concept a, Concept b = nullptr) {
  ConceptExpr c;
  c.kind = k;
  c.a = std::move(a);
  c.b = std::move(b);
  return share(std::move(c));
}

Concept mk_c_role(ConceptExpr::Kind k, unsigned n, Role r, Concept a) {
  ConceptExpr c;
  c.kind = k;
  c.n = n;
  c.role = std::move(r);
  c.a = std::move(a);
  return share(std::move(c));
}

Concept mk_c_named(ConceptExpr::Kind k, const std::string& name) {
  ConceptExpr c;
  c.kind = k;
  c.name = name;
  return share(std::move(c));
}

Concept mk_c_modal(ConceptExpr::Kind k, SpExpr e, Concept a) {
  ConceptExpr c;
  c.kind = k;
  c.sp = std::move(e);
  c.a = std::move(a);
  return share(std::move(c));
}

}  // namespace

using CK = ConceptExpr::Kind;
using SK = DLSentenceNode::Kind;
using RK = RoleExpr::Kind;

Concept c_top() { return mk_c(CK::Top); }
Concept c_bot() { return mk_c(CK::Bot); }
Concept c_atomic(const std::string& a) { return mk_c_named(CK::Atomic, a); }
Concept c_nominal(const std::string& o) { return mk_c_named(CK::Nominal, o); }
Concept c_not(Concept c) { return mk_c(CK::Not, std::move(c)); }
Concept c_and(Concept a, Concept b) { return mk_c(CK::And, std::move(a), std::move(b)); }
Concept c_or(Concept a, Concept b) { return mk_c(CK::Or, std::move(a), std::move(b)); }
Concept c_atleast(unsigned n, Role r, Concept c) { return mk_c_role(CK::AtLeast, n, std::move(r), std::move(c)); }
Concept c_atmost(unsigned n, Role r, Concept c) { return mk_c_role(CK::AtMost, n, std::move(r), std::move(c)); }
Concept c_exists(Role r, Concept c) { return c_atleast(1, std::move(r), std::move(c)); }
Concept c_forall(Role r, Concept c) { return mk_c_role(CK::Forall, 0, std::move(r), std::move(c)); }
Concept c_self(Role r) { return mk_c_role(CK::Self, 0, std::move(r), nullptr); }
Concept c_dia(SpExpr e, Concept c) { return mk_c_modal(CK::Dia, std::move(e), std::move(c)); }
Concept c_box(SpExpr e, Concept c) { return mk_c_modal(CK::Box, std::move(e), std::move(c)); }

bool concept_equal(const Concept& a, const Concept& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind || a->name != b->name || a->n != b->n) return false;
  if (!role_equal(a->role, b->role)) return false;
  if ((a->sp || b->sp) && (!a->sp || !b->sp || !sp_equal(a->sp, b->sp))) return false;
  return concept_equal(a->a, b->a) && concept_equal(a->b, b->b);
}

int concept_depth(const Concept& c) {
  switch (c->kind) {
    case CK::Top:
    case CK::Bot:
    case CK::Atomic:
    case CK::Nominal:
    case CK::Self:
      return 0;
    case CK::Not:
      return concept_depth(c->a);
    case CK::And:
    case CK::Or:
      return std::max(concept_depth(c->a), concept_depth(c->b));
    default:
      return 1 + concept_depth(c->a);
  }
}

namespace {

DL mk_s(SK k, DL a = nullptr, DL b = nullptr) {
  DLSentenceNode s;
  s.kind = k;
  s.a = std::move(a);
  s.b = std::move(b);
  return share(std::move(s));
}

}  // namespace

DL s_gci(Concept c, Concept d) {
  DLSentenceNode s;
  s.kind = SK::GCI;
  s.lhs = std::move(c);
  s.rhs = std::move(d);
  return share(std::move(s));
}

DL s_ria(std::vector<Role> chain, const std::string& head) {
  if (chain.empty()) throw Error("empty role chain");
  DLSentenceNode s;
  s.kind = SK::RIA;
  s.chain = std::move(chain);
  s.head = head;
  return share(std::move(s));
}

DL s_not(DL a) { return mk_s(SK::Not, std::move(a)); }
DL s_and(DL a, DL b) { return mk_s(SK::And, std::move(a), std::move(b)); }
DL s_or(DL a, DL b) { return mk_s(SK::Or, std::move(a), std::move(b)); }

DL s_dia(SpExpr e, DL a) {
  DLSentenceNode s;
  s.kind = SK::Dia;
  s.sp = std::move(e);
  s.a = std::move(a);
  return share(std::move(s));
}

DL s_box(SpExpr e, DL a) {
  DLSentenceNode s;
  s.kind = SK::Box;
  s.sp = std::move(e);
  s.a = std::move(a);
  return share(std::move(s));
}

DL s_func(const std::string& role) {
  return s_gci(c_top(), c_not(c_atleast(2, role_name(role), c_top())));
}

DL s_conj(const std::vector<DL>& parts) {
  if (parts.empty()) throw Error("empty conjunction of DL sentences");
  DL out = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) out = s_and(parts[i], out);
  return out;
}

bool dl_equal(const DL& a, const DL& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind || a->head != b->head) return false;
  if (!concept_equal(a->lhs, b->lhs) || !concept_equal(a->rhs, b->rhs)) return false;
  if (a->chain.size() != b->chain.size()) return false;
  for (std::size_t i = 0; i < a->chain.size(); ++i)
    if (!role_equal(a->chain[i], b->chain[i])) return false;
  if ((a->sp || b->sp) && (!a->sp || !b->sp || !sp_equal(a->sp, b->sp))) return false;
  return dl_equal(a->a, b->a) && dl_equal(a->b, b->b);
}

namespace {

void role_sig(const Role& r, Signature& sig) {
  if (r->kind == RK::Name) {
    sig.add_predicate(r->name, 2);
    return;
  }
  role_sig(r->a, sig);
  if (r->b) role_sig(r->b, sig);
}

void concept_sig(const Concept& c, Signature& sig) {
  switch (c->kind) {
    case CK::Atomic:
      sig.add_predicate(c->name, 1);
      return;
    case CK::Nominal:
      sig.constants.insert(c->name);
      return;
    case CK::Dia:
    case CK::Box:
      sp_symbols(c->sp, sig.standpoints);
      break;
    default:
      break;
  }
  if (c->role) role_sig(c->role, sig);
  if (c->a) concept_sig(c->a, sig);
  if (c->b) concept_sig(c->b, sig);
}

void role_name_set(const Role& r, std::set<std::string>& out) {
  if (r->kind == RK::Name) {
    out.insert(r->name);
    return;
  }
  role_name_set(r->a, out);
  if (r->b) role_name_set(r->b, out);
}

void concept_roles(const Concept& c, std::set<std::string>& out) {
  if (c->role) role_name_set(c->role, out);
  if (c->a) concept_roles(c->a, out);
  if (c->b) concept_roles(c->b, out);
}

}  // namespace

Signature dl_signature(const DL& s) {
  Signature sig;
  switch (s->kind) {
    case SK::GCI:
      concept_sig(s->lhs, sig);
      concept_sig(s->rhs, sig);
      break;
    case SK::RIA:
      for (const auto& r : s->chain) role_sig(r, sig);
      sig.add_predicate(s->head, 2);
      break;
    case SK::Dia:
    case SK::Box:
      sp_symbols(s->sp, sig.standpoints);
      sig.merge(dl_signature(s->a));
      break;
    default:
      sig.merge(dl_signature(s->a));
      if (s->b) sig.merge(dl_signature(s->b));
  }
  return sig;
}

std::set<std::string> role_names(const DL& s) {
  std::set<std::string> out;
  switch (s->kind) {
    case SK::GCI:
      concept_roles(s->lhs, out);
      concept_roles(s->rhs, out);
      break;
    case SK::RIA:
      for (const auto& r : s->chain) role_name_set(r, out);
      out.insert(s->head);
      break;
    default:
      for (const auto& part : {s->a, s->b})
        if (part) {
          auto sub = role_names(part);
          out.insert(sub.begin(), sub.end());
        }
  }
  return out;
}

// ---------------------------------------------------------------------------
// role order

RoleOrder::RoleOrder(const DLHeader& h) : nonsimple_(h.nonsimple) {
  for (const auto& [r, s] : h.order) less_.insert({r, s});
  close();
}

void RoleOrder::close() {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::string, std::string>> add;
    for (const auto& [a, b] : less_)
      for (const auto& [c, d] : less_)
        if (b == c && !less_.count({a, d})) add.push_back({a, d});
    for (auto& p : add) changed |= less_.insert(p).second;
  }
  for (const auto& [a, b] : less_)
    if (a == b) throw Error("role order is not strict: " + a + " precedes itself");
}

void RoleOrder::add_nonsimple(const std::string& r) { nonsimple_.insert(r); }

void RoleOrder::add(const std::string& r, const std::string& s) {
  less_.insert({r, s});
  close();
}

bool RoleOrder::simple(const Role& r) const {
  if (r->kind == RK::Name) return simple(r->name);
  if (!simple(r->a)) return false;
  return !r->b || simple(r->b);
}

bool RoleOrder::precedes(const std::string& r, const std::string& s) const {
  if (simple(r) && !simple(s)) return true;
  return less_.count({r, s}) > 0;
}

bool RoleOrder::precedes(const Role& r, const std::string& s) const {
  if (r->kind == RK::Name) return precedes(r->name, s);
  if (r->kind == RK::Inverse && r->a->kind == RK::Name) return precedes(r->a->name, s);
  return simple(r) && !simple(s);
}

namespace {

void check_role_simple(const Role& r, const RoleOrder& ord, bool restricted) {
  bool boolean = r->kind == RK::Not || r->kind == RK::And || r->kind == RK::Or;
  if ((restricted || boolean) && !ord.simple(r))
    throw Error("non-simple role in restricted position: " + print_role(r));
}

void check_concept(const Concept& c, const RoleOrder& ord) {
  if (c->role) {
    bool restricted = c->kind == CK::Self || c->kind == CK::AtMost ||
                      (c->kind == CK::AtLeast && c->n != 1);
    check_role_simple(c->role, ord, restricted);
  }
  if (c->a) check_concept(c->a, ord);
  if (c->b) check_concept(c->b, ord);
}

void check_sentence(const DL& s, const RoleOrder& ord) {
  switch (s->kind) {
    case SK::GCI:
      check_concept(s->lhs, ord);
      check_concept(s->rhs, ord);
      return;
    case SK::RIA: {
      for (const auto& r : s->chain) check_role_simple(r, ord, false);
      bool complex = s->chain.size() > 1;
      for (const auto& r : s->chain) complex |= !ord.simple(r);
      if (complex && ord.simple(s->head))
        throw Error("role " + s->head + " heads a complex inclusion and must be declared non-simple");
      return;
    }
    default:
      check_sentence(s->a, ord);
      if (s->b) check_sentence(s->b, ord);
  }
}

}  // namespace

void check_simplicity(const DL& s, const DLHeader& h) {
  if (h.mode != DLMode::SROIQBs) return;
  check_sentence(s, RoleOrder(h));
}

// ---------------------------------------------------------------------------
// translation

F rtrans(const std::string& z, const std::string& z2, const Role& r) {
  switch (r->kind) {
    case RK::Name:
      return mk_atom(r->name, {var(z), var(z2)});
    case RK::Inverse:
      return rtrans(z2, z, r->a);
    case RK::Not:
      return mk_not(rtrans(z, z2, r->a));
    case RK::And:
      return mk_and(rtrans(z, z2, r->a), rtrans(z, z2, r->b));
    case RK::Or:
      return mk_or(rtrans(z, z2, r->a), rtrans(z, z2, r->b));
  }
  return mk_false();
}

F ctrans(const std::string& z, const Concept& c) {
  const std::string w = z == "x" ? "y" : "x";
  switch (c->kind) {
    case CK::Top:
      return mk_true();
    case CK::Bot:
      return mk_false();
    case CK::Atomic:
      return mk_atom(c->name, {var(z)});
    case CK::Nominal:
      return mk_eq(var(z), cst(c->name));
    case CK::Not:
      return mk_not(ctrans(z, c->a));
    case CK::And:
      return mk_and(ctrans(z, c->a), ctrans(z, c->b));
    case CK::Or:
      return mk_or(ctrans(z, c->a), ctrans(z, c->b));
    case CK::AtLeast:
      return mk_count(Cmp::Ge, c->n, w, mk_and(rtrans(z, w, c->role), ctrans(w, c->a)));
    case CK::AtMost:
      return mk_not(mk_count(Cmp::Ge, c->n + 1, w, mk_and(rtrans(z, w, c->role), ctrans(w, c->a))));
    case CK::Forall:
      return mk_not(mk_count(Cmp::Ge, 1, w, mk_and(rtrans(z, w, c->role), mk_not(ctrans(w, c->a)))));
    case CK::Self:
      return rtrans(z, z, c->role);
    case CK::Dia:
      return mk_dia(c->sp, ctrans(z, c->a));
    case CK::Box:
      return mk_box(c->sp, ctrans(z, c->a));
  }
  return mk_false();
}

F dl_to_fosl(const DL& s, const DLTranslateOptions& opt) {
  switch (s->kind) {
    case SK::GCI:
      return mk_forall("x", mk_implies(ctrans("x", s->lhs), ctrans("x", s->rhs)));
    case SK::RIA: {
      if (s->chain.size() == 1)
        return mk_forall("x", mk_forall("y", mk_implies(rtrans("x", "y", s->chain[0]),
                                                        mk_atom(s->head, {var("x"), var("y")}))));
      if (!opt.allow_chains) throw Error("untranslatable RIA: chain of length " + std::to_string(s->chain.size()));
      const std::size_t k = s->chain.size();
      auto v = [](std::size_t i) { return "x" + std::to_string(i); };
      std::vector<F> links;
      for (std::size_t i = 1; i <= k; ++i) links.push_back(rtrans(v(i - 1), v(i), s->chain[i - 1]));
      F body = mk_implies(conj(links), mk_atom(s->head, {var(v(0)), var(v(k))}));
      for (std::size_t i = k + 1; i-- > 0;) body = mk_forall(v(i), body);
      return body;
    }
    case SK::Not:
      return mk_not(dl_to_fosl(s->a, opt));
    case SK::And:
      return mk_and(dl_to_fosl(s->a, opt), dl_to_fosl(s->b, opt));
    case SK::Or:
      return mk_or(dl_to_fosl(s->a, opt), dl_to_fosl(s->b, opt));
    case SK::Dia:
      return mk_dia(s->sp, dl_to_fosl(s->a, opt));
    case SK::Box:
      return mk_box(s->sp, dl_to_fosl(s->a, opt));
  }
  return mk_false();
}

// ---------------------------------------------------------------------------
// direct semantics

namespace {

int binary_pred(const StandpointStructure& M, const std::string& name) {
  int p = M.pred_index(name);
  if (p < 0) throw Error("predicate not in structure: " + name);
  if (M.arity(p) != 2) throw Error("arity mismatch for " + name);
  return p;
}

bool any_world(const StandpointStructure& M, const SpExpr& e, const std::function<bool(int)>& f);

}  // namespace

bool eval_role(const StandpointStructure& M, int world, int a, int b, const Role& r) {
  switch (r->kind) {
    case RK::Name:
      return M.get(world, binary_pred(M, r->name), a, b);
    case RK::Inverse:
      return eval_role(M, world, b, a, r->a);
    case RK::Not:
      return !eval_role(M, world, a, b, r->a);
    case RK::And:
      return eval_role(M, world, a, b, r->a) && eval_role(M, world, a, b, r->b);
    case RK::Or:
      return eval_role(M, world, a, b, r->a) || eval_role(M, world, a, b, r->b);
  }
  return false;
}

bool eval_dl(const StandpointStructure& M, int world, int elem, const Concept& c) {
  switch (c->kind) {
    case CK::Top:
      return true;
    case CK::Bot:
      return false;
    case CK::Atomic: {
      int p = M.pred_index(c->name);
      if (p < 0) throw Error("predicate not in structure: " + c->name);
      if (M.arity(p) != 1) throw Error("arity mismatch for " + c->name);
      return M.get(world, p, elem);
    }
    case CK::Nominal: {
      auto it = M.consts.find(c->name);
      if (it == M.consts.end()) throw Error("constant not interpreted: #" + c->name);
      return it->second == elem;
    }
    case CK::Not:
      return !eval_dl(M, world, elem, c->a);
    case CK::And:
      return eval_dl(M, world, elem, c->a) && eval_dl(M, world, elem, c->b);
    case CK::Or:
      return eval_dl(M, world, elem, c->a) || eval_dl(M, world, elem, c->b);
    case CK::AtLeast:
    case CK::AtMost: {
      unsigned count = 0;
      for (int d = 0; d < M.n(); ++d)
        if (eval_role(M, world, elem, d, c->role) && eval_dl(M, world, d, c->a)) ++count;
      return c->kind == CK::AtLeast ? count >= c->n : count <= c->n;
    }
    case CK::Forall:
      for (int d = 0; d < M.n(); ++d)
        if (eval_role(M, world, elem, d, c->role) && !eval_dl(M, world, d, c->a)) return false;
      return true;
    case CK::Self:
      return eval_role(M, world, elem, elem, c->role);
    case CK::Dia:
      return any_world(M, c->sp, [&](int w) { return eval_dl(M, w, elem, c->a); });
    case CK::Box:
      return !any_world(M, c->sp, [&](int w) { return !eval_dl(M, w, elem, c->a); });
  }
  return false;
}

namespace {

bool any_world(const StandpointStructure& M, const SpExpr& e, const std::function<bool(int)>& f) {
  auto ws = sigma_of(M, e);
  for (int w = 0; w < M.num_worlds(); ++w)
    if (ws[w] && f(w)) return true;
  return false;
}

}  // namespace

std::vector<uint8_t> chain_pairs(const StandpointStructure& M, int world, const std::vector<Role>& chain) {
  const int n = M.n();
  std::vector<uint8_t> cur(n * n, 0);
  for (int a = 0; a < n; ++a) cur[a * n + a] = 1;
  for (const auto& r : chain) {
    std::vector<uint8_t> next(n * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!cur[a * n + b]) continue;
        for (int c = 0; c < n; ++c)
          if (eval_role(M, world, b, c, r)) next[a * n + c] = 1;
      }
    cur = std::move(next);
  }
  return cur;
}

bool holds_dl(const StandpointStructure& M, int world, const DL& s) {
  switch (s->kind) {
    case SK::GCI:
      for (int d = 0; d < M.n(); ++d)
        if (eval_dl(M, world, d, s->lhs) && !eval_dl(M, world, d, s->rhs)) return false;
      return true;
    case SK::RIA: {
      int p = binary_pred(M, s->head);
      auto rel = chain_pairs(M, world, s->chain);
      for (int a = 0; a < M.n(); ++a)
        for (int b = 0; b < M.n(); ++b)
          if (rel[a * M.n() + b] && !M.get(world, p, a, b)) return false;
      return true;
    }
    case SK::Not:
      return !holds_dl(M, world, s->a);
    case SK::And:
      return holds_dl(M, world, s->a) && holds_dl(M, world, s->b);
    case SK::Or:
      return holds_dl(M, world, s->a) || holds_dl(M, world, s->b);
    case SK::Dia:
      return any_world(M, s->sp, [&](int w) { return holds_dl(M, w, s->a); });
    case SK::Box:
      return !any_world(M, s->sp, [&](int w) { return !holds_dl(M, w, s->a); });
  }
  return false;
}

bool models_dl(const StandpointStructure& M, const DL& s) {
  for (int w = 0; w < M.num_worlds(); ++w)
    if (!holds_dl(M, w, s)) return false;
  return true;
}

std::size_t axiom_count(const DL& s) {
  if (s->kind == SK::And) return axiom_count(s->a) + axiom_count(s->b);
  return 1;
}

}  // namespace spc
