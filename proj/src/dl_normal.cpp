#include <algorithm>
#include <functional>

#include "spc/dl.hpp"
#include "spc/semantics.hpp"

namespace spc {

namespace {

using CK = ConceptExpr::Kind;
using SK = DLSentenceNode::Kind;
using RK = RoleExpr::Kind;

}  // namespace

std::string DLNames::take(const std::string& base) {
  std::string n = fresh_name(base, taken);
  taken.insert(n);
  return n;
}

std::string DLNames::take_numbered(const std::string& prefix) {
  for (int k = 1;; ++k) {
    std::string n = prefix + std::to_string(k);
    if (!taken.count(n)) {
      taken.insert(n);
      return n;
    }
  }
}

DLNames DLNames::from(const DL& s, const DLHeader& h) {
  DLNames out;
  out.taken = dl_signature(s).all_names();
  out.taken.insert(h.nonsimple.begin(), h.nonsimple.end());
  out.taken.insert(h.rigid.begin(), h.rigid.end());
  for (const auto& [a, b] : h.order) {
    out.taken.insert(a);
    out.taken.insert(b);
  }
  out.taken.insert({"Top", "Bot", kUniversal});
  return out;
}

// ---------------------------------------------------------------------------
// negation normal form

namespace {

Concept neg_concept(const Concept& c);

Concept pos_concept(const Concept& c) {
  switch (c->kind) {
    case CK::Not:
      return neg_concept(c->a);
    case CK::And:
      return c_and(pos_concept(c->a), pos_concept(c->b));
    case CK::Or:
      return c_or(pos_concept(c->a), pos_concept(c->b));
    case CK::AtLeast:
      return c_atleast(c->n, c->role, pos_concept(c->a));
    case CK::AtMost:
      return c_atmost(c->n, c->role, pos_concept(c->a));
    case CK::Forall:
      return c_forall(c->role, pos_concept(c->a));
    case CK::Dia:
      return c_dia(c->sp, pos_concept(c->a));
    case CK::Box:
      return c_box(c->sp, pos_concept(c->a));
    default:
      return c;
  }
}

Concept neg_concept(const Concept& c) {
  switch (c->kind) {
    case CK::Top:
      return c_bot();
    case CK::Bot:
      return c_top();
    case CK::Atomic:
    case CK::Nominal:
    case CK::Self:
      return c_not(c);
    case CK::Not:
      return pos_concept(c->a);
    case CK::And:
      return c_or(neg_concept(c->a), neg_concept(c->b));
    case CK::Or:
      return c_and(neg_concept(c->a), neg_concept(c->b));
    case CK::AtLeast:
      if (c->n == 0) return c_bot();
      if (c->n == 1) return c_forall(c->role, neg_concept(c->a));
      return c_atmost(c->n - 1, c->role, pos_concept(c->a));
    case CK::AtMost:
      return c_atleast(c->n + 1, c->role, pos_concept(c->a));
    case CK::Forall:
      return c_exists(c->role, neg_concept(c->a));
    case CK::Dia:
      return c_box(c->sp, neg_concept(c->a));
    case CK::Box:
      return c_dia(c->sp, neg_concept(c->a));
  }
  return c;
}

// Top ⊑ NNF(not C or D), dropping a Bot disjunct.
DL gci_nnf(const Concept& lhs, const Concept& rhs) {
  Concept l = neg_concept(lhs), r = pos_concept(rhs);
  if (l->kind == CK::Bot) return s_gci(c_top(), r);
  if (r->kind == CK::Bot) return s_gci(c_top(), l);
  return s_gci(c_top(), c_or(l, r));
}

struct NnfState {
  DLNames& names;
  std::function<Role()> universal;
};

DL neg_sentence(const DL& s, NnfState& st);

DL pos_sentence(const DL& s, NnfState& st) {
  switch (s->kind) {
    case SK::GCI:
      return gci_nnf(s->lhs, s->rhs);
    case SK::RIA:
      return s;
    case SK::Not:
      return neg_sentence(s->a, st);
    case SK::And:
      return s_and(pos_sentence(s->a, st), pos_sentence(s->b, st));
    case SK::Or:
      return s_or(pos_sentence(s->a, st), pos_sentence(s->b, st));
    case SK::Dia:
      return s_dia(s->sp, pos_sentence(s->a, st));
    case SK::Box:
      return s_box(s->sp, pos_sentence(s->a, st));
  }
  return s;
}

DL neg_sentence(const DL& s, NnfState& st) {
  switch (s->kind) {
    case SK::GCI:
      return s_gci(c_top(), c_exists(st.universal(), pos_concept(c_and(s->lhs, c_not(s->rhs)))));
    case SK::RIA: {
      // a functional pointer from a fresh individual to the start of a chain whose end
      // is not reached by the head role from that start
      std::string o = st.names.take_numbered("_o");
      std::string f = st.names.take_numbered("_F");
      Concept inner = c_forall(role_inv(role_name(s->head)),
                               c_forall(role_inv(role_name(f)), c_not(c_nominal(o))));
      for (std::size_t i = s->chain.size(); i-- > 0;) inner = c_exists(s->chain[i], inner);
      inner = c_exists(role_name(f), inner);
      return s_and(s_gci(c_top(), c_atmost(1, role_name(f), c_top())), gci_nnf(c_nominal(o), inner));
    }
    case SK::Not:
      return pos_sentence(s->a, st);
    case SK::And:
      return s_or(neg_sentence(s->a, st), neg_sentence(s->b, st));
    case SK::Or:
      return s_and(neg_sentence(s->a, st), neg_sentence(s->b, st));
    case SK::Dia:
      return s_box(s->sp, neg_sentence(s->a, st));
    case SK::Box:
      return s_dia(s->sp, neg_sentence(s->a, st));
  }
  return s;
}

bool concept_in_nnf(const Concept& c) {
  if (c->kind == CK::Not) {
    auto k = c->a->kind;
    return k == CK::Atomic || k == CK::Nominal || k == CK::Self;
  }
  if (c->a && !concept_in_nnf(c->a)) return false;
  return !c->b || concept_in_nnf(c->b);
}

}  // namespace

Concept nnf_concept(const Concept& c) { return pos_concept(c); }

DL nnf(const DL& s, DLHeader& h, DLNames& names) {
  RoleOrder ord(h);
  Role u;
  NnfState st{names, [&]() {
                if (!u) {
                  std::string first;
                  for (const auto& r : role_names(s))
                    if (ord.simple(r)) {
                      first = r;
                      break;
                    }
                  if (first.empty()) first = names.take("_R");
                  u = role_or(role_name(first), role_not(role_name(first)));
                }
                return u;
              }};
  return pos_sentence(s, st);
}

DL nnf(const DL& s, DLHeader& h) {
  DLNames names = DLNames::from(s, h);
  return nnf(s, h, names);
}

bool is_nnf(const DL& s) {
  switch (s->kind) {
    case SK::GCI:
      return concept_in_nnf(s->lhs) && concept_in_nnf(s->rhs);
    case SK::RIA:
      return true;
    case SK::Not:
      return false;
    default:
      return is_nnf(s->a) && (!s->b || is_nnf(s->b));
  }
}

// ---------------------------------------------------------------------------
// separation of role inclusions

namespace {

bool is_named(const Role& r, const std::string& n) { return r->kind == RK::Name && r->name == n; }

const std::string* base_name(const Role& r) {
  if (r->kind == RK::Name) return &r->name;
  if (r->kind == RK::Inverse && r->a->kind == RK::Name) return &r->a->name;
  return nullptr;
}

Role rename_base(const Role& r, const std::map<std::string, std::string>& m) {
  const std::string* b = base_name(r);
  if (!b) return r;
  auto it = m.find(*b);
  if (it == m.end()) return r;
  return r->kind == RK::Name ? role_name(it->second) : role_inv(role_name(it->second));
}

Concept lower_concept(const Concept& c, const std::map<std::string, std::string>& low) {
  switch (c->kind) {
    case CK::Not:
      return c_not(lower_concept(c->a, low));
    case CK::And:
      return c_and(lower_concept(c->a, low), lower_concept(c->b, low));
    case CK::Or:
      return c_or(lower_concept(c->a, low), lower_concept(c->b, low));
    case CK::AtLeast:
      return c_atleast(c->n, rename_base(c->role, low), lower_concept(c->a, low));
    case CK::AtMost:
      return c_atmost(c->n, c->role, lower_concept(c->a, low));
    case CK::Forall:
      return c_forall(c->role, lower_concept(c->a, low));
    case CK::Dia:
      return c_dia(c->sp, lower_concept(c->a, low));
    case CK::Box:
      return c_box(c->sp, lower_concept(c->a, low));
    default:
      return c;
  }
}

std::string ria_text(const RIA& r) { return print_dl_sentence(s_ria(r.chain, r.head)); }

}  // namespace

Separated separate_rias(const DL& s, DLHeader& h, DLNames& names) {
  // heads of proper chains are non-simple whether declared or not
  std::function<void(const DL&)> heads = [&](const DL& t) {
    if (t->kind == SK::RIA) {
      if (t->chain.size() > 1) h.nonsimple.insert(t->head);
      return;
    }
    if (t->a) heads(t->a);
    if (t->b) heads(t->b);
  };
  heads(s);
  RoleOrder ord(h);
  Separated out;
  for (const auto& r : role_names(s))
    if (!ord.simple(r)) out.lowered[r] = names.take("_Lo_" + r);
  for (const auto& [r, low] : out.lowered) {
    h.nonsimple.insert(low);
    h.order.push_back({low, r});
    out.ria_part.push_back({{role_name(low)}, r});
  }
  const auto& low = out.lowered;
  std::function<DL(const DL&)> walk = [&](const DL& t) -> DL {
    switch (t->kind) {
      case SK::GCI:
        return s_gci(lower_concept(t->lhs, low), lower_concept(t->rhs, low));
      case SK::RIA: {
        const std::string& R = t->head;
        const auto& c = t->chain;
        if (ord.simple(R)) {
          if (c.size() == 1 && ord.simple(c[0])) return t;
          throw Error("irregular RIA: " + print_dl_sentence(t));
        }
        std::string sw = names.take_numbered("_Sw");
        Role S = role_name(sw), Rl = role_name(low.at(R)), Rr = role_name(R);
        auto all_precede = [&](std::size_t from, std::size_t to) {
          for (std::size_t i = from; i < to; ++i)
            if (!ord.precedes(c[i], R)) return false;
          return true;
        };
        const std::size_t k = c.size();
        RIA bg;
        if (k == 2 && is_named(c[0], R) && is_named(c[1], R)) {
          bg = {{S, Rl, Rr}, R};
        } else if (k >= 2 && is_named(c[k - 1], R) && all_precede(0, k - 1)) {
          bg.chain.push_back(S);
          bg.chain.insert(bg.chain.end(), c.begin(), c.end() - 1);
          bg.chain.push_back(Rl);
          bg.head = low.at(R);
        } else if (k >= 2 && is_named(c[0], R) && all_precede(1, k)) {
          bg.chain.push_back(Rl);
          bg.chain.insert(bg.chain.end(), c.begin() + 1, c.end());
          bg.chain.push_back(S);
          bg.head = low.at(R);
        } else if (all_precede(0, k)) {
          bg.chain.push_back(S);
          bg.chain.insert(bg.chain.end(), c.begin(), c.end());
          bg.head = low.at(R);
        } else {
          throw Error("irregular RIA: " + print_dl_sentence(t));
        }
        out.ria_part.push_back(bg);
        out.switches.push_back(sw);
        out.originals.push_back({c, R});
        return s_gci(c_top(), c_self(S));
      }
      case SK::Dia:
        return s_dia(t->sp, walk(t->a));
      case SK::Box:
        return s_box(t->sp, walk(t->a));
      case SK::Not:
        return s_not(walk(t->a));
      case SK::And:
        return s_and(walk(t->a), walk(t->b));
      case SK::Or:
        return s_or(walk(t->a), walk(t->b));
    }
    return t;
  };
  out.rest = walk(s);
  return out;
}

Separated separate_rias(const DL& s, DLHeader& h) {
  DLNames names = DLNames::from(s, h);
  return separate_rias(s, h, names);
}

DL ria_conj(const std::vector<RIA>& rias, const DL& rest) {
  std::vector<DL> parts;
  for (const auto& r : rias) parts.push_back(s_ria(r.chain, r.head));
  parts.push_back(rest);
  return s_conj(parts);
}

// ---------------------------------------------------------------------------
// compiling hierarchy and transitivity into concept inclusions

namespace {

struct Rx;
using RxP = std::shared_ptr<const Rx>;
struct Rx {
  enum class K { Letter, Seq, Alt, Star, Plus } k;
  Role letter;
  std::vector<RxP> kids;
};

RxP rx(Rx::K k, std::vector<RxP> kids) { return std::make_shared<const Rx>(Rx{k, nullptr, std::move(kids)}); }
RxP rx_letter(Role r) { return std::make_shared<const Rx>(Rx{Rx::K::Letter, std::move(r), {}}); }

Role invert(const Role& r) {
  switch (r->kind) {
    case RK::Name:
      return role_inv(r);
    case RK::Inverse:
      return r->a;
    case RK::Not:
      return role_not(invert(r->a));
    case RK::And:
      return role_and(invert(r->a), invert(r->b));
    case RK::Or:
      return role_or(invert(r->a), invert(r->b));
  }
  return r;
}

RxP reverse(const RxP& e) {
  if (e->k == Rx::K::Letter) return rx_letter(invert(e->letter));
  std::vector<RxP> kids;
  for (const auto& c : e->kids) kids.push_back(reverse(c));
  if (e->k == Rx::K::Seq) std::reverse(kids.begin(), kids.end());
  return rx(e->k, std::move(kids));
}

struct RoleRules {
  std::vector<Role> subs;                      // Y ⊑ X
  std::vector<std::pair<Role, Role>> entries;  // Sw ∘ Y ⊑ X
  std::vector<std::pair<Role, Role>> loops;    // Sw ∘ Y ∘ X ⊑ X
  bool transitive = false;
};

class Languages {
 public:
  Languages(const std::vector<RIA>& rias, const RoleOrder& ord) {
    for (const auto& r : rias) {
      auto& rr = rules_[r.head];
      const auto& c = r.chain;
      if (c.size() == 1) {
        rr.subs.push_back(c[0]);
      } else if (c.size() == 2 && is_named(c[0], r.head) && is_named(c[1], r.head)) {
        rr.transitive = true;
      } else if (c.size() == 2 && ord.simple(c[0]) && !mentions(c[1], r.head)) {
        rr.entries.push_back({c[0], c[1]});
      } else if (c.size() == 3 && ord.simple(c[0]) && is_named(c[2], r.head) && !mentions(c[1], r.head)) {
        rr.loops.push_back({c[0], c[1]});
      } else {
        throw Error("not SH-shaped RIA: " + ria_text(r));
      }
    }
  }

  bool expanded(const std::string& x) {
    auto it = expanded_.find(x);
    if (it != expanded_.end()) return it->second;
    auto rit = rules_.find(x);
    if (rit == rules_.end()) return expanded_[x] = false;
    expanded_[x] = false;  // provisional, guards against cycles of plain inclusions
    const auto& rr = rit->second;
    bool e = rr.transitive || !rr.entries.empty() || !rr.loops.empty();
    for (const auto& y : rr.subs) {
      const std::string* b = base_name(y);
      if (b && expanded(*b)) e = true;
    }
    return expanded_[x] = e;
  }

  RxP of_role(const Role& y) {
    const std::string* b = base_name(y);
    if (!b || !expanded(*b)) return rx_letter(y);
    RxP l = of_name(*b);
    return y->kind == RK::Name ? l : reverse(l);
  }

  RxP of_name(const std::string& x) {
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    if (visiting_.count(x)) throw Error("not SH-shaped: cyclic role inclusions through " + x);
    visiting_.insert(x);
    const auto& rr = rules_[x];
    std::vector<RxP> alts{rx_letter(role_name(x))};
    for (const auto& y : rr.subs) alts.push_back(of_role(y));
    for (const auto& [sw, y] : rr.entries) alts.push_back(rx(Rx::K::Seq, {rx_letter(sw), of_role(y)}));
    RxP body = alts.size() == 1 ? alts[0] : rx(Rx::K::Alt, alts);
    if (!rr.loops.empty()) {
      std::vector<RxP> pre;
      for (const auto& [sw, y] : rr.loops) pre.push_back(rx(Rx::K::Seq, {rx_letter(sw), of_role(y)}));
      RxP p = pre.size() == 1 ? pre[0] : rx(Rx::K::Alt, pre);
      body = rx(Rx::K::Seq, {rx(Rx::K::Star, {p}), body});
    }
    if (rr.transitive) body = rx(Rx::K::Plus, {body});
    visiting_.erase(x);
    return memo_[x] = body;
  }

 private:
  static bool mentions(const Role& r, const std::string& n) {
    if (r->kind == RK::Name) return r->name == n;
    return mentions(r->a, n) || (r->b && mentions(r->b, n));
  }

  std::map<std::string, RoleRules> rules_;
  std::map<std::string, bool> expanded_;
  std::map<std::string, RxP> memo_;
  std::set<std::string> visiting_;
};

struct Nfa {
  int states = 0;
  struct Edge {
    int from;
    Role label;  // null for an empty move
    int to;
  };
  std::vector<Edge> edges;

  std::pair<int, int> build(const RxP& e) {
    int s = states++, f = states++;
    switch (e->k) {
      case Rx::K::Letter:
        edges.push_back({s, e->letter, f});
        break;
      case Rx::K::Seq: {
        int cur = s;
        for (const auto& c : e->kids) {
          auto [a, b] = build(c);
          edges.push_back({cur, nullptr, a});
          cur = b;
        }
        edges.push_back({cur, nullptr, f});
        break;
      }
      case Rx::K::Alt:
        for (const auto& c : e->kids) {
          auto [a, b] = build(c);
          edges.push_back({s, nullptr, a});
          edges.push_back({b, nullptr, f});
        }
        break;
      case Rx::K::Star:
      case Rx::K::Plus: {
        auto [a, b] = build(e->kids[0]);
        edges.push_back({s, nullptr, a});
        edges.push_back({b, nullptr, f});
        edges.push_back({b, nullptr, a});
        if (e->k == Rx::K::Star) edges.push_back({s, nullptr, f});
        break;
      }
    }
    return {s, f};
  }
};

struct Compiler {
  Languages& lang;
  DLNames& names;
  std::vector<DL> extra;

  Concept con(const Concept& c, bool positive) {
    switch (c->kind) {
      case CK::Not:
        return c_not(con(c->a, !positive));
      case CK::And:
        return c_and(con(c->a, positive), con(c->b, positive));
      case CK::Or:
        return c_or(con(c->a, positive), con(c->b, positive));
      case CK::AtLeast:
        return c_atleast(c->n, c->role, con(c->a, positive));
      case CK::AtMost:
        return c_atmost(c->n, c->role, con(c->a, !positive));
      case CK::Dia:
        return c_dia(c->sp, con(c->a, positive));
      case CK::Box:
        return c_box(c->sp, con(c->a, positive));
      case CK::Forall: {
        Concept body = con(c->a, positive);
        const std::string* b = base_name(c->role);
        if (!b || !lang.expanded(*b)) return c_forall(c->role, body);
        if (!positive) throw Error("compiling role inclusions needs a sentence in negation normal form");
        return markers(lang.of_role(c->role), body);
      }
      default:
        return c;
    }
  }

  // One marker per automaton state; the start marker stands in for the restriction.
  Concept markers(const RxP& e, const Concept& body) {
    Nfa a;
    auto [s, f] = a.build(e);
    auto closure = [&](int q) {
      std::vector<bool> seen(a.states, false);
      std::vector<int> todo{q};
      seen[q] = true;
      while (!todo.empty()) {
        int p = todo.back();
        todo.pop_back();
        for (const auto& ed : a.edges)
          if (ed.from == p && !ed.label && !seen[ed.to]) {
            seen[ed.to] = true;
            todo.push_back(ed.to);
          }
      }
      return seen;
    };
    // empty moves are folded away; markers only for the start and letter targets
    std::map<int, std::string> m;
    std::vector<int> order{s};
    m[s] = names.take_numbered("_M");
    for (std::size_t i = 0; i < order.size(); ++i) {
      int q = order[i];
      auto cl = closure(q);
      std::set<std::pair<std::string, int>> done;
      for (const auto& ed : a.edges) {
        if (!ed.label || !cl[ed.from]) continue;
        if (!m.count(ed.to)) {
          m[ed.to] = names.take_numbered("_M");
          order.push_back(ed.to);
        }
        if (!done.insert({print_role(ed.label), ed.to}).second) continue;
        extra.push_back(s_gci(c_atomic(m[q]), c_forall(ed.label, c_atomic(m[ed.to]))));
      }
      if (cl[f]) extra.push_back(s_gci(c_atomic(m[q]), body));
    }
    return c_atomic(m[s]);
  }

  DL sentence(const DL& s, bool positive) {
    switch (s->kind) {
      case SK::GCI:
        return s_gci(con(s->lhs, !positive), con(s->rhs, positive));
      case SK::RIA:
        return s;
      case SK::Not:
        return s_not(sentence(s->a, !positive));
      case SK::And:
        return s_and(sentence(s->a, positive), sentence(s->b, positive));
      case SK::Or:
        return s_or(sentence(s->a, positive), sentence(s->b, positive));
      case SK::Dia:
        return s_dia(s->sp, sentence(s->a, positive));
      case SK::Box:
        return s_box(s->sp, sentence(s->a, positive));
    }
    return s;
  }
};

}  // namespace

DL compile_sh_rias(const std::vector<RIA>& ria_part, const DL& rest, const DLHeader& h, DLNames& names) {
  RoleOrder ord(h);
  Languages lang(ria_part, ord);
  Compiler comp{lang, names, {}};
  std::vector<DL> parts{comp.sentence(rest, true)};
  for (const auto& r : ria_part)
    if (r.chain.size() == 1) parts.push_back(s_ria(r.chain, r.head));
  parts.insert(parts.end(), comp.extra.begin(), comp.extra.end());
  return s_conj(parts);
}

DL compile_sh_rias(const std::vector<RIA>& ria_part, const DL& rest, const DLHeader& h) {
  DLNames names = DLNames::from(ria_conj(ria_part, rest), h);
  return compile_sh_rias(ria_part, rest, h, names);
}

F dl_pipeline(const DLDocument& doc) {
  DLHeader h = doc.header;
  DLNames names = DLNames::from(doc.sentence, h);
  DL n = nnf(doc.sentence, h, names);
  Separated sep = separate_rias(n, h, names);
  return dl_to_fosl(compile_sh_rias(sep.ria_part, sep.rest, h, names));
}

// ---------------------------------------------------------------------------
// model constructions

StandpointStructure close_roles(const StandpointStructure& M, const std::vector<RIA>& rias,
                                const std::set<std::string>& heads, bool from_empty) {
  StandpointStructure out = M;
  const int n = M.n();
  for (const auto& r : heads)
    if (out.pred_index(r) < 0) out.add_pred(r, 2);
  for (int w = 0; w < out.num_worlds(); ++w) {
    if (from_empty)
      for (const auto& r : heads) {
        int p = out.pred_index(r);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) out.set(w, p, false, a, b);
      }
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& ria : rias) {
        if (!heads.count(ria.head)) continue;
        int p = out.pred_index(ria.head);
        auto rel = chain_pairs(out, w, ria.chain);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (rel[a * n + b] && !out.get(w, p, a, b)) {
              out.set(w, p, true, a, b);
              changed = true;
            }
      }
    }
  }
  return out;
}

StandpointStructure extend_for_separation(const StandpointStructure& M, const Separated& sep) {
  StandpointStructure out = M;
  const int n = M.n();
  for (const auto& [r, low] : sep.lowered) {
    int src = M.pred_index(r);
    if (src < 0) throw Error("predicate not in structure: " + r);
    int p = out.pred_index(low) >= 0 ? out.pred_index(low) : out.add_pred(low, 2);
    src = out.pred_index(r);
    for (int w = 0; w < out.num_worlds(); ++w)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.set(w, p, out.get(w, src, a, b), a, b);
  }
  for (std::size_t i = 0; i < sep.switches.size(); ++i) {
    int p = out.pred_index(sep.switches[i]) >= 0 ? out.pred_index(sep.switches[i])
                                                 : out.add_pred(sep.switches[i], 2);
    DL rho = s_ria(sep.originals[i].chain, sep.originals[i].head);
    for (int w = 0; w < out.num_worlds(); ++w) {
      bool holds = holds_dl(M, w, rho);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.set(w, p, holds && a == b, a, b);
    }
  }
  return out;
}

}  // namespace spc
