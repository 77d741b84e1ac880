#include <cctype>
#include <sstream>

#include "spc/dl.hpp"

namespace spc {

namespace {

using CK = ConceptExpr::Kind;
using SK = DLSentenceNode::Kind;
using RK = RoleExpr::Kind;

[[noreturn]] void fail(const Sexp& s, const std::string& msg, std::vector<std::string> exp = {}) {
  throw ParseError(s.span, msg, std::move(exp));
}

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isupper(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'' && c != '.') return false;
  return true;
}

const std::vector<std::string> kConceptStarts = {
    "Top", "Bot", "Name", "(nom", "(not", "(and", "(or", "(exists", "(forall",
    "(atleast", "(atmost", "(self", "(dia", "(box"};
const std::vector<std::string> kRoleStarts = {"Name", "(inv", "(rnot", "(rand", "(ror"};
const std::vector<std::string> kSentenceStarts = {"(gci", "(ria", "(func", "(not", "(and",
                                                  "(or", "(dia", "(box"};

struct Ctx {
  Signature sig;
  const DLHeader* header;
  RoleOrder order;
  bool strict;
};

void add_pred(Ctx& cx, const Sexp& s, const std::string& name, int arity) {
  if (name == "Top" || name == "Bot") fail(s, "'" + name + "' is reserved");
  try {
    cx.sig.add_predicate(name, arity);
  } catch (const Error& e) {
    fail(s, e.what());
  }
}

void want(const Sexp& s, std::size_t n) {
  if (s.items.size() != n)
    fail(s, "'" + s.items[0].atom + "' takes " + std::to_string(n - 1) + " argument(s)");
}

unsigned count_of(const Sexp& s) {
  if (s.is_list || s.atom.empty()) fail(s, "expected a natural number", {"natural number"});
  for (char c : s.atom)
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(s, "expected a natural number", {"natural number"});
  return static_cast<unsigned>(std::stoul(s.atom));
}

std::string head_of(const Sexp& s) {
  if (!s.is_list || s.items.empty() || s.items[0].is_list) return "";
  return s.items[0].atom;
}

Role role_of(const Sexp& s, Ctx& cx) {
  if (!s.is_list) {
    if (!is_name(s.atom)) fail(s, "expected a role", kRoleStarts);
    add_pred(cx, s, s.atom, 2);
    return role_name(s.atom);
  }
  const std::string h = head_of(s);
  Role r;
  if (h == "inv") {
    want(s, 2);
    r = role_inv(role_of(s.items[1], cx));
  } else if (h == "rnot") {
    want(s, 2);
    r = role_not(role_of(s.items[1], cx));
  } else if (h == "rand" || h == "ror") {
    want(s, 3);
    Role a = role_of(s.items[1], cx), b = role_of(s.items[2], cx);
    r = h == "rand" ? role_and(a, b) : role_or(a, b);
  } else {
    fail(s, "expected a role", kRoleStarts);
  }
  if (cx.strict && r->kind != RK::Inverse && r->kind != RK::Name && !cx.order.simple(r))
    fail(s, "non-simple role in restricted position");
  return r;
}

Role restricted_role(const Sexp& s, Ctx& cx) {
  Role r = role_of(s, cx);
  if (cx.strict && !cx.order.simple(r)) fail(s, "non-simple role in restricted position");
  return r;
}

Concept concept_of(const Sexp& s, Ctx& cx);

Concept fold_concepts(const Sexp& s, Ctx& cx, bool is_and) {
  if (s.items.size() < 2) fail(s, "connective needs at least one argument", kConceptStarts);
  Concept out = concept_of(s.items.back(), cx);
  for (std::size_t i = s.items.size() - 1; i-- > 1;) {
    Concept c = concept_of(s.items[i], cx);
    out = is_and ? c_and(c, out) : c_or(c, out);
  }
  return out;
}

Concept concept_of(const Sexp& s, Ctx& cx) {
  if (!s.is_list) {
    if (s.atom == "Top") return c_top();
    if (s.atom == "Bot") return c_bot();
    if (!is_name(s.atom)) fail(s, "expected a concept", kConceptStarts);
    add_pred(cx, s, s.atom, 1);
    return c_atomic(s.atom);
  }
  const std::string h = head_of(s);
  if (h == "nom") {
    want(s, 2);
    const Sexp& o = s.items[1];
    if (o.is_list || o.atom.size() < 2 || o.atom[0] != '#') fail(o, "expected a constant", {"#name"});
    cx.sig.constants.insert(o.atom.substr(1));
    return c_nominal(o.atom.substr(1));
  }
  if (h == "not") {
    want(s, 2);
    return c_not(concept_of(s.items[1], cx));
  }
  if (h == "and" || h == "or") return fold_concepts(s, cx, h == "and");
  if (h == "exists" || h == "forall") {
    want(s, 3);
    Role r = role_of(s.items[1], cx);
    Concept c = concept_of(s.items[2], cx);
    return h == "exists" ? c_exists(r, c) : c_forall(r, c);
  }
  if (h == "atleast" || h == "atmost") {
    want(s, 4);
    unsigned n = count_of(s.items[1]);
    bool restricted = h == "atmost" || n != 1;
    Role r = restricted ? restricted_role(s.items[2], cx) : role_of(s.items[2], cx);
    Concept c = concept_of(s.items[3], cx);
    return h == "atleast" ? c_atleast(n, r, c) : c_atmost(n, r, c);
  }
  if (h == "self") {
    want(s, 2);
    return c_self(restricted_role(s.items[1], cx));
  }
  if (h == "dia" || h == "box") {
    want(s, 3);
    SpExpr e = sp_from_sexp(s.items[1], cx.sig);
    Concept c = concept_of(s.items[2], cx);
    return h == "dia" ? c_dia(e, c) : c_box(e, c);
  }
  fail(s, "expected a concept", kConceptStarts);
}

DL sentence_of(const Sexp& s, Ctx& cx);

DL fold_sentences(const Sexp& s, Ctx& cx, bool is_and) {
  if (s.items.size() < 2) fail(s, "connective needs at least one argument", kSentenceStarts);
  DL out = sentence_of(s.items.back(), cx);
  for (std::size_t i = s.items.size() - 1; i-- > 1;) {
    DL a = sentence_of(s.items[i], cx);
    out = is_and ? s_and(a, out) : s_or(a, out);
  }
  return out;
}

DL sentence_of(const Sexp& s, Ctx& cx) {
  const std::string h = head_of(s);
  if (h == "gci") {
    want(s, 3);
    Concept c = concept_of(s.items[1], cx);
    return s_gci(c, concept_of(s.items[2], cx));
  }
  if (h == "ria") {
    want(s, 3);
    const Sexp& ch = s.items[1];
    if (!ch.is_list || ch.items.empty()) fail(ch, "expected a non-empty role chain", {"(R ...)"});
    std::vector<Role> chain;
    for (const auto& r : ch.items) chain.push_back(role_of(r, cx));
    const Sexp& hd = s.items[2];
    if (hd.is_list || !is_name(hd.atom)) fail(hd, "expected a role name", {"Name"});
    add_pred(cx, hd, hd.atom, 2);
    if (cx.strict) {
      bool complex = chain.size() > 1;
      for (const auto& r : chain) complex |= !cx.order.simple(r);
      if (complex && cx.order.simple(hd.atom))
        fail(hd, "role heading a complex inclusion must be declared non-simple", {"(declare-nonsimple " + hd.atom + ")"});
    }
    return s_ria(std::move(chain), hd.atom);
  }
  if (h == "func") {
    want(s, 2);
    const Sexp& r = s.items[1];
    if (r.is_list || !is_name(r.atom)) fail(r, "expected a role name", {"Name"});
    add_pred(cx, r, r.atom, 2);
    if (cx.strict && !cx.order.simple(r.atom)) fail(r, "non-simple role in restricted position");
    return s_func(r.atom);
  }
  if (h == "not") {
    want(s, 2);
    return s_not(sentence_of(s.items[1], cx));
  }
  if (h == "and" || h == "or") return fold_sentences(s, cx, h == "and");
  if (h == "dia" || h == "box") {
    want(s, 3);
    SpExpr e = sp_from_sexp(s.items[1], cx.sig);
    DL a = sentence_of(s.items[2], cx);
    return h == "dia" ? s_dia(e, a) : s_box(e, a);
  }
  fail(s, "expected a DL sentence", kSentenceStarts);
}

std::vector<std::string> names_of(const Sexp& s) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < s.items.size(); ++i) {
    const Sexp& a = s.items[i];
    if (a.is_list || !is_name(a.atom)) fail(a, "expected a predicate name", {"Name"});
    out.push_back(a.atom);
  }
  return out;
}

bool read_header(const Sexp& s, DLHeader& h) {
  const std::string k = head_of(s);
  if (k == "mode") {
    want(s, 2);
    const std::string& m = s.items[1].atom;
    if (m == "alcoiqb-self") h.mode = DLMode::ALCOIQBSelf;
    else if (m == "sroiqb-s") h.mode = DLMode::SROIQBs;
    else fail(s.items[1], "unknown mode", {"alcoiqb-self", "sroiqb-s"});
    return true;
  }
  if (k == "declare-nonsimple") {
    for (auto& n : names_of(s)) h.nonsimple.insert(n);
    return true;
  }
  if (k == "declare-order") {
    want(s, 3);
    auto n = names_of(s);
    h.order.push_back({n[0], n[1]});
    return true;
  }
  if (k == "declare-rigid") {
    for (auto& n : names_of(s)) h.rigid.insert(n);
    return true;
  }
  return false;
}

}  // namespace

DLDocument parse_dl(const std::string& text) {
  auto top = read_sexps(text);
  DLDocument doc;
  std::vector<const Sexp*> body;
  for (const auto& s : top)
    if (!read_header(s, doc.header)) body.push_back(&s);
  if (body.empty()) throw ParseError({0, text.size()}, "no DL sentence in input", kSentenceStarts);
  Ctx cx{{}, &doc.header, RoleOrder(doc.header), doc.header.mode == DLMode::SROIQBs};
  std::vector<DL> parts;
  for (const Sexp* s : body) parts.push_back(sentence_of(*s, cx));
  doc.sentence = s_conj(parts);
  doc.signature = cx.sig;
  for (const auto& r : doc.header.nonsimple) doc.signature.add_predicate(r, 2);
  return doc;
}

std::string print_role(const Role& r) {
  switch (r->kind) {
    case RK::Name:
      return r->name;
    case RK::Inverse:
      return "(inv " + print_role(r->a) + ")";
    case RK::Not:
      return "(rnot " + print_role(r->a) + ")";
    case RK::And:
      return "(rand " + print_role(r->a) + " " + print_role(r->b) + ")";
    case RK::Or:
      return "(ror " + print_role(r->a) + " " + print_role(r->b) + ")";
  }
  return "";
}

std::string print_concept(const Concept& c) {
  switch (c->kind) {
    case CK::Top:
      return "Top";
    case CK::Bot:
      return "Bot";
    case CK::Atomic:
      return c->name;
    case CK::Nominal:
      return "(nom #" + c->name + ")";
    case CK::Not:
      return "(not " + print_concept(c->a) + ")";
    case CK::And:
      return "(and " + print_concept(c->a) + " " + print_concept(c->b) + ")";
    case CK::Or:
      return "(or " + print_concept(c->a) + " " + print_concept(c->b) + ")";
    case CK::AtLeast:
      if (c->n == 1) return "(exists " + print_role(c->role) + " " + print_concept(c->a) + ")";
      return "(atleast " + std::to_string(c->n) + " " + print_role(c->role) + " " + print_concept(c->a) + ")";
    case CK::AtMost:
      return "(atmost " + std::to_string(c->n) + " " + print_role(c->role) + " " + print_concept(c->a) + ")";
    case CK::Forall:
      return "(forall " + print_role(c->role) + " " + print_concept(c->a) + ")";
    case CK::Self:
      return "(self " + print_role(c->role) + ")";
    case CK::Dia:
      return "(dia " + print_sp(c->sp) + " " + print_concept(c->a) + ")";
    case CK::Box:
      return "(box " + print_sp(c->sp) + " " + print_concept(c->a) + ")";
  }
  return "";
}

std::string print_dl_sentence(const DL& s) {
  switch (s->kind) {
    case SK::GCI:
      return "(gci " + print_concept(s->lhs) + " " + print_concept(s->rhs) + ")";
    case SK::RIA: {
      std::string out = "(ria (";
      for (std::size_t i = 0; i < s->chain.size(); ++i) out += (i ? " " : "") + print_role(s->chain[i]);
      return out + ") " + s->head + ")";
    }
    case SK::Not:
      return "(not " + print_dl_sentence(s->a) + ")";
    case SK::And:
      return "(and " + print_dl_sentence(s->a) + " " + print_dl_sentence(s->b) + ")";
    case SK::Or:
      return "(or " + print_dl_sentence(s->a) + " " + print_dl_sentence(s->b) + ")";
    case SK::Dia:
      return "(dia " + print_sp(s->sp) + " " + print_dl_sentence(s->a) + ")";
    case SK::Box:
      return "(box " + print_sp(s->sp) + " " + print_dl_sentence(s->a) + ")";
  }
  return "";
}

std::string print_dl(const DLDocument& doc) {
  std::ostringstream out;
  const auto& h = doc.header;
  out << "(mode " << (h.mode == DLMode::SROIQBs ? "sroiqb-s" : "alcoiqb-self") << ")\n";
  if (!h.nonsimple.empty()) {
    out << "(declare-nonsimple";
    for (const auto& r : h.nonsimple) out << ' ' << r;
    out << ")\n";
  }
  for (const auto& [a, b] : h.order) out << "(declare-order " << a << ' ' << b << ")\n";
  if (!h.rigid.empty()) {
    out << "(declare-rigid";
    for (const auto& r : h.rigid) out << ' ' << r;
    out << ")\n";
  }
  // the top-level right spine of conjunctions goes one sentence per line
  DL s = doc.sentence;
  while (s->kind == SK::And) {
    out << print_dl_sentence(s->a) << "\n";
    s = s->b;
  }
  out << print_dl_sentence(s) << "\n";
  return out.str();
}

}  // namespace spc
