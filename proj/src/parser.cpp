#include "spc/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace spc {

ParseError::ParseError(SourceSpan s, std::string msg, std::vector<std::string> exp)
    : Error(msg), span(s), message(std::move(msg)), expected(std::move(exp)) {}

std::vector<Sexp> read_sexps(const std::string& text) {
  std::vector<Sexp> top;
  std::vector<Sexp> stack;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ';') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '(') {
      Sexp s;
      s.is_list = true;
      s.span.start = i++;
      stack.push_back(std::move(s));
    } else if (c == ')') {
      if (stack.empty()) throw ParseError({i, i + 1}, "unbalanced ')'", {"atom", "'('"});
      Sexp s = std::move(stack.back());
      stack.pop_back();
      s.span.end = ++i;
      (stack.empty() ? top : stack.back().items).push_back(std::move(s));
    } else {
      Sexp s;
      s.span.start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '(' && text[i] != ')' && text[i] != ';')
        ++i;
      s.span.end = i;
      s.atom = text.substr(s.span.start, i - s.span.start);
      (stack.empty() ? top : stack.back().items).push_back(std::move(s));
    }
  }
  if (!stack.empty())
    throw ParseError({stack.back().span.start, text.size()}, "unterminated list", {"')'"});
  return top;
}

std::string render_error(const ParseError& e, const std::string& text) {
  std::size_t start = std::min(e.span.start, text.size());
  std::size_t line_start = text.rfind('\n', start == 0 ? 0 : start - 1);
  line_start = (line_start == std::string::npos || start == 0) ? 0 : line_start + 1;
  if (start > 0 && text[start - 1] == '\n') line_start = start;
  std::size_t line_end = text.find('\n', start);
  if (line_end == std::string::npos) line_end = text.size();
  int line_no = 1;
  for (std::size_t k = 0; k < line_start; ++k) line_no += text[k] == '\n';
  std::ostringstream os;
  os << "parse error at line " << line_no << ": " << e.message << "\n";
  os << "  " << text.substr(line_start, line_end - line_start) << "\n  ";
  std::size_t stop = std::min(std::max(e.span.end, start + 1), line_end);
  for (std::size_t k = line_start; k < start; ++k) os << ' ';
  for (std::size_t k = start; k < std::max(stop, start + 1); ++k) os << '^';
  if (!e.expected.empty()) {
    os << "\n  expected one of:";
    for (const auto& x : e.expected) os << ' ' << x;
  }
  return os.str();
}

namespace {

bool is_pred_name(const std::string& s) {
  return !s.empty() && (std::isupper(static_cast<unsigned char>(s[0])) || s[0] == '_');
}

bool is_lower_ident(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return true;
}

[[noreturn]] void fail(const Sexp& s, const std::string& msg, std::vector<std::string> exp = {}) {
  throw ParseError(s.span, msg, std::move(exp));
}

void want_arity(const Sexp& s, std::size_t n) {
  if (s.items.size() != n)
    fail(s, "'" + s.items[0].atom + "' takes " + std::to_string(n - 1) + " argument(s)");
}

unsigned parse_count(const Sexp& s, const std::string& digits) {
  if (digits.empty()) fail(s, "missing count bound", {"natural number"});
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(s, "bad count bound", {"natural number"});
  return static_cast<unsigned>(std::stoul(digits));
}

const std::vector<std::string> kFormulaStarts = {
    "true", "false", "(P t...)", "(= t t)", "(not", "(and", "(or", "(implies", "(iff",
    "(exists", "(exists>=N", "(exists<=N", "(exists=N", "(forall", "(dia", "(box"};

F fold(const Sexp& s, Signature& sig, bool is_and) {
  if (s.items.size() < 2) fail(s, "connective needs at least one argument", kFormulaStarts);
  std::vector<F> parts;
  for (std::size_t i = 1; i < s.items.size(); ++i) parts.push_back(formula_from_sexp(s.items[i], sig));
  return is_and ? conj(parts) : disj(parts);
}

}  // namespace

Term term_from_sexp(const Sexp& s, Signature& sig) {
  if (s.is_list) fail(s, "expected a term", {"variable", "#constant"});
  if (s.atom.size() > 1 && s.atom[0] == '#') {
    std::string name = s.atom.substr(1);
    sig.constants.insert(name);
    return cst(name);
  }
  if (is_lower_ident(s.atom)) return var(s.atom);
  fail(s, "expected a term", {"variable", "#constant"});
}

SpExpr sp_from_sexp(const Sexp& s, Signature& sig) {
  if (!s.is_list) {
    if (s.atom == kUniversal) return sp_symbol(kUniversal);
    if (is_lower_ident(s.atom)) {
      sig.standpoints.insert(s.atom);
      return sp_symbol(s.atom);
    }
    fail(s, "expected a standpoint expression", {"*", "symbol", "(union", "(inter", "(minus"});
  }
  if (s.items.size() == 3 && !s.items[0].is_list) {
    const auto& h = s.items[0].atom;
    if (h == "union") return sp_union(sp_from_sexp(s.items[1], sig), sp_from_sexp(s.items[2], sig));
    if (h == "inter") return sp_inter(sp_from_sexp(s.items[1], sig), sp_from_sexp(s.items[2], sig));
    if (h == "minus") return sp_diff(sp_from_sexp(s.items[1], sig), sp_from_sexp(s.items[2], sig));
  }
  fail(s, "expected a standpoint expression", {"*", "symbol", "(union", "(inter", "(minus"});
}

F formula_from_sexp(const Sexp& s, Signature& sig) {
  if (!s.is_list) {
    if (s.atom == "true") return mk_true();
    if (s.atom == "false") return mk_false();
    fail(s, "expected a formula", kFormulaStarts);
  }
  if (s.items.empty() || s.items[0].is_list) fail(s, "expected a formula", kFormulaStarts);
  const std::string& h = s.items[0].atom;
  if (is_pred_name(h)) {
    std::vector<Term> ts;
    for (std::size_t i = 1; i < s.items.size(); ++i) ts.push_back(term_from_sexp(s.items[i], sig));
    try {
      sig.add_predicate(h, static_cast<int>(ts.size()));
    } catch (const Error& e) {
      fail(s, e.what());
    }
    return mk_atom(h, std::move(ts));
  }
  if (h == "=") {
    want_arity(s, 3);
    return mk_eq(term_from_sexp(s.items[1], sig), term_from_sexp(s.items[2], sig));
  }
  if (h == "not") {
    want_arity(s, 2);
    return mk_not(formula_from_sexp(s.items[1], sig));
  }
  if (h == "and") return fold(s, sig, true);
  if (h == "or") return fold(s, sig, false);
  if (h == "implies" || h == "iff") {
    want_arity(s, 3);
    F a = formula_from_sexp(s.items[1], sig), b = formula_from_sexp(s.items[2], sig);
    return h == "implies" ? mk_implies(a, b) : mk_iff(a, b);
  }
  if (h.rfind("exists", 0) == 0 || h == "forall") {
    want_arity(s, 3);
    const Sexp& v = s.items[1];
    if (v.is_list || !is_lower_ident(v.atom)) fail(v, "expected a variable", {"variable"});
    F body = formula_from_sexp(s.items[2], sig);
    if (h == "forall") return mk_forall(v.atom, body);
    if (h == "exists") return mk_exists(v.atom, body);
    std::string rest = h.substr(6);
    if (rest.rfind(">=", 0) == 0) return mk_count(Cmp::Ge, parse_count(s, rest.substr(2)), v.atom, body);
    if (rest.rfind("<=", 0) == 0) return mk_count(Cmp::Le, parse_count(s, rest.substr(2)), v.atom, body);
    if (rest.rfind("=", 0) == 0) return mk_count(Cmp::Eq, parse_count(s, rest.substr(1)), v.atom, body);
    fail(s.items[0], "unknown quantifier", {"exists", "exists>=N", "exists<=N", "exists=N", "forall"});
  }
  if (h == "dia" || h == "box") {
    want_arity(s, 3);
    SpExpr e = sp_from_sexp(s.items[1], sig);
    F body = formula_from_sexp(s.items[2], sig);
    return h == "dia" ? mk_dia(e, body) : mk_box(e, body);
  }
  fail(s.items[0], "unknown operator '" + h + "'", kFormulaStarts);
}

ParsedFormula parse_formula(const std::string& text) {
  auto top = read_sexps(text);
  Signature sig;
  std::vector<F> parts;
  for (const auto& s : top) {
    if (s.headed("declare-pred")) {
      if (s.items.size() != 3 || s.items[1].is_list || !is_pred_name(s.items[1].atom))
        fail(s, "malformed declaration", {"(declare-pred Name arity)"});
      unsigned a = parse_count(s, s.items[2].atom);
      try {
        sig.add_predicate(s.items[1].atom, static_cast<int>(a));
      } catch (const Error& e) {
        fail(s, e.what());
      }
      continue;
    }
    if (s.headed("declare-const")) {
      if (s.items.size() != 2) fail(s, "malformed declaration", {"(declare-const #a)"});
      term_from_sexp(s.items[1], sig);
      continue;
    }
    if (s.headed("declare-standpoint")) {
      if (s.items.size() != 2) fail(s, "malformed declaration", {"(declare-standpoint s)"});
      sp_from_sexp(s.items[1], sig);
      continue;
    }
    parts.push_back(formula_from_sexp(s, sig));
  }
  if (parts.empty()) throw ParseError({0, text.size()}, "no formula found", kFormulaStarts);
  return {conj(parts), sig};
}

std::string print_term(const Term& t) { return t.is_const ? "#" + t.name : t.name; }

std::string print_sp(const SpExpr& e) {
  switch (e->kind) {
    case StandpointExpr::Kind::Symbol:
      return e->name;
    case StandpointExpr::Kind::Union:
      return "(union " + print_sp(e->a) + " " + print_sp(e->b) + ")";
    case StandpointExpr::Kind::Inter:
      return "(inter " + print_sp(e->a) + " " + print_sp(e->b) + ")";
    case StandpointExpr::Kind::Diff:
      return "(minus " + print_sp(e->a) + " " + print_sp(e->b) + ")";
  }
  return "";
}

namespace {

std::string head_of(const F& f) {
  switch (f->kind) {
    case Formula::Kind::Not:
      return "not";
    case Formula::Kind::And:
      return "and";
    case Formula::Kind::Count: {
      const char* c = f->cmp == Cmp::Ge ? ">=" : f->cmp == Cmp::Le ? "<=" : "=";
      return "exists" + std::string(c) + std::to_string(f->n) + " " + f->var;
    }
    case Formula::Kind::Dia:
      return "dia " + print_sp(f->sp);
    default:
      return "";
  }
}

std::string flat(const F& f) {
  switch (f->kind) {
    case Formula::Kind::True:
      return "true";
    case Formula::Kind::False:
      return "false";
    case Formula::Kind::Atom: {
      std::string s = "(" + f->pred;
      for (const auto& t : f->terms) s += " " + print_term(t);
      return s + ")";
    }
    case Formula::Kind::Eq:
      return "(= " + print_term(f->terms[0]) + " " + print_term(f->terms[1]) + ")";
    case Formula::Kind::And:
      return "(and " + flat(f->a) + " " + flat(f->b) + ")";
    default:
      return "(" + head_of(f) + " " + flat(f->a) + ")";
  }
}

// Flat rendering length, giving up once it exceeds budget.
long flat_len(const F& f, long budget) {
  long n;
  switch (f->kind) {
    case Formula::Kind::True:
      return 4;
    case Formula::Kind::False:
      return 5;
    case Formula::Kind::Atom:
      n = 2 + static_cast<long>(f->pred.size());
      for (const auto& t : f->terms) n += 1 + static_cast<long>(print_term(t).size());
      return n;
    case Formula::Kind::Eq:
      return 5 + static_cast<long>(print_term(f->terms[0]).size() + print_term(f->terms[1]).size());
    default:
      n = 3 + static_cast<long>(head_of(f).size());
      n += flat_len(f->a, budget - n);
      if (n > budget) return n;
      if (f->b) n += 1 + flat_len(f->b, budget - n);
      return n;
  }
}

void pretty(const F& f, int indent, std::string& out) {
  if (!f->a || flat_len(f, 100 - indent) + indent <= 100) {
    out += flat(f);
    return;
  }
  std::string pad(indent + 2, ' ');
  out += "(" + head_of(f) + "\n" + pad;
  pretty(f->a, indent + 2, out);
  if (f->b) {
    out += "\n" + pad;
    pretty(f->b, indent + 2, out);
  }
  out += ")";
}

}  // namespace

std::string print_formula(const F& f) {
  std::string out;
  pretty(f, 0, out);
  return out;
}

namespace {

struct RawWorld {
  std::string name;
  std::vector<const Sexp*> facts;
  const Sexp* where;
};

}  // namespace

StandpointStructure parse_structure(const std::string& text) {
  auto top = read_sexps(text);
  if (top.size() != 1 || !top[0].headed("structure"))
    throw ParseError({0, text.size()}, "expected a single (structure ...) form", {"(structure"});
  const Sexp& root = top[0];
  std::vector<std::string> domain, worlds;
  Signature sig;
  std::vector<std::pair<const Sexp*, const Sexp*>> sigma_items, const_items;
  std::vector<RawWorld> raw;
  bool have_domain = false, have_worlds = false;
  for (std::size_t i = 1; i < root.items.size(); ++i) {
    const Sexp& s = root.items[i];
    if (!s.is_list || s.items.empty() || s.items[0].is_list)
      fail(s, "expected a structure clause", {"(preds", "(domain", "(worlds", "(sigma", "(const", "(world"});
    const std::string& h = s.items[0].atom;
    if (h == "preds") {
      for (std::size_t k = 1; k < s.items.size(); ++k) {
        const Sexp& d = s.items[k];
        if (!d.is_list || d.items.size() != 2 || !is_pred_name(d.items[0].atom))
          fail(d, "malformed predicate declaration", {"(Name arity)"});
        try {
          sig.add_predicate(d.items[0].atom, static_cast<int>(parse_count(d, d.items[1].atom)));
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          fail(d, e.what());
        }
      }
    } else if (h == "domain" || h == "worlds") {
      auto& dst = h == "domain" ? domain : worlds;
      (h == "domain" ? have_domain : have_worlds) = true;
      for (std::size_t k = 1; k < s.items.size(); ++k) {
        const Sexp& a = s.items[k];
        if (a.is_list || a.atom.empty() || a.atom[0] == '#') fail(a, "expected an identifier");
        for (const auto& prev : dst)
          if (prev == a.atom) fail(a, "duplicate identifier " + a.atom);
        dst.push_back(a.atom);
      }
    } else if (h == "sigma") {
      for (std::size_t k = 1; k < s.items.size(); ++k) {
        const Sexp& d = s.items[k];
        if (!d.is_list || d.items.empty() || d.items[0].is_list) fail(d, "malformed sigma entry", {"(symbol world...)"});
        sigma_items.push_back({&d, &s});
      }
    } else if (h == "const") {
      for (std::size_t k = 1; k < s.items.size(); ++k) {
        const Sexp& d = s.items[k];
        if (!d.is_list || d.items.size() != 2 || d.items[0].is_list || d.items[0].atom.size() < 2 ||
            d.items[0].atom[0] != '#')
          fail(d, "malformed constant entry", {"(#name element)"});
        const_items.push_back({&d, &s});
      }
    } else if (h == "world") {
      if (s.items.size() < 2 || s.items[1].is_list) fail(s, "world clause needs a name");
      RawWorld rw{s.items[1].atom, {}, &s};
      for (std::size_t k = 2; k < s.items.size(); ++k) {
        const Sexp& fct = s.items[k];
        if (!fct.is_list || fct.items.empty() || !is_pred_name(fct.items[0].atom))
          fail(fct, "expected a fact", {"(P element...)"});
        try {
          sig.add_predicate(fct.items[0].atom, static_cast<int>(fct.items.size()) - 1);
        } catch (const Error& e) {
          fail(fct, e.what());
        }
        if (fct.items.size() > 3) fail(fct, "predicates have arity at most 2");
        rw.facts.push_back(&fct);
      }
      raw.push_back(std::move(rw));
    } else {
      fail(s.items[0], "unknown structure clause '" + h + "'",
           {"preds", "domain", "worlds", "sigma", "const", "world"});
    }
  }
  if (!have_domain || domain.empty()) fail(root, "structure needs a non-empty (domain ...)");
  if (!have_worlds || worlds.empty()) fail(root, "structure needs a non-empty (worlds ...)");
  std::vector<PredDecl> preds;
  for (const auto& [p, a] : sig.predicates) preds.push_back({p, a});
  StandpointStructure M = StandpointStructure::make(domain, worlds, preds);
  for (const auto& [d, clause] : sigma_items) {
    const std::string& sym = d->items[0].atom;
    if (sym != kUniversal && !is_lower_ident(sym)) fail(d->items[0], "expected a standpoint symbol");
    std::vector<bool> row(worlds.size(), false);
    if (sym != kUniversal) {
      auto it = M.sigma.find(sym);
      if (it != M.sigma.end()) row = it->second;
    }
    for (std::size_t k = 1; k < d->items.size(); ++k) {
      int w = M.world_index(d->items[k].atom);
      if (w < 0) fail(d->items[k], "unknown world " + d->items[k].atom);
      row[w] = true;
    }
    if (sym != kUniversal) M.sigma[sym] = row;
  }
  for (const auto& [d, clause] : const_items) {
    std::string c = d->items[0].atom.substr(1);
    int e = M.elem_index(d->items[1].atom);
    if (e < 0) fail(d->items[1], "unknown element " + d->items[1].atom);
    auto it = M.consts.find(c);
    if (it != M.consts.end() && it->second != e) fail(*d, "non-rigid constant #" + c);
    M.consts[c] = e;
  }
  for (const auto& rw : raw) {
    int w = M.world_index(rw.name);
    if (w < 0) fail(rw.where->items[1], "unknown world " + rw.name);
    for (const Sexp* fct : rw.facts) {
      int p = M.pred_index(fct->items[0].atom);
      int args[2] = {0, 0};
      for (std::size_t k = 1; k < fct->items.size(); ++k) {
        int e = M.elem_index(fct->items[k].atom);
        if (e < 0) fail(fct->items[k], "unknown element " + fct->items[k].atom);
        args[k - 1] = e;
      }
      M.set(w, p, true, args[0], args[1]);
    }
  }
  return M;
}

std::string print_structure(const StandpointStructure& M) {
  std::ostringstream os;
  os << "(structure\n  (preds";
  for (const auto& p : M.preds) os << " (" << p.name << " " << p.arity << ")";
  os << ")\n  (domain";
  for (const auto& d : M.domain) os << " " << d;
  os << ")\n  (worlds";
  for (const auto& w : M.worlds) os << " " << w;
  os << ")";
  if (!M.sigma.empty()) {
    os << "\n  (sigma";
    for (const auto& [s, row] : M.sigma) {
      os << " (" << s;
      for (std::size_t w = 0; w < row.size(); ++w)
        if (row[w]) os << " " << M.worlds[w];
      os << ")";
    }
    os << ")";
  }
  if (!M.consts.empty()) {
    os << "\n  (const";
    for (const auto& [c, d] : M.consts) os << " (#" << c << " " << M.domain[d] << ")";
    os << ")";
  }
  int n = M.n();
  for (int w = 0; w < M.num_worlds(); ++w) {
    os << "\n  (world " << M.worlds[w];
    for (int p = 0; p < static_cast<int>(M.preds.size()); ++p) {
      const auto& pd = M.preds[p];
      if (pd.arity == 0) {
        if (M.get(w, p)) os << " (" << pd.name << ")";
      } else if (pd.arity == 1) {
        for (int d = 0; d < n; ++d)
          if (M.get(w, p, d)) os << " (" << pd.name << " " << M.domain[d] << ")";
      } else {
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            if (M.get(w, p, d, e)) os << " (" << pd.name << " " << M.domain[d] << " " << M.domain[e] << ")";
      }
    }
    os << ")";
  }
  os << ")\n";
  return os.str();
}

FOInterpretation parse_interpretation(const std::string& text) {
  StandpointStructure M = parse_structure(text);
  if (M.num_worlds() != 1)
    throw ParseError({0, text.size()}, "an interpretation file must declare exactly one world");
  if (!M.sigma.empty())
    throw ParseError({0, text.size()}, "an interpretation file cannot carry sigma entries");
  return as_interpretation(M);
}

std::string print_interpretation(const FOInterpretation& I) {
  return print_structure(as_structure(I));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace spc
