#include "spc/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstdio>
#include <filesystem>

#include "spc/parser.hpp"

namespace spc {

std::string data_dir() {
  if (const char* e = std::getenv("SPC_DATA_DIR"); e && *e) return e;
  return SPC_SOURCE_DATA_DIR;
}

std::vector<CorpusEntry> load_formula_corpus(const std::string& path, const std::string& prefix) {
  std::vector<CorpusEntry> out;
  for (const auto& s : read_sexps(read_file(path))) {
    Signature sig;
    F f = formula_from_sexp(s, sig);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02zu", out.size() + 1);
    out.push_back({prefix + buf, f});
  }
  return out;
}

FormulaGen FormulaGen::frugal() {
  FormulaGen g;
  g.unary = {"P"};
  g.binary = {"R"};
  g.nullary.clear();
  g.constants.clear();
  g.standpoints.clear();
  return g;
}

namespace {

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

int roll(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

class Gen {
 public:
  Gen(Rng& rng, const FormulaGen& g) : rng_(rng), g_(g) {}

  F formula(const std::vector<std::string>& vars, int depth) {
    std::vector<Term> terms;
    for (const auto& v : vars) terms.push_back(var(v));
    for (const auto& c : g_.constants) terms.push_back(cst(c));
    bool leaf_ok = !terms.empty() || !g_.nullary.empty();
    int r = roll(rng_, 0, 99);
    if (depth <= 0 || (leaf_ok && r < 30)) {
      if (leaf_ok) return leaf(terms);
      return quantify(vars, 0);
    }
    if (r < 42) return mk_not(formula(vars, depth));
    if (r < 56) return mk_and(formula(vars, depth - 1), formula(vars, depth - 1));
    if (r < 66) return mk_or(formula(vars, depth - 1), formula(vars, depth - 1));
    if (r < 84) return quantify(vars, depth - 1);
    return modal(vars, depth - 1);
  }

 private:
  F leaf(const std::vector<Term>& terms) {
    int r = roll(rng_, 0, 9);
    if (terms.empty() || (!g_.nullary.empty() && r == 0)) return mk_atom(pick(rng_, g_.nullary), {});
    if (r <= 5 || g_.binary.empty()) return mk_atom(pick(rng_, g_.unary), {pick(rng_, terms)});
    if (r <= 8) return mk_atom(pick(rng_, g_.binary), {pick(rng_, terms), pick(rng_, terms)});
    return mk_eq(pick(rng_, terms), pick(rng_, terms));
  }

  F quantify(const std::vector<std::string>& vars, int depth) {
    std::string v = roll(rng_, 0, 1) ? "x" : "y";
    if (vars.size() == 1 && roll(rng_, 0, 3)) v = vars[0] == "x" ? "y" : "x";
    std::vector<std::string> inner{v};
    for (const auto& w : vars)
      if (w != v) inner.push_back(w);
    F body = formula(inner, std::max(depth, 0));
    switch (roll(rng_, 0, 5)) {
      case 0:
      case 1:
        return mk_exists(v, body);
      case 2:
        return mk_forall(v, body);
      case 3:
        return mk_count(Cmp::Ge, roll(rng_, 1, 2), v, body);
      case 4:
        return mk_count(Cmp::Le, roll(rng_, 0, 2), v, body);
      default:
        return mk_count(Cmp::Eq, roll(rng_, 0, 2), v, body);
    }
  }

  SpExpr standpoint() {
    if (g_.standpoints.empty() || roll(rng_, 0, 3) == 0) return sp_symbol(kUniversal);
    SpExpr a = sp_symbol(pick(rng_, g_.standpoints));
    if (roll(rng_, 0, 4)) return a;
    SpExpr b = sp_symbol(pick(rng_, g_.standpoints));
    switch (roll(rng_, 0, 2)) {
      case 0:
        return sp_union(a, b);
      case 1:
        return sp_inter(a, b);
      default:
        return sp_diff(a, b);
    }
  }

  F modal(const std::vector<std::string>& vars, int depth) {
    std::vector<std::string> inner;
    if (!vars.empty() && roll(rng_, 0, 2)) inner.push_back(pick(rng_, vars));
    F body = formula(inner, std::max(depth, 0));
    SpExpr e = standpoint();
    return roll(rng_, 0, 1) ? mk_dia(e, body) : mk_box(e, body);
  }

  Rng& rng_;
  const FormulaGen& g_;
};

bool acceptable(const F& f, const FormulaGen& g) {
  if (!is_sentence(f)) return false;
  auto r = fragment_report(f);
  if (!r.is_c2 || !r.is_monodic || r.size > g.max_size) return false;
  if (modal_quant_depth(f) > g.max_depth) return false;
  bool quant = false;
  for (const auto& s : subformulas(f)) quant |= s->kind == Formula::Kind::Count;
  if (g.need_modal && !has_dia(f)) return false;
  auto d = static_cast<int>(dia_sets(f).dia.size());
  if (d < g.min_dia || d > g.max_dia) return false;
  return quant || has_dia(f);
}

}  // namespace

std::vector<CorpusEntry> random_formulas(std::uint64_t seed, int count, const FormulaGen& g,
                                         const std::string& prefix) {
  Rng rng(seed);
  Gen gen(rng, g);
  std::vector<CorpusEntry> out;
  FormulaSet seen;
  for (long tries = 0; static_cast<int>(out.size()) < count; ++tries) {
    if (tries > 200000L * count) throw Error("formula generator cannot meet its limits");
    F f = gen.formula({}, roll(rng, 2, 4));
    if (!acceptable(f, g) || seen.count(f)) continue;
    seen.insert(f);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02zu", out.size() + 1);
    out.push_back({prefix + buf, f});
  }
  return out;
}

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed) {
  auto out = load_formula_corpus(data_dir() + "/corpus/hand.spf", "hand-");
  auto general = random_formulas(seed, 30, FormulaGen{}, "rand-");
  out.insert(out.end(), general.begin(), general.end());
  auto fr = random_formulas(seed ^ 0x9e3779b97f4a7c15ULL, 15, FormulaGen::frugal(), "rfrugal-");
  out.insert(out.end(), fr.begin(), fr.end());
  return out;
}

std::vector<CorpusEntry> frugal_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  for (auto& e : load_formula_corpus(data_dir() + "/corpus/hand.spf", "hand-")) {
    if (!fragment_report(e.formula).is_frugal) continue;
    auto sig = signature_of(e.formula);
    bool ok = true;
    for (const auto& [p, a] : sig.predicates) ok &= (p == "P" && a == 1) || (p == "R" && a == 2);
    if (ok) out.push_back(std::move(e));
  }
  auto fr = random_formulas(seed ^ 0x9e3779b97f4a7c15ULL, 15, FormulaGen::frugal(), "rfrugal-");
  out.insert(out.end(), fr.begin(), fr.end());
  return out;
}

F running_example() { return parse_formula(read_file(data_dir() + "/e.spf")).formula; }

StandpointStructure blank_structure(const Signature& sig, int domain, int worlds) {
  std::vector<std::string> dom, ws;
  for (int d = 0; d < domain; ++d) dom.push_back("d" + std::to_string(d));
  for (int w = 0; w < worlds; ++w) ws.push_back("w" + std::to_string(w));
  std::vector<PredDecl> preds;
  for (const auto& [p, a] : sig.predicates) preds.push_back({p, a});
  auto M = StandpointStructure::make(dom, ws, preds);
  for (const auto& s : sig.standpoints)
    if (s != kUniversal) M.sigma[s] = std::vector<bool>(worlds, false);
  for (const auto& c : sig.constants) M.consts[c] = 0;
  return M;
}

StandpointStructure random_structure(Rng& rng, const Signature& sig, int domain, int worlds) {
  auto M = blank_structure(sig, domain, worlds);
  auto bit = [&] { return static_cast<bool>(rng() & 1); };
  for (auto& [s, row] : M.sigma)
    for (std::size_t w = 0; w < row.size(); ++w) row[w] = bit();
  for (auto& [c, d] : M.consts) d = roll(rng, 0, domain - 1);
  for (auto& row : M.ext)
    for (auto& t : row)
      for (auto& b : t) b = bit();
  return M;
}

Role random_role(Rng& rng, const ConceptGen& g, bool allow_boolean) {
  const auto& simple = g.simple_roles.empty() ? g.roles : g.simple_roles;
  if (allow_boolean && g.boolean_roles && roll(rng, 0, 3) == 0) {
    Role a = role_name(pick(rng, simple));
    Role b = role_name(pick(rng, simple));
    switch (roll(rng, 0, 3)) {
      case 0:
        return role_not(a);
      case 1:
        return role_and(a, role_inv(b));
      case 2:
        return role_or(a, b);
      default:
        return role_inv(a);
    }
  }
  Role r = role_name(pick(rng, allow_boolean ? simple : g.roles));
  return roll(rng, 0, 3) == 0 ? role_inv(r) : r;
}

Concept random_concept(Rng& rng, int depth, const ConceptGen& g) {
  int r = roll(rng, 0, 99);
  if (depth <= 0 || r < 25) {
    int k = roll(rng, 0, 9);
    if (k == 0) return c_top();
    if (k == 1) return c_bot();
    if (k == 2 && !g.nominals.empty()) return c_nominal(pick(rng, g.nominals));
    if (k == 3 && g.self) return c_self(random_role(rng, g, true));
    return c_atomic(pick(rng, g.concepts));
  }
  auto sub = [&] { return random_concept(rng, depth - 1, g); };
  if (r < 37) return c_not(sub());
  if (r < 47) return c_and(sub(), sub());
  if (r < 55) return c_or(sub(), sub());
  if (r < 67) return c_exists(random_role(rng, g, false), sub());
  if (r < 75) return c_forall(random_role(rng, g, false), sub());
  if (r < 81) return c_atleast(roll(rng, 1, 2), random_role(rng, g, true), sub());
  if (r < 87) return c_atmost(roll(rng, 0, 1), random_role(rng, g, true), sub());
  SpExpr e = g.standpoints.empty() || roll(rng, 0, 2) == 0 ? sp_symbol(kUniversal)
                                                          : sp_symbol(pick(rng, g.standpoints));
  return roll(rng, 0, 1) ? c_dia(e, sub()) : c_box(e, sub());
}

std::vector<DLEntry> load_dl_corpus(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".spd") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<DLEntry> out;
  for (const auto& p : files) out.push_back({p.stem().string(), parse_dl(read_file(p.string()))});
  return out;
}

std::vector<DLEntry> random_dl_sentences(std::uint64_t seed, int count) {
  Rng rng(seed);
  ConceptGen g;
  g.simple_roles = {"S"};
  g.self = false;
  std::vector<DLEntry> out;
  const std::vector<std::vector<std::string>> chains = {{"R", "R"}, {"S"}, {"S", "R"}};
  for (int i = 0; i < count; ++i) {
    std::vector<DL> parts;
    int gcis = roll(rng, 1, 2);
    for (int k = 0; k < gcis; ++k) parts.push_back(s_gci(random_concept(rng, 1, g), random_concept(rng, 2, g)));
    if (roll(rng, 0, 1)) {
      std::vector<Role> chain;
      for (const auto& r : pick(rng, chains)) chain.push_back(role_name(r));
      DL ria = s_ria(chain, "R");
      int w = roll(rng, 0, 3);
      if (w == 1) ria = s_box(sp_symbol("s"), ria);
      if (w == 2) ria = s_dia(sp_symbol("s"), ria);
      if (w == 3) ria = s_not(ria);
      parts.push_back(ria);
    }
    if (roll(rng, 0, 2) == 0) parts.back() = s_or(parts.back(), s_gci(random_concept(rng, 1, g), c_bot()));
    DLDocument doc;
    doc.sentence = s_conj(parts);
    doc.signature = dl_signature(doc.sentence);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d", i + 1);
    out.push_back({std::string("rdl-") + buf, doc});
  }
  return out;
}

std::vector<DLEntry> dl_corpus(std::uint64_t seed, std::size_t size) {
  auto out = load_dl_corpus(data_dir() + "/corpus/dl");
  if (out.size() < size) {
    auto extra = random_dl_sentences(seed, static_cast<int>(size - out.size()));
    out.insert(out.end(), extra.begin(), extra.end());
  }
  return out;
}

}  // namespace spc
