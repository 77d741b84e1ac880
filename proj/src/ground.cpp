#include "spc/ground.hpp"

#include <cstdlib>
#include <unordered_map>

#include "spc/sat.hpp"
#include "spc/semantics.hpp"

namespace spc {

using sat::Lit;

long long default_budget() {
  if (const char* env = std::getenv("SPC_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 100'000'000;
}

namespace {

struct Layout {
  int n = 0, W = 0;
  Signature sig;
  std::set<std::string> rigid;
  std::vector<std::string> sp_syms;  // without *
  std::vector<std::string> consts;
  std::vector<PredDecl> preds;       // sorted by name
};

Layout make_layout(const F& f, int n, int W, const BsatOptions& opt) {
  Layout L;
  L.n = n;
  L.W = W;
  L.sig = signature_of(f);
  L.sig.merge(opt.extra);
  L.rigid = opt.rigid;
  for (const auto& s : L.sig.standpoints)
    if (s != kUniversal) L.sp_syms.push_back(s);
  L.consts.assign(L.sig.constants.begin(), L.sig.constants.end());
  for (const auto& [p, a] : L.sig.predicates) L.preds.push_back({p, a});
  for (const auto& r : L.rigid)
    if (!L.sig.predicates.count(r)) L.preds.push_back({r, 1});
  std::sort(L.preds.begin(), L.preds.end(),
            [](const PredDecl& a, const PredDecl& b) { return a.name < b.name; });
  return L;
}

int tuples(int arity, int n) { return arity == 2 ? n * n : (arity == 1 ? n : 1); }

class Grounder {
 public:
  Grounder(const Layout& L) : L_(L) {
    truth_ = S_.new_var();
    S_.add_clause({sat::pos(truth_)});
    for (const auto& s : L_.sp_syms) {
      auto& row = sigma_[s];
      for (int w = 0; w < L_.W; ++w) row.push_back(model_var());
    }
    for (const auto& c : L_.consts) {
      auto& row = consts_[c];
      for (int d = 0; d < L_.n; ++d) row.push_back(model_var());
      std::vector<Lit> one;
      for (int v : row) one.push_back(sat::pos(v));
      S_.add_clause(one);
      for (int a = 0; a < L_.n; ++a)
        for (int b = a + 1; b < L_.n; ++b) S_.add_clause({sat::neg(row[a]), sat::neg(row[b])});
    }
    base_.assign(L_.W, std::vector<int>(L_.preds.size(), -1));
    for (std::size_t p = 0; p < L_.preds.size(); ++p) {
      if (!L_.rigid.count(L_.preds[p].name)) continue;
      int first = -1;
      for (int t = 0; t < tuples(L_.preds[p].arity, L_.n); ++t) {
        int v = model_var();
        if (first < 0) first = v;
      }
      for (int w = 0; w < L_.W; ++w) base_[w][p] = first;
    }
    for (int w = 0; w < L_.W; ++w)
      for (std::size_t p = 0; p < L_.preds.size(); ++p) {
        if (L_.rigid.count(L_.preds[p].name)) continue;
        int first = -1;
        for (int t = 0; t < tuples(L_.preds[p].arity, L_.n); ++t) {
          int v = model_var();
          if (first < 0) first = v;
        }
        base_[w][p] = first;
      }
  }

  sat::Solver& solver() { return S_; }
  const std::vector<int>& model_vars() const { return model_vars_; }

  void assert_everywhere(const F& f) {
    for (int w = 0; w < L_.W; ++w) {
      std::map<std::string, int> env;
      S_.add_clause({ground(f, w, env)});
    }
  }

  void add_symmetry_breaking() {
    for (int d = 0; d + 1 < L_.n; ++d) {
      std::vector<int> img = image_for_elements(d, d + 1);
      lex_leq(img);
    }
    for (int w = 0; w + 1 < L_.W; ++w) {
      std::vector<int> img = image_for_worlds(w, w + 1);
      lex_leq(img);
    }
  }

  StandpointStructure decode(const std::vector<bool>& m) const {
    std::vector<std::string> dom, worlds;
    for (int d = 0; d < L_.n; ++d) dom.push_back("d" + std::to_string(d));
    for (int w = 0; w < L_.W; ++w) worlds.push_back("p" + std::to_string(w));
    StandpointStructure M = StandpointStructure::make(dom, worlds, L_.preds);
    for (const auto& [s, row] : sigma_) {
      std::vector<bool> r;
      for (int v : row) r.push_back(m[v]);
      M.sigma[s] = r;
    }
    for (const auto& [c, row] : consts_)
      for (int d = 0; d < L_.n; ++d)
        if (m[row[d]]) M.consts[c] = d;
    for (int w = 0; w < L_.W; ++w)
      for (std::size_t p = 0; p < L_.preds.size(); ++p)
        for (int t = 0; t < tuples(L_.preds[p].arity, L_.n); ++t)
          M.ext[w][p][t] = m[base_[w][p] + t];
    return M;
  }

 private:
  int model_var() {
    int v = S_.new_var();
    model_vars_.push_back(v);
    return v;
  }

  Lit T() const { return sat::pos(truth_); }
  Lit Fl() const { return sat::neg(truth_); }

  Lit land(Lit a, Lit b) {
    if (a == Fl() || b == Fl()) return Fl();
    if (a == T()) return b;
    if (b == T()) return a;
    if (a == b) return a;
    if (a == sat::negate(b)) return Fl();
    if (a > b) std::swap(a, b);
    uint64_t key = (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
    auto it = and_cache_.find(key);
    if (it != and_cache_.end()) return it->second;
    int g = S_.new_var();
    S_.add_clause({sat::neg(g), a});
    S_.add_clause({sat::neg(g), b});
    S_.add_clause({sat::pos(g), sat::negate(a), sat::negate(b)});
    and_cache_[key] = sat::pos(g);
    return sat::pos(g);
  }
  Lit lor(Lit a, Lit b) { return sat::negate(land(sat::negate(a), sat::negate(b))); }

  Lit at_least(const std::vector<Lit>& ls, long k) {
    if (k <= 0) return T();
    if (k > static_cast<long>(ls.size())) return Fl();
    std::vector<Lit> s(k + 1, Fl());
    s[0] = T();
    for (Lit l : ls)
      for (long j = k; j >= 1; --j) s[j] = lor(s[j], land(l, s[j - 1]));
    return s[k];
  }

  // (element, condition) pairs a term may denote
  std::vector<std::pair<int, Lit>> denot(const Term& t, const std::map<std::string, int>& env) {
    if (!t.is_const) {
      auto it = env.find(t.name);
      if (it == env.end()) throw Error("unassigned variable " + t.name);
      return {{it->second, T()}};
    }
    std::vector<std::pair<int, Lit>> out;
    const auto& row = consts_.at(t.name);
    for (int d = 0; d < L_.n; ++d) out.push_back({d, sat::pos(row[d])});
    return out;
  }

  int pred_slot(const std::string& name) const {
    for (std::size_t p = 0; p < L_.preds.size(); ++p)
      if (L_.preds[p].name == name) return static_cast<int>(p);
    throw Error("predicate missing from layout: " + name);
  }

  Lit sigma_lit(const SpExpr& e, int w) {
    switch (e->kind) {
      case StandpointExpr::Kind::Symbol:
        if (e->name == kUniversal) return T();
        return sat::pos(sigma_.at(e->name)[w]);
      case StandpointExpr::Kind::Union:
        return lor(sigma_lit(e->a, w), sigma_lit(e->b, w));
      case StandpointExpr::Kind::Inter:
        return land(sigma_lit(e->a, w), sigma_lit(e->b, w));
      case StandpointExpr::Kind::Diff:
        return land(sigma_lit(e->a, w), sat::negate(sigma_lit(e->b, w)));
    }
    return Fl();
  }

  const std::vector<std::string>& fv(const F& f) {
    auto it = fv_cache_.find(f.get());
    if (it != fv_cache_.end()) return it->second;
    auto s = free_vars(f);
    return fv_cache_[f.get()] = std::vector<std::string>(s.begin(), s.end());
  }

  Lit ground(const F& f, int w, std::map<std::string, int>& env) {
    std::string key;
    key.reserve(24);
    const Formula* ptr = f.get();
    key.append(reinterpret_cast<const char*>(&ptr), sizeof ptr);
    key.push_back(static_cast<char>(w));
    for (const auto& v : fv(f)) {
      auto it = env.find(v);
      key.push_back(it == env.end() ? '\xff' : static_cast<char>(it->second));
    }
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Lit r = ground_uncached(f, w, env);
    cache_[key] = r;
    return r;
  }

  Lit ground_uncached(const F& f, int w, std::map<std::string, int>& env) {
    using K = Formula::Kind;
    switch (f->kind) {
      case K::True:
        return T();
      case K::False:
        return Fl();
      case K::Atom: {
        int p = pred_slot(f->pred);
        if (f->terms.empty()) return sat::pos(base_[w][p]);
        if (f->terms.size() == 1) {
          Lit r = Fl();
          for (auto [d, c] : denot(f->terms[0], env)) r = lor(r, land(c, sat::pos(base_[w][p] + d)));
          return r;
        }
        Lit r = Fl();
        auto A = denot(f->terms[0], env), B = denot(f->terms[1], env);
        for (auto [a, ca] : A)
          for (auto [b, cb] : B) r = lor(r, land(land(ca, cb), sat::pos(base_[w][p] + a * L_.n + b)));
        return r;
      }
      case K::Eq: {
        Lit r = Fl();
        auto A = denot(f->terms[0], env), B = denot(f->terms[1], env);
        for (auto [a, ca] : A)
          for (auto [b, cb] : B)
            if (a == b) r = lor(r, land(ca, cb));
        return r;
      }
      case K::Not:
        return sat::negate(ground(f->a, w, env));
      case K::And: {
        Lit a = ground(f->a, w, env);
        if (a == Fl()) return Fl();
        return land(a, ground(f->b, w, env));
      }
      case K::Count: {
        auto saved = env.find(f->var);
        std::optional<int> old;
        if (saved != env.end()) old = saved->second;
        std::vector<Lit> unknown;
        long sure = 0;
        for (int d = 0; d < L_.n; ++d) {
          env[f->var] = d;
          Lit l = ground(f->a, w, env);
          if (l == T()) ++sure;
          else if (l != Fl()) unknown.push_back(l);
        }
        if (old) env[f->var] = *old;
        else env.erase(f->var);
        long n = f->n;
        switch (f->cmp) {
          case Cmp::Ge:
            return at_least(unknown, n - sure);
          case Cmp::Le:
            return sat::negate(at_least(unknown, n - sure + 1));
          case Cmp::Eq:
            return land(at_least(unknown, n - sure), sat::negate(at_least(unknown, n - sure + 1)));
        }
        return Fl();
      }
      case K::Dia: {
        Lit r = Fl();
        for (int v = 0; v < L_.W && r != T(); ++v) {
          Lit s = sigma_lit(f->sp, v);
          if (s == Fl()) continue;
          r = lor(r, land(s, ground(f->a, v, env)));
        }
        return r;
      }
    }
    return Fl();
  }

  // image[i] = variable that model variable i is mapped to
  std::vector<int> image_for_elements(int a, int b) const {
    std::unordered_map<int, int> img;
    auto sw = [&](int d) { return d == a ? b : (d == b ? a : d); };
    for (const auto& [c, row] : consts_)
      for (int d = 0; d < L_.n; ++d) img[row[d]] = row[sw(d)];
    for (int w = 0; w < L_.W; ++w)
      for (std::size_t p = 0; p < L_.preds.size(); ++p) {
        int ar = L_.preds[p].arity;
        for (int t = 0; t < tuples(ar, L_.n); ++t) {
          int u = t;
          if (ar == 1) u = sw(t);
          if (ar == 2) u = sw(t / L_.n) * L_.n + sw(t % L_.n);
          img[base_[w][p] + t] = base_[w][p] + u;
        }
      }
    return ordered_image(img);
  }

  std::vector<int> image_for_worlds(int a, int b) const {
    std::unordered_map<int, int> img;
    auto sw = [&](int w) { return w == a ? b : (w == b ? a : w); };
    for (const auto& [s, row] : sigma_)
      for (int w = 0; w < L_.W; ++w) img[row[w]] = row[sw(w)];
    for (int w = 0; w < L_.W; ++w)
      for (std::size_t p = 0; p < L_.preds.size(); ++p)
        for (int t = 0; t < tuples(L_.preds[p].arity, L_.n); ++t)
          img[base_[w][p] + t] = base_[sw(w)][p] + t;
    return ordered_image(img);
  }

  std::vector<int> ordered_image(const std::unordered_map<int, int>& img) const {
    std::vector<int> out;
    for (int v : model_vars_) {
      auto it = img.find(v);
      out.push_back(it == img.end() ? v : it->second);
    }
    return out;
  }

  // model vector <= its image, lexicographically with false < true
  void lex_leq(const std::vector<int>& img) {
    Lit eq = T();
    for (std::size_t i = 0; i < model_vars_.size(); ++i) {
      int x = model_vars_[i], y = img[i];
      if (x == y) continue;
      // while the prefix is equal, x may not exceed y
      S_.add_clause({sat::negate(eq), sat::neg(x), sat::pos(y)});
      int next = S_.new_var();
      S_.add_clause({sat::negate(eq), sat::pos(x), sat::pos(y), sat::pos(next)});
      S_.add_clause({sat::negate(eq), sat::neg(x), sat::neg(y), sat::pos(next)});
      eq = sat::pos(next);
    }
  }

  const Layout& L_;
  sat::Solver S_;
  int truth_ = 0;
  std::vector<int> model_vars_;
  std::map<std::string, std::vector<int>> sigma_;
  std::map<std::string, std::vector<int>> consts_;
  std::vector<std::vector<int>> base_;
  std::unordered_map<uint64_t, Lit> and_cache_;
  std::unordered_map<std::string, Lit> cache_;
  std::unordered_map<const Formula*, std::vector<std::string>> fv_cache_;
};

[[noreturn]] void budget_exhausted() { throw BudgetExceeded(); }

sat::Result run(sat::Solver& S, const std::vector<Lit>& assumptions, long long& budget) {
  sat::Result r = S.solve(assumptions, budget);
  if (r == sat::Result::Budget) budget_exhausted();
  return r;
}

std::optional<std::vector<bool>> least_model(Grounder& g, long long& budget) {
  auto& S = g.solver();
  if (run(S, {}, budget) != sat::Result::Sat) return std::nullopt;
  std::vector<bool> best = S.model();
  std::vector<Lit> fixed;
  for (int v : g.model_vars()) {
    if (!best[v]) {
      fixed.push_back(sat::neg(v));
      continue;
    }
    fixed.push_back(sat::neg(v));
    if (run(S, fixed, budget) == sat::Result::Sat) {
      best = S.model();
    } else {
      fixed.back() = sat::pos(v);
    }
  }
  return best;
}

void check_sentence(const F& f) {
  if (!is_sentence(f)) throw Error("bounded search needs a sentence");
}

}  // namespace

std::optional<StandpointStructure> sat_at_size(const F& f, int n, int W, const BsatOptions& opt) {
  check_sentence(f);
  if (n < 1 || W < 1) throw Error("bounds must be at least 1");
  if (n > 120) throw Error("search space too large");
  long long budget = opt.budget;
  Layout L = make_layout(f, n, W, opt);
  Grounder g(L);
  g.assert_everywhere(f);
  if (opt.symmetry) g.add_symmetry_breaking();
  auto m = least_model(g, budget);
  if (!m) return std::nullopt;
  StandpointStructure M = g.decode(*m);
  if (!models(M, f)) throw Error("internal: bounded model fails verification");
  return M;
}

std::optional<StandpointStructure> bounded_sat(const F& f, int max_domain, int max_worlds,
                                               const BsatOptions& opt) {
  check_sentence(f);
  if (max_domain < 1 || max_worlds < 1) throw Error("bounds must be at least 1");
  long long budget = opt.budget;
  for (int n = 1; n <= max_domain; ++n)
    for (int W = 1; W <= max_worlds; ++W) {
      BsatOptions o = opt;
      o.budget = budget;
      Layout L = make_layout(f, n, W, o);
      Grounder g(L);
      g.assert_everywhere(f);
      if (o.symmetry) g.add_symmetry_breaking();
      auto m = least_model(g, budget);
      if (!m) continue;
      StandpointStructure M = g.decode(*m);
      if (!models(M, f)) throw Error("internal: bounded model fails verification");
      return M;
    }
  return std::nullopt;
}

std::optional<FOInterpretation> bounded_sat_fo(const F& f, int max_domain, const BsatOptions& opt) {
  if (has_dia(f)) throw Error("modal operator in plain formula");
  auto M = bounded_sat(f, max_domain, 1, opt);
  if (!M) return std::nullopt;
  return as_interpretation(*M);
}

long long enumerate_models_fo(const F& f, int n, const BsatOptions& opt,
                              const std::function<bool(const FOInterpretation&)>& visit) {
  check_sentence(f);
  if (has_dia(f)) throw Error("modal operator in plain formula");
  long long budget = opt.budget;
  Layout L = make_layout(f, n, 1, opt);
  Grounder g(L);
  g.assert_everywhere(f);
  if (opt.symmetry) g.add_symmetry_breaking();
  auto& S = g.solver();
  long long count = 0;
  while (run(S, {}, budget) == sat::Result::Sat) {
    std::vector<bool> m = S.model();
    ++count;
    StandpointStructure M = g.decode(m);
    if (!models(M, f)) throw Error("internal: enumerated model fails verification");
    if (!visit(as_interpretation(M))) break;
    std::vector<Lit> block;
    for (int v : g.model_vars()) block.push_back(m[v] ? sat::neg(v) : sat::pos(v));
    if (!S.add_clause(block)) break;
  }
  return count;
}

std::optional<StandpointStructure> brute_force_sat(const F& f, int n, int W, const Signature& extra) {
  check_sentence(f);
  BsatOptions opt;
  opt.extra = extra;
  opt.symmetry = false;
  Layout L = make_layout(f, n, W, opt);
  Grounder g(L);  // only used for its variable layout and decoding
  const auto& vars = g.model_vars();
  std::size_t V = vars.size();
  if (V > 26) throw Error("search space too large");
  int nv = g.solver().num_vars();
  std::vector<bool> m(nv, false);
  for (uint64_t k = 0; k < (uint64_t{1} << V); ++k) {
    for (std::size_t i = 0; i < V; ++i) m[vars[i]] = (k >> (V - 1 - i)) & 1;
    bool valid = true;
    for (std::size_t ci = 0; ci < L.consts.size() && valid; ++ci) {
      int ones = 0;
      std::size_t off = L.sp_syms.size() * W + ci * n;
      for (int d = 0; d < n; ++d) ones += m[vars[off + d]];
      valid = ones == 1;
    }
    if (!valid) continue;
    StandpointStructure M = g.decode(m);
    if (models(M, f)) return M;
  }
  return std::nullopt;
}

}  // namespace spc
