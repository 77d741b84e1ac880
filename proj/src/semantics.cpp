#include "spc/semantics.hpp"

#include <algorithm>
#include <numeric>

#include "spc/removal.hpp"

namespace spc {

Evaluator::Evaluator(const StandpointStructure& M, const F& f) : M_(M) { root_ = build(f); }

int Evaluator::slot(const std::string& v) const {
  for (std::size_t i = 0; i < slot_names_.size(); ++i)
    if (slot_names_[i] == v) return static_cast<int>(i);
  return -1;
}

int Evaluator::term(const Term& t, bool& is_const) {
  is_const = t.is_const;
  if (t.is_const) {
    auto it = M_.consts.find(t.name);
    if (it == M_.consts.end()) throw Error("constant not interpreted: #" + t.name);
    return it->second;
  }
  int s = slot(t.name);
  if (s < 0) {
    slot_names_.push_back(t.name);
    s = static_cast<int>(slot_names_.size()) - 1;
  }
  return s;
}

int Evaluator::build(const F& f) {
  Node node;
  node.kind = f->kind;
  switch (f->kind) {
    case Formula::Kind::Atom: {
      node.pred = M_.pred_index(f->pred);
      if (node.pred < 0) throw Error("predicate not in structure: " + f->pred);
      node.arity = static_cast<int>(f->terms.size());
      if (node.arity != M_.preds[node.pred].arity) throw Error("arity mismatch for " + f->pred);
      for (int i = 0; i < node.arity; ++i) node.args[i] = term(f->terms[i], node.is_const[i]);
      break;
    }
    case Formula::Kind::Eq:
      for (int i = 0; i < 2; ++i) node.args[i] = term(f->terms[i], node.is_const[i]);
      break;
    case Formula::Kind::Count: {
      node.cmp = f->cmp;
      node.n = f->n;
      bool dummy;
      node.slot = term(var(f->var), dummy);
      break;
    }
    case Formula::Kind::Dia:
      node.worlds = sigma_of(M_, f->sp);
      break;
    default:
      break;
  }
  if (f->a) node.a = build(f->a);
  if (f->b) node.b = build(f->b);
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

bool Evaluator::run(int idx, int world, std::vector<int>& vals) const {
  const Node& nd = nodes_[idx];
  auto value = [&](int i) {
    if (nd.is_const[i]) return nd.args[i];
    int v = vals[nd.args[i]];
    if (v < 0) throw Error("unassigned variable " + slot_names_[nd.args[i]]);
    return v;
  };
  switch (nd.kind) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom:
      if (nd.arity == 0) return M_.get(world, nd.pred);
      if (nd.arity == 1) return M_.get(world, nd.pred, value(0));
      return M_.get(world, nd.pred, value(0), value(1));
    case Formula::Kind::Eq:
      return value(0) == value(1);
    case Formula::Kind::Not:
      return !run(nd.a, world, vals);
    case Formula::Kind::And:
      return run(nd.a, world, vals) && run(nd.b, world, vals);
    case Formula::Kind::Count: {
      int saved = vals[nd.slot];
      unsigned c = 0;
      bool decided = false, result = false;
      for (int d = 0; d < M_.n() && !decided; ++d) {
        vals[nd.slot] = d;
        if (run(nd.a, world, vals)) {
          ++c;
          if (nd.cmp == Cmp::Ge && c >= nd.n) decided = result = true;
          else if (nd.cmp != Cmp::Ge && c > nd.n) decided = true, result = false;
        }
      }
      vals[nd.slot] = saved;
      if (decided) return result;
      switch (nd.cmp) {
        case Cmp::Ge:
          return c >= nd.n;
        case Cmp::Le:
          return c <= nd.n;
        case Cmp::Eq:
          return c == nd.n;
      }
      return false;
    }
    case Formula::Kind::Dia:
      for (int w = 0; w < M_.num_worlds(); ++w)
        if (nd.worlds[w] && run(nd.a, w, vals)) return true;
      return false;
  }
  return false;
}

bool Evaluator::holds_everywhere() const {
  std::vector<int> vals(slot_names_.size(), -1);
  for (int w = 0; w < M_.num_worlds(); ++w)
    if (!run(root_, w, vals)) return false;
  return true;
}

std::vector<bool> sigma_of(const StandpointStructure& M, const SpExpr& e) {
  std::size_t W = M.worlds.size();
  if (e->kind == StandpointExpr::Kind::Symbol) {
    std::vector<bool> row(W);
    for (std::size_t w = 0; w < W; ++w) row[w] = M.in_sigma(e->name, static_cast<int>(w));
    return row;
  }
  auto a = sigma_of(M, e->a), b = sigma_of(M, e->b);
  for (std::size_t w = 0; w < W; ++w) {
    switch (e->kind) {
      case StandpointExpr::Kind::Union:
        a[w] = a[w] || b[w];
        break;
      case StandpointExpr::Kind::Inter:
        a[w] = a[w] && b[w];
        break;
      default:
        a[w] = a[w] && !b[w];
    }
  }
  return a;
}

bool eval(const StandpointStructure& M, int world, const Assignment& v, const F& f) {
  if (world < 0 || world >= M.num_worlds()) throw Error("world out of range");
  Evaluator ev(M, f);
  std::vector<int> vals(ev.num_slots(), -1);
  for (const auto& [name, d] : v) {
    if (d < 0 || d >= M.n()) throw Error("assignment outside the domain for " + name);
    int s = ev.slot(name);
    if (s >= 0) vals[s] = d;
  }
  return ev.at(world, vals);
}

bool models(const StandpointStructure& M, const F& f) { return Evaluator(M, f).holds_everywhere(); }

bool eval_fo(const FOInterpretation& I, const Assignment& v, const F& f) {
  if (has_dia(f)) throw Error("modal operator in plain formula");
  return eval(as_structure(I), 0, v, f);
}

bool models_fo(const FOInterpretation& I, const F& f) { return eval_fo(I, {}, f); }

bool is_rigid(const StandpointStructure& M, const std::string& pred) {
  int p = M.pred_index(pred);
  if (p < 0) throw Error("unknown predicate " + pred);
  for (int w = 1; w < M.num_worlds(); ++w)
    if (M.ext[w][p] != M.ext[0][p]) return false;
  return true;
}

std::vector<ETypePermutation> e_type_permutations(const StandpointStructure& M,
                                                  const std::vector<std::string>& e_preds) {
  std::vector<int> idx;
  for (const auto& e : e_preds) {
    int p = M.pred_index(e);
    if (p < 0) throw Error("unknown E-predicate " + e);
    if (M.preds[p].arity != 1) throw Error("E-predicate must be unary: " + e);
    if (!is_rigid(M, e)) throw Error("non-rigid E-predicate " + e);
    idx.push_back(p);
  }
  int n = M.n();
  std::vector<std::vector<bool>> type(n);
  for (int d = 0; d < n; ++d)
    for (int p : idx) type[d].push_back(M.get(0, p, d));
  std::vector<ETypePermutation> out;
  ETypePermutation g(n);
  std::iota(g.begin(), g.end(), 0);
  do {
    bool ok = true;
    for (int d = 0; d < n && ok; ++d) ok = type[d] == type[g[d]];
    if (ok) out.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

StandpointStructure permutational_closure(const StandpointStructure& M,
                                          const std::vector<std::string>& e_preds,
                                          const ClosureOptions& opt) {
  if (M.n() > opt.max_domain) throw Error("closure too large: domain exceeds guard");
  if (!M.consts.empty()) throw Error("closure requires a constant-free structure");
  auto perms = e_type_permutations(M, e_preds);
  long total = static_cast<long>(perms.size()) * M.num_worlds();
  if (total > opt.max_worlds) throw Error("closure too large: too many worlds");
  std::vector<std::string> worlds;
  for (const auto& w : M.worlds)
    for (std::size_t k = 0; k < perms.size(); ++k) worlds.push_back(w + ":" + std::to_string(k));
  StandpointStructure C = StandpointStructure::make(M.domain, worlds, M.preds);
  int n = M.n(), K = static_cast<int>(perms.size());
  for (const auto& [s, row] : M.sigma) {
    std::vector<bool> r;
    for (bool b : row)
      for (int k = 0; k < K; ++k) r.push_back(b);
    C.sigma[s] = r;
  }
  for (int w = 0; w < M.num_worlds(); ++w)
    for (int k = 0; k < K; ++k) {
      const auto& g = perms[k];
      int cw = w * K + k;
      for (int p = 0; p < static_cast<int>(M.preds.size()); ++p) {
        switch (M.preds[p].arity) {
          case 0:
            C.set(cw, p, M.get(w, p));
            break;
          case 1:
            for (int d = 0; d < n; ++d) C.set(cw, p, M.get(w, p, d), g[d]);
            break;
          default:
            for (int d = 0; d < n; ++d)
              for (int e = 0; e < n; ++e) C.set(cw, p, M.get(w, p, d, e), g[d], g[e]);
        }
      }
    }
  return C;
}

std::string level_pred(int j) { return "L_" + std::to_string(j); }

StackNames StackNames::standard(int m) {
  StackNames s;
  for (int j = 0; j < m; ++j) s.levels.push_back(level_pred(j));
  return s;
}

namespace {

int log2_exact(int n) {
  int m = 0;
  while ((1 << m) < n) ++m;
  if ((1 << m) != n) throw Error("world count not a power of two");
  return m;
}

}  // namespace

FOInterpretation stacked_interpretation(const StandpointStructure& M) {
  return stacked_interpretation(M, StackNames::standard(log2_exact(M.num_worlds())));
}

FOInterpretation stacked_interpretation(const StandpointStructure& M, const StackNames& names) {
  int m = log2_exact(M.num_worlds());
  if (static_cast<int>(names.levels.size()) != m) throw Error("level predicate count differs from m");
  if (!M.consts.empty()) throw Error("stacked interpretations need a constant-free structure");
  int n = M.n(), layers = 1 << m;
  std::vector<std::string> dom;
  for (int d = 0; d < n; ++d)
    for (int i = 0; i < layers; ++i) dom.push_back(M.domain[d] + "@" + std::to_string(i));
  std::vector<PredDecl> preds = M.preds;
  for (const auto& p : preds)
    if (p.arity == 0) throw Error("stacked interpretations need a nullary-free structure");
  preds.push_back({names.chain, 2});
  for (const auto& l : names.levels) preds.push_back({l, 1});
  FOInterpretation I = FOInterpretation::make(dom, preds);
  auto id = [&](int d, int i) { return d * layers + i; };
  int fp = I.pred_index(names.chain);
  for (int d = 0; d < n; ++d)
    for (int i = 0; i < layers; ++i) {
      for (int j = 0; j < m; ++j)
        if ((i >> j) & 1) I.set(I.pred_index(names.levels[j]), true, id(d, i));
      if (i + 1 < layers) I.set(fp, true, id(d, i), id(d, i + 1));
    }
  for (int p = 0; p < static_cast<int>(M.preds.size()); ++p) {
    int q = I.pred_index(M.preds[p].name);
    for (int i = 0; i < layers; ++i)
      for (int d = 0; d < n; ++d) {
        if (M.preds[p].arity == 1) {
          if (M.get(i, p, d)) I.set(q, true, id(d, i));
        } else {
          for (int e = 0; e < n; ++e)
            if (M.get(i, p, d, e)) I.set(q, true, id(d, i), id(e, i));
        }
      }
  }
  return I;
}

StandpointStructure extract_structure(const FOInterpretation& I, int m) {
  return extract_structure(I, m, StackNames::standard(m));
}

StandpointStructure extract_structure(const FOInterpretation& I, int m, const StackNames& names) {
  std::vector<std::string> binaries;
  for (const auto& p : I.preds)
    if (p.arity == 2 && p.name != names.chain) binaries.push_back(p.name);
  RemovalParams params = RemovalParams::bare(m, names);
  if (I.pred_index(names.chain) < 0) throw Error("not a stack model: chain predicate missing");
  for (const auto& l : names.levels)
    if (I.pred_index(l) < 0) throw Error("not a stack model: level predicate missing");
  if (!models_fo(I, build_stack_formula(params, binaries)))
    throw Error("not a stack model: the stack formula fails");

  int N = I.n(), layers = 1 << m;
  int fp = I.pred_index(names.chain);
  std::vector<int> level(N, 0);
  for (int j = 0; j < m; ++j) {
    int lp = I.pred_index(names.levels[j]);
    for (int d = 0; d < N; ++d)
      if (I.get(lp, d)) level[d] |= 1 << j;
  }
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (I.get(fp, a, b)) parent[find(a)] = find(b);
  std::vector<int> cls(N, -1), roots;
  for (int d = 0; d < N; ++d) {
    int r = find(d);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      cls[d] = static_cast<int>(roots.size()) - 1;
    } else {
      cls[d] = static_cast<int>(it - roots.begin());
    }
  }
  int n = static_cast<int>(roots.size());
  if (n * layers != N) throw Error("not a stack model: component sizes do not match 2^m");
  std::vector<std::string> domain(n);
  for (int d = 0; d < N; ++d)
    if (level[d] == 0) {
      std::string name = I.domain[d];
      if (name.size() > 2 && name.compare(name.size() - 2, 2, "@0") == 0) name.resize(name.size() - 2);
      domain[cls[d]] = name;
    }
  std::vector<std::string> worlds;
  for (int i = 0; i < layers; ++i) worlds.push_back("p" + std::to_string(i));
  std::vector<PredDecl> preds;
  for (const auto& p : I.preds) {
    if (p.name == names.chain) continue;
    if (std::find(names.levels.begin(), names.levels.end(), p.name) != names.levels.end()) continue;
    if (p.arity == 0) throw Error("not a stack model: nullary predicate present");
    preds.push_back(p);
  }
  StandpointStructure M = StandpointStructure::make(domain, worlds, preds);
  for (int p = 0; p < static_cast<int>(M.preds.size()); ++p) {
    int q = I.pred_index(M.preds[p].name);
    for (int a = 0; a < N; ++a) {
      if (M.preds[p].arity == 1) {
        if (I.get(q, a)) M.set(level[a], p, true, cls[a]);
      } else {
        for (int b = 0; b < N; ++b)
          if (I.get(q, a, b)) M.set(level[a], p, true, cls[a], cls[b]);
      }
    }
  }
  // the bijection stacked(d) = (class, level) must be an isomorphism onto the stacked form
  FOInterpretation S = stacked_interpretation(M, names);
  std::vector<int> img(N);
  std::vector<bool> hit(N, false);
  for (int d = 0; d < N; ++d) {
    img[d] = cls[d] * layers + level[d];
    if (hit[img[d]]) throw Error("not a stack model: stacked map is not injective");
    hit[img[d]] = true;
  }
  for (int p = 0; p < static_cast<int>(I.preds.size()); ++p) {
    int q = S.pred_index(I.preds[p].name);
    if (q < 0) throw Error("not a stack model: predicate lost in extraction");
    for (int a = 0; a < N; ++a) {
      if (I.preds[p].arity == 1) {
        if (I.get(p, a) != S.get(q, img[a])) throw Error("not a stack model: isomorphism check failed");
      } else {
        for (int b = 0; b < N; ++b)
          if (I.get(p, a, b) != S.get(q, img[a], img[b]))
            throw Error("not a stack model: isomorphism check failed");
      }
    }
  }
  return M;
}

StandpointStructure pad_precisifications(const StandpointStructure& M, int n) {
  if (n < M.num_worlds()) throw Error("padding target below current world count");
  StandpointStructure P = M;
  for (int k = 1; P.num_worlds() < n; ++k) {
    P.worlds.push_back(M.worlds[0] + "." + std::to_string(k));
    P.ext.push_back(M.ext[0]);
    for (auto& [s, row] : P.sigma) row.push_back(row[0]);
  }
  return P;
}

StandpointStructure enrich_with_e_preds(const StandpointStructure& M, const F& f,
                                        const std::vector<std::string>& e_names) {
  auto ds = dia_sets(f);
  if (ds.free_dia.size() != e_names.size()) throw Error("E-predicate names do not match FreeDia");
  StandpointStructure out = M;
  for (std::size_t i = 0; i < e_names.size(); ++i) {
    const F& dia = ds.free_dia[i];
    std::string z = *free_vars(dia->a).begin();
    Evaluator ev(M, dia);
    std::vector<int> vals(ev.num_slots(), -1);
    int s = ev.slot(z);
    int p = out.add_pred(e_names[i], 1);
    for (int d = 0; d < M.n(); ++d) {
      vals[s] = d;
      bool member = ev.at(0, vals);
      for (int w = 0; w < out.num_worlds(); ++w) out.set(w, p, member, d);
    }
  }
  return out;
}

StandpointStructure witness_selection(const StandpointStructure& M_prime, const F& f) {
  if (!fragment_report(f).is_frugal) throw Error("witness selection needs a frugal sentence");
  if (!models(M_prime, f)) throw Error("input not a model");
  RemovalParams params = compute_params(f);
  std::vector<std::string> e_names;
  for (const auto& [dia, name] : params.free_dia_index) e_names.push_back(name);
  StandpointStructure M = enrich_with_e_preds(M_prime, f, e_names);
  auto ds = dia_sets(f);
  std::vector<bool> chosen(M.num_worlds(), false);
  auto least_world = [&](const F& body, const Assignment& v) {
    for (int w = 0; w < M.num_worlds(); ++w)
      if (eval(M, w, v, body)) return w;
    return -1;
  };
  if (ds.dia.empty()) chosen[0] = true;
  for (const auto& dia : ds.dia) {
    if (!free_vars(dia->a).empty()) continue;
    if (!eval(M, 0, {}, dia)) continue;
    chosen[least_world(dia->a, {})] = true;
  }
  std::vector<int> eidx;
  for (const auto& e : e_names) eidx.push_back(M.pred_index(e));
  std::vector<std::vector<bool>> seen_types;
  for (int d = 0; d < M.n(); ++d) {
    std::vector<bool> t;
    for (int p : eidx) t.push_back(M.get(0, p, d));
    if (std::find(seen_types.begin(), seen_types.end(), t) != seen_types.end()) continue;
    seen_types.push_back(t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t[i]) continue;
      const F& dia = ds.free_dia[i];
      std::string z = *free_vars(dia->a).begin();
      chosen[least_world(dia->a, {{z, d}})] = true;
    }
  }
  if (std::find(chosen.begin(), chosen.end(), true) == chosen.end()) chosen[0] = true;
  StandpointStructure S;
  S.domain = M.domain;
  S.preds = M.preds;
  S.consts = M.consts;
  for (int w = 0; w < M.num_worlds(); ++w) {
    if (!chosen[w]) continue;
    S.worlds.push_back(M.worlds[w]);
    S.ext.push_back(M.ext[w]);
  }
  for (const auto& [s, row] : M.sigma) {
    std::vector<bool> r;
    for (int w = 0; w < M.num_worlds(); ++w)
      if (chosen[w]) r.push_back(row[w]);
    S.sigma[s] = r;
  }
  if (!models(permutational_closure(S, e_names), f))
    throw Error("witness selection produced a structure whose closure is not a model");
  return S;
}

}  // namespace spc
