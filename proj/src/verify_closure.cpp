#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "spc/corpus.hpp"
#include "spc/parser.hpp"
#include "spc/semantics.hpp"
#include "spc/verify.hpp"

// Exhaustive closure invariance. One machine word holds 64 structures that differ only in the
// unary predicate P; R and the rigid E are enumerated outside. Tables are indexed by closure
// world (base world, permutation) and by the pair of values of x and y.

namespace spc {

namespace {

using Word = std::uint64_t;

struct Node {
  enum class Op { True, False, P, R, E, Eq, Not, And, Count, Dia } op;
  int v1 = 0, v2 = 0;  // variable slots, x = 0 and y = 1
  Cmp cmp = Cmp::Ge;
  unsigned n = 0;
  int a = -1, b = -1;
  bool uses_r = false;  // some R atom below; otherwise the table does not change with R
  F f;
};

int slot_of(const Term& t) {
  if (t.is_const) throw Error("closure check: constants are not supported");
  if (t.name == "x") return 0;
  if (t.name == "y") return 1;
  throw Error("closure check: only the variables x and y are supported");
}

struct Program {
  std::vector<Node> nodes;
  std::unordered_map<F, int, FHash, FEq> memo;

  int add(const F& f) {
    if (auto it = memo.find(f); it != memo.end()) return it->second;
    Node nd{Node::Op::True};
    nd.f = f;
    switch (f->kind) {
      case Formula::Kind::True:
        nd.op = Node::Op::True;
        break;
      case Formula::Kind::False:
        nd.op = Node::Op::False;
        break;
      case Formula::Kind::Atom:
        if (f->pred == "P" && f->terms.size() == 1) {
          nd.op = Node::Op::P;
        } else if (f->pred == "E" && f->terms.size() == 1) {
          nd.op = Node::Op::E;
        } else if (f->pred == "R" && f->terms.size() == 2) {
          nd.op = Node::Op::R;
          nd.v2 = slot_of(f->terms[1]);
        } else {
          throw Error("closure check: predicate outside P/1, R/2, E/1: " + f->pred);
        }
        nd.v1 = slot_of(f->terms[0]);
        break;
      case Formula::Kind::Eq:
        nd.op = Node::Op::Eq;
        nd.v1 = slot_of(f->terms[0]);
        nd.v2 = slot_of(f->terms[1]);
        break;
      case Formula::Kind::Not:
        nd.op = Node::Op::Not;
        nd.a = add(f->a);
        break;
      case Formula::Kind::And:
        nd.op = Node::Op::And;
        nd.a = add(f->a);
        nd.b = add(f->b);
        break;
      case Formula::Kind::Count:
        nd.op = Node::Op::Count;
        nd.cmp = f->cmp;
        nd.n = f->n;
        nd.v1 = slot_of(var(f->var));
        nd.a = add(f->a);
        break;
      case Formula::Kind::Dia:
        if (!is_universal(f->sp)) throw Error("closure check: formula is not frugal");
        nd.op = Node::Op::Dia;
        nd.a = add(f->a);
        break;
    }
    nd.uses_r = nd.op == Node::Op::R || (nd.a >= 0 && nodes[nd.a].uses_r) ||
                (nd.b >= 0 && nodes[nd.b].uses_r);
    nodes.push_back(nd);
    int id = static_cast<int>(nodes.size()) - 1;
    memo.emplace(f, id);
    return id;
  }
};

struct Perms {
  std::vector<std::vector<int>> g, ginv;
};

// Same order as e_type_permutations: lexicographic, filtered by E-type.
Perms e_perms(int n, unsigned emask) {
  Perms out;
  std::vector<int> g(n);
  std::iota(g.begin(), g.end(), 0);
  do {
    bool ok = true;
    for (int d = 0; d < n && ok; ++d) ok = ((emask >> d) & 1) == ((emask >> g[d]) & 1);
    if (!ok) continue;
    std::vector<int> inv(n);
    for (int d = 0; d < n; ++d) inv[g[d]] = d;
    out.g.push_back(g);
    out.ginv.push_back(inv);
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

class Sliced {
 public:
  Sliced(const Program& prog, int n, int W, unsigned emask)
      : prog_(prog), n_(n), W_(W), emask_(emask), perms_(e_perms(n, emask)) {
    K_ = static_cast<int>(perms_.g.size());
    CW_ = W_ * K_;
    A_ = n_ * n_;
    table_.assign(prog_.nodes.size() * CW_ * A_, 0);
    int bits = n_ * W_;
    for (int b = 0; b < bits; ++b) {
      Word m = 0;
      for (int l = 0; l < 64; ++l)
        if ((l >> b) & 1) m |= Word{1} << l;
      lanemask_.push_back(m);
    }
    valid_ = bits >= 6 ? ~Word{0} : (Word{1} << (1 << bits)) - 1;
    for (int a = 0; a < A_; ++a) {
      vx_.push_back(a / n_);
      vy_.push_back(a % n_);
    }
    for (int k1 = 0; k1 < K_; ++k1)
      for (int k2 = 0; k2 < K_; ++k2) {
        if (k1 == k2) continue;
        std::vector<int> to(A_);
        for (int a = 0; a < A_; ++a) {
          int hx = perms_.g[k2][perms_.ginv[k1][vx_[a]]], hy = perms_.g[k2][perms_.ginv[k1][vy_[a]]];
          to[a] = hx * n_ + hy;
        }
        shifts_.push_back({k1, k2, std::move(to)});
      }
  }

  int lanes() const { return 1 << (n_ * W_); }
  int closure_worlds() const { return CW_; }
  Word valid() const { return valid_; }

  Word& at(int node, int cw, int a) { return table_[(static_cast<std::size_t>(node) * CW_ + cw) * A_ + a]; }

  // With `all` false only the nodes that depend on R are refreshed.
  void run(std::uint64_t rbits, bool all) {
    for (std::size_t i = 0; i < prog_.nodes.size(); ++i)
      if (all || prog_.nodes[i].uses_r) compute(static_cast<int>(i), rbits);
  }

  // First failing node with its base world, or -1.
  std::pair<int, int> check(bool all) {
    for (std::size_t i = 0; i < prog_.nodes.size(); ++i) {
      if (!all && !prog_.nodes[i].uses_r) continue;
      int node = static_cast<int>(i);
      for (int pi = 0; pi < W_; ++pi)
        for (const auto& sh : shifts_) {
          const Word* l = &at(node, pi * K_ + sh.k1, 0);
          const Word* r = &at(node, pi * K_ + sh.k2, 0);
          for (int a = 0; a < A_; ++a)
            if ((l[a] ^ r[sh.to[a]]) & valid_) return {node, pi};
        }
    }
    return {-1, -1};
  }

  // Reference evaluation of one lane through the permutational closure.
  StandpointStructure base(std::uint64_t rbits, int lane) const {
    Signature sig;
    sig.add_predicate("P", 1);
    sig.add_predicate("R", 2);
    sig.add_predicate("E", 1);
    auto M = blank_structure(sig, n_, W_);
    int P = M.pred_index("P"), R = M.pred_index("R"), E = M.pred_index("E");
    for (int w = 0; w < W_; ++w)
      for (int d = 0; d < n_; ++d) {
        M.set(w, P, (lane >> (w * n_ + d)) & 1, d);
        M.set(w, E, (emask_ >> d) & 1, d);
        for (int e = 0; e < n_; ++e) M.set(w, R, (rbits >> (w * A_ + d * n_ + e)) & 1, d, e);
      }
    return M;
  }

  std::string mismatch_vs_reference(std::uint64_t rbits, int lane) {
    auto C = permutational_closure(base(rbits, lane), {"E"});
    if (C.num_worlds() != CW_) return "closure world count differs";
    for (std::size_t i = 0; i < prog_.nodes.size(); ++i) {
      Evaluator ev(C, prog_.nodes[i].f);
      std::vector<int> vals(ev.num_slots(), 0);
      int sx = ev.slot("x"), sy = ev.slot("y");
      for (int cw = 0; cw < CW_; ++cw)
        for (int ax = 0; ax < n_; ++ax)
          for (int ay = 0; ay < n_; ++ay) {
            if (sx >= 0) vals[sx] = ax;
            if (sy >= 0) vals[sy] = ay;
            bool ref = ev.at(cw, vals);
            bool got = (at(static_cast<int>(i), cw, ax * n_ + ay) >> lane) & 1;
            if (ref != got) return "node " + print_formula(prog_.nodes[i].f) + " differs from eval";
          }
    }
    return "";
  }

 private:
  int val(int slot, int a) const { return slot == 0 ? vx_[a] : vy_[a]; }

  void compute(int id, std::uint64_t rbits) {
    const Node& nd = prog_.nodes[id];
    for (int cw = 0; cw < CW_; ++cw) {
      int pi = cw / K_, k = cw % K_;
      const auto& inv = perms_.ginv[k];
      for (int a = 0; a < A_; ++a) {
        Word w = 0;
        switch (nd.op) {
          case Node::Op::True:
            w = ~Word{0};
            break;
          case Node::Op::False:
            break;
          case Node::Op::P:
            w = lanemask_[pi * n_ + inv[val(nd.v1, a)]];
            break;
          case Node::Op::R: {
            int bit = pi * A_ + inv[val(nd.v1, a)] * n_ + inv[val(nd.v2, a)];
            w = ((rbits >> bit) & 1) ? ~Word{0} : 0;
            break;
          }
          case Node::Op::E:
            w = ((emask_ >> val(nd.v1, a)) & 1) ? ~Word{0} : 0;
            break;
          case Node::Op::Eq:
            w = val(nd.v1, a) == val(nd.v2, a) ? ~Word{0} : 0;
            break;
          case Node::Op::Not:
            w = ~at(nd.a, cw, a);
            break;
          case Node::Op::And:
            w = at(nd.a, cw, a) & at(nd.b, cw, a);
            break;
          case Node::Op::Count:
            w = count(nd, cw, a);
            break;
          case Node::Op::Dia:
            for (int c = 0; c < CW_; ++c) w |= at(nd.a, c, a);
            break;
        }
        at(id, cw, a) = w;
      }
    }
  }

  Word count(const Node& nd, int cw, int a) {
    // ge[k]: at least k witnesses so far
    unsigned top = std::min<unsigned>(nd.n + 1, n_ + 1);
    Word ge[8] = {~Word{0}, 0, 0, 0, 0, 0, 0, 0};
    int x = val(0, a), y = val(1, a);
    for (int d = 0; d < n_; ++d) {
      int b = nd.v1 == 0 ? d * n_ + y : x * n_ + d;
      Word bw = at(nd.a, cw, b);
      for (unsigned k = top; k >= 1; --k) ge[k] |= ge[k - 1] & bw;
    }
    auto at_least = [&](unsigned c) { return c <= top ? ge[c] : Word{0}; };
    switch (nd.cmp) {
      case Cmp::Ge:
        return at_least(nd.n);
      case Cmp::Le:
        return ~at_least(nd.n + 1);
      case Cmp::Eq:
        return at_least(nd.n) & ~at_least(nd.n + 1);
    }
    return 0;
  }

  const Program& prog_;
  int n_, W_;
  unsigned emask_;
  Perms perms_;
  int K_ = 0, CW_ = 0, A_ = 0;
  std::vector<Word> table_;
  std::vector<Word> lanemask_;
  Word valid_ = 0;
  std::vector<int> vx_, vy_;
  struct Shift {
    int k1, k2;
    std::vector<int> to;
  };
  std::vector<Shift> shifts_;
};

}  // namespace

SuiteResult closure_invariance(const F& f, const std::string& name, int max_domain, int max_worlds) {
  SuiteResult r;
  r.name = "closure-invariance";
  if (max_domain > 3 || max_worlds > 2) throw Error("closure check supports at most 3 elements and 2 worlds");
  Program prog;
  prog.add(f);
  long long structures = 0, reference = 0;
  for (int n = 1; n <= max_domain; ++n)
    for (int W = 1; W <= max_worlds; ++W) {
      const std::uint64_t rcount = std::uint64_t{1} << (n * n * W);
      // every base structure for small sizes, a fixed stride through the rest
      const std::uint64_t stride = rcount * (1u << n) <= 4096 ? 1 : 4099;
      for (unsigned emask = 0; emask < (1u << n); ++emask) {
        Sliced s(prog, n, W, emask);
        for (std::uint64_t rb = 0; rb < rcount; ++rb) {
          s.run(rb, rb == 0);
          structures += s.lanes();
          auto bad = s.check(rb == 0);
          if (bad.first >= 0) {
            std::ostringstream os;
            os << name << ": closure not invariant at |D|=" << n << " |W|=" << W << " E=" << emask
               << " R=" << rb << " world " << bad.second << " in "
               << print_formula(prog.nodes[bad.first].f);
            r.fail(os.str());
            r.counts["structures"] = structures;
            return r;
          }
          if ((rb + emask) % stride == 0) {
            int lane = static_cast<int>((rb * 7 + emask * 3) % s.lanes());
            std::string msg = s.mismatch_vs_reference(rb, lane);
            ++reference;
            if (!msg.empty()) {
              r.fail(name + ": bit-sliced evaluation disagrees with eval: " + msg);
              r.counts["structures"] = structures;
              return r;
            }
          }
        }
      }
    }
  r.counts["structures"] = structures;
  r.counts["reference-checks"] = reference;
  return r;
}

SuiteResult suite_lemma32(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "lemma32";
  long long formulas = 0;
  for (const auto& e : frugal_corpus(opt.seed)) {
    if (modal_quant_depth(e.formula) > 3) continue;
    auto one = closure_invariance(e.formula, e.name, 3, 2);
    ++formulas;
    r.merge(one);
    if (opt.progress) opt.progress(e.name);
  }
  r.counts["formulas"] = formulas;
  return r;
}

}  // namespace spc
