#include <functional>

#include "spc/dl.hpp"

namespace spc {

namespace {

Concept conj_c(const std::vector<Concept>& cs) {
  if (cs.empty()) return c_top();
  Concept out = cs.back();
  for (std::size_t i = cs.size() - 1; i-- > 0;) out = c_and(cs[i], out);
  return out;
}

Concept disj_c(const std::vector<Concept>& cs) {
  if (cs.empty()) return c_bot();
  Concept out = cs.back();
  for (std::size_t i = cs.size() - 1; i-- > 0;) out = c_or(cs[i], out);
  return out;
}

Concept lit(const std::string& a, bool positive) {
  return positive ? c_atomic(a) : c_not(c_atomic(a));
}

std::string idx(const std::string& base, int i) { return base + std::to_string(i); }

}  // namespace

DLDocument gen_exp_tiling_tbox(const TilingSystem& t) {
  const int n = static_cast<int>(t.init.size());
  if (n < 1) throw Error("tiling needs an initial condition of length at least 1");
  if (t.k < 1) throw Error("tiling needs at least one tile");
  for (int x : t.init)
    if (x < 1 || x > t.k) throw Error("initial tile out of range");
  for (const auto* rel : {&t.h, &t.v})
    for (const auto& [a, b] : *rel)
      if (a < 1 || a > t.k || b < 1 || b > t.k) throw Error("compatibility pair out of range");

  const std::string o = "o";
  const Concept not_o = c_not(c_nominal(o));
  const Role H = role_name("H"), V = role_name("V"), R = role_name("R");
  const Role P = role_name("P"), Q = role_name("Q");
  const SpExpr star = sp_symbol(kUniversal);
  auto T = [&](int l) { return idx("T", l); };
  auto X = [&](int i) { return idx("X", i); };
  auto Y = [&](int i) { return idx("Y", i); };
  std::vector<DL> ax;

  // almost rigid tiles and coordinates
  std::vector<std::string> rigidish;
  for (int l = 1; l <= t.k; ++l) rigidish.push_back(T(l));
  for (int i = 1; i <= n; ++i) rigidish.push_back(X(i));
  for (int i = 1; i <= n; ++i) rigidish.push_back(Y(i));
  for (const auto& a : rigidish) ax.push_back(s_gci(c_and(not_o, c_atomic(a)), c_box(star, c_atomic(a))));

  // binary incrementers along H (x bits) and V (y bits)
  for (auto [role, B] : {std::pair{H, std::function<std::string(int)>(X)},
                         std::pair{V, std::function<std::string(int)>(Y)}}) {
    std::vector<Concept> some_zero;
    for (int i = 1; i <= n; ++i) some_zero.push_back(lit(B(i), false));
    ax.push_back(s_gci(c_and(not_o, disj_c(some_zero)), c_exists(role, not_o)));
    for (int i = 1; i <= n; ++i) {
      std::vector<Concept> lower_zero, lower_one;
      for (int j = 1; j < i; ++j) {
        lower_zero.push_back(lit(B(j), false));
        lower_one.push_back(lit(B(j), true));
      }
      if (i > 1) {
        ax.push_back(s_gci(c_and(lit(B(i), true), disj_c(lower_zero)), c_forall(role, lit(B(i), true))));
        ax.push_back(s_gci(c_and(lit(B(i), false), disj_c(lower_zero)), c_forall(role, lit(B(i), false))));
      }
      ax.push_back(s_gci(c_and(lit(B(i), true), conj_c(lower_one)), c_forall(role, lit(B(i), false))));
      ax.push_back(s_gci(c_and(lit(B(i), false), conj_c(lower_one)), c_forall(role, lit(B(i), true))));
    }
  }
  // the other coordinate is kept
  for (int i = 1; i <= n; ++i)
    for (bool pos : {true, false}) {
      ax.push_back(s_gci(lit(Y(i), pos), c_forall(H, lit(Y(i), pos))));
      ax.push_back(s_gci(lit(X(i), pos), c_forall(V, lit(X(i), pos))));
    }

  // origin with the initial row
  Concept row = c_atomic(T(t.init[n - 1]));
  for (int i = n - 1; i-- > 0;) row = c_and(c_atomic(T(t.init[i])), c_forall(H, row));
  std::vector<Concept> origin{not_o};
  for (int i = 1; i <= n; ++i) origin.push_back(lit(X(i), false));
  for (int i = 1; i <= n; ++i) origin.push_back(lit(Y(i), false));
  origin.push_back(row);
  ax.push_back(s_gci(c_top(), c_exists(R, conj_c(origin))));

  // somewhere every element hands its coordinates and tile to o
  ax.push_back(s_gci(not_o, c_dia(star, c_exists(P, c_nominal(o)))));
  for (int l = 1; l <= t.k; ++l) ax.push_back(s_gci(c_atomic(T(l)), c_forall(P, c_atomic(T(l)))));
  for (int i = 1; i <= n; ++i)
    for (bool pos : {true, false}) ax.push_back(s_gci(lit(X(i), pos), c_forall(P, lit(X(i), pos))));
  for (int i = 1; i <= n; ++i)
    for (bool pos : {true, false}) ax.push_back(s_gci(lit(Y(i), pos), c_forall(P, lit(Y(i), pos))));

  // everywhere equal coordinates force o's tile
  ax.push_back(s_gci(not_o, c_exists(Q, c_nominal(o))));
  for (int l = 1; l <= t.k; ++l) {
    std::vector<Concept> same{c_exists(Q, c_atomic(T(l)))};
    for (auto B : {std::function<std::string(int)>(X), std::function<std::string(int)>(Y)})
      for (int i = 1; i <= n; ++i)
        same.push_back(c_or(c_and(lit(B(i), true), c_exists(Q, lit(B(i), true))),
                            c_and(lit(B(i), false), c_exists(Q, lit(B(i), false)))));
    ax.push_back(s_gci(conj_c(same), c_atomic(T(l))));
  }

  // tiles cover everything and respect the compatibility relations
  std::vector<Concept> tiles;
  for (int l = 1; l <= t.k; ++l) tiles.push_back(c_atomic(T(l)));
  ax.push_back(s_gci(c_top(), disj_c(tiles)));
  for (auto [role, rel] : {std::pair{H, &t.h}, std::pair{V, &t.v}})
    for (int a = 1; a <= t.k; ++a)
      for (int b = 1; b <= t.k; ++b)
        if (!rel->count({a, b})) ax.push_back(s_gci(c_atomic(T(a)), c_forall(role, c_not(c_atomic(T(b))))));

  DLDocument doc;
  doc.sentence = s_conj(ax);
  doc.signature = dl_signature(doc.sentence);
  return doc;
}

DLDocument gen_und_grid_gcis() {
  const SpExpr star = sp_symbol(kUniversal);
  const Role E = role_name("E"), Point = role_name("Point");
  const Concept even = c_atomic("Even"), odd = c_atomic("Odd");
  const Concept pointed = c_exists(role_inv(Point), c_nominal("o"));
  std::vector<DL> ax;
  ax.push_back(s_gci(c_top(), c_and(c_exists(E, c_box(star, even)),
                                    c_and(c_exists(E, c_box(star, odd)), c_dia(star, c_atomic("Pick"))))));
  ax.push_back(s_gci(c_atomic("Pick"),
                     c_forall(E, c_or(c_not(even), c_forall(E, c_or(c_not(odd), pointed))))));
  ax.push_back(s_gci(c_atomic("Pick"),
                     c_forall(E, c_or(c_not(odd), c_forall(E, c_or(c_not(even), pointed))))));
  ax.push_back(s_func("Point"));
  DLDocument doc;
  doc.header.rigid.insert("E");
  doc.sentence = s_conj(ax);
  doc.signature = dl_signature(doc.sentence);
  return doc;
}

}  // namespace spc
