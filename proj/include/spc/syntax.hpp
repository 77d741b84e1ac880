// Formula and standpoint-expression trees for monodic standpoint C2.
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <tuple>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace spc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const std::string kUniversal = "*";

struct Signature {
  std::map<std::string, int> predicates;
  std::set<std::string> constants;
  std::set<std::string> standpoints{kUniversal};

  // Throws on arity conflict.
  void add_predicate(const std::string& name, int arity);
  void merge(const Signature& other);
  std::vector<std::string> binary_predicates() const;
  std::set<std::string> all_names() const;
};

struct StandpointExpr;
using SpExpr = std::shared_ptr<const StandpointExpr>;

struct StandpointExpr {
  enum class Kind { Symbol, Union, Inter, Diff };
  Kind kind;
  std::string name;
  SpExpr a, b;
  std::size_t hash = 0;
};

SpExpr sp_symbol(const std::string& name);
SpExpr sp_union(SpExpr a, SpExpr b);
SpExpr sp_inter(SpExpr a, SpExpr b);
SpExpr sp_diff(SpExpr a, SpExpr b);
bool sp_equal(const SpExpr& a, const SpExpr& b);
bool is_universal(const SpExpr& e);
void sp_symbols(const SpExpr& e, std::set<std::string>& out);
std::size_t sp_size(const SpExpr& e);

struct Term {
  bool is_const = false;
  std::string name;
  bool operator==(const Term&) const = default;
  bool operator<(const Term& o) const {
    return std::tie(is_const, name) < std::tie(o.is_const, o.name);
  }
};

inline Term var(const std::string& n) { return {false, n}; }
inline Term cst(const std::string& n) { return {true, n}; }

enum class Cmp { Le, Eq, Ge };

struct Formula;
using F = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { True, False, Atom, Eq, Not, And, Count, Dia };
  Kind kind;
  std::string pred;          // Atom
  std::vector<Term> terms;   // Atom, Eq (two terms)
  Cmp cmp = Cmp::Ge;         // Count
  unsigned n = 0;            // Count
  std::string var;           // Count
  SpExpr sp;                 // Dia
  F a, b;                    // Not(a), And(a,b), Count(a), Dia(a)
  std::size_t hash = 0;
};

// core constructors
F mk_true();
F mk_false();
F mk_atom(const std::string& pred, std::vector<Term> terms);
F mk_eq(Term a, Term b);
F mk_not(F a);
F mk_and(F a, F b);
F mk_count(Cmp c, unsigned n, const std::string& v, F body);
F mk_dia(SpExpr e, F body);

// derived connectives, elaborated into the core
F mk_or(F a, F b);
F mk_implies(F a, F b);
F mk_iff(F a, F b);
F mk_exists(const std::string& v, F body);
F mk_forall(const std::string& v, F body);
F mk_box(SpExpr e, F body);
// right-nested; empty conjunction is true, empty disjunction is false
F conj(const std::vector<F>& fs);
F disj(const std::vector<F>& fs);

bool equal(const F& a, const F& b);

struct FHash {
  std::size_t operator()(const F& f) const { return f->hash; }
};
struct FEq {
  bool operator()(const F& a, const F& b) const { return equal(a, b); }
};
using FormulaSet = std::unordered_set<F, FHash, FEq>;

// Sub(f) in first-visit (pre-order, left to right) order.
std::vector<F> subformulas(const F& f);
std::set<std::string> free_vars(const F& f);
bool is_sentence(const F& f);

struct FragmentReport {
  bool is_c2 = false;
  bool is_monodic = false;
  bool is_s5 = false;
  bool nullary_free = false;
  bool constant_free = false;
  bool is_frugal = false;
  std::size_t size = 0;        // |Sub(f)|
  std::size_t sp_size = 0;     // standpoint-expression nodes, summed over Dia occurrences
};

FragmentReport fragment_report(const F& f);

struct DiaSets {
  std::vector<F> dia;
  std::vector<F> free_dia;
};

// Leftmost-innermost order, deduplicated structurally. Throws on open formulas.
DiaSets dia_sets(const F& f);

Signature signature_of(const F& f);
// Operator nesting depth: quantifiers and diamonds only.
int modal_quant_depth(const F& f);
std::size_t node_count(const F& f);
bool has_dia(const F& f);

std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

}  // namespace spc
