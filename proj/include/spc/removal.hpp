// Standpoint removal: frugal monodic standpoint C2 into plain C2 over layered domains.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spc/semantics.hpp"
#include "spc/syntax.hpp"

namespace spc {

struct RemovalParams {
  int ell = 0;
  int m = 0;
  std::vector<std::pair<F, std::string>> free_dia_index;  // FreeDia member -> E-predicate
  std::vector<std::string> level_preds;
  std::string chain_pred = kChainPred;

  StackNames names() const { return {chain_pred, level_preds}; }
  std::vector<std::string> e_preds() const;
  // Only the stack vocabulary, no E-predicates.
  static RemovalParams bare(int m, const StackNames& names);
};

// m = ceil(|Dia| + log2 |Dia|), and 0 when there are no diamonds.
int layer_bits(std::size_t dia_count);

RemovalParams compute_params(const F& f);
// Same E-predicates, different layer count. Level names are kept fresh against f.
RemovalParams with_layers(const RemovalParams& p, int m, const F& f);

F build_stack_formula(const RemovalParams& p, const std::vector<std::string>& binary_preds);
F build_rigidity_formula(const RemovalParams& p);

F level_agreement(const RemovalParams& p);  // conjunction of L_j(x) <-> L_j(y)
F etype_agreement(const RemovalParams& p);  // conjunction of E_i(x) <-> E_i(y)

// The recursive translation of subformulas, free in x and y.
F tr(const F& f, const RemovalParams& p);
// forall x forall y (x = y -> tr(f))
F translate_tr(const F& f, const RemovalParams& p);

struct RemovalResult {
  RemovalParams params;
  F stack;
  F rigidity;
  F trans;
  F combined;
};

RemovalResult remove_standpoints_parts(const F& f);
F remove_standpoints(const F& f);

// Canonical form for comparing translations against hand-written shapes: drops double
// negation, turns negated existentials into exists=0 and back, rewrites exists<=0 as exists=0
// and folds the constants true and false.
F normalize(const F& f);

}  // namespace spc
