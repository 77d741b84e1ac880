// Bounded model finding by grounding into propositional clauses.
#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>

#include "spc/structure.hpp"
#include "spc/syntax.hpp"

namespace spc {

// Thrown when the conflict and decision budget runs out.
struct BudgetExceeded : Error {
  BudgetExceeded() : Error("search space too large") {}
};

// 1e8 unless SPC_BUDGET is set.
long long default_budget();

struct BsatOptions {
  long long budget = default_budget();  // conflicts plus decisions, shared by all solver calls
  bool symmetry = true;                 // lex-leader constraints on adjacent swaps
  std::set<std::string> rigid;          // predicates with one extension for all worlds
  Signature extra;                      // symbols to include even if f does not mention them
};

// Smallest domain first, then fewest worlds; within a size the lexicographically least model
// over the variable order: sigma bits, constants, rigid atoms, then world by world,
// predicates by name, tuples in lex order. Every returned model is checked with eval.
std::optional<StandpointStructure> bounded_sat(const F& f, int max_domain, int max_worlds,
                                               const BsatOptions& opt = {});
std::optional<StandpointStructure> sat_at_size(const F& f, int domain, int worlds,
                                               const BsatOptions& opt = {});
std::optional<FOInterpretation> bounded_sat_fo(const F& f, int max_domain,
                                               const BsatOptions& opt = {});

// Every model of a plain sentence at a fixed domain size (symmetry breaking per options).
// The callback returns false to stop. Returns the number of models visited.
long long enumerate_models_fo(const F& f, int domain, const BsatOptions& opt,
                              const std::function<bool(const FOInterpretation&)>& visit);

// Reference enumerator over all structures in the same canonical order. Tiny sizes only.
std::optional<StandpointStructure> brute_force_sat(const F& f, int domain, int worlds,
                                                   const Signature& extra = {});

}  // namespace spc
