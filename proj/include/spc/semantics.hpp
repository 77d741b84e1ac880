// Reference semantics and the model constructions built on it.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "spc/structure.hpp"
#include "spc/syntax.hpp"

namespace spc {

using Assignment = std::map<std::string, int>;  // variable -> element index

bool eval(const StandpointStructure& M, int world, const Assignment& v, const F& f);
// Truth of a sentence: every world, empty assignment.
bool models(const StandpointStructure& M, const F& f);

bool eval_fo(const FOInterpretation& I, const Assignment& v, const F& f);
bool models_fo(const FOInterpretation& I, const F& f);

// Compiled evaluator over a fixed structure, for hot loops.
class Evaluator {
 public:
  Evaluator(const StandpointStructure& M, const F& f);
  int slot(const std::string& var) const;  // -1 when the variable does not occur
  int num_slots() const { return static_cast<int>(slot_names_.size()); }
  bool at(int world, std::vector<int>& vals) const { return run(root_, world, vals); }
  bool holds_everywhere() const;

 private:
  struct Node {
    Formula::Kind kind;
    int pred = -1;
    int arity = 0;
    int args[2] = {0, 0};
    bool is_const[2] = {false, false};
    Cmp cmp = Cmp::Ge;
    unsigned n = 0;
    int slot = -1;
    int a = -1, b = -1;
    std::vector<bool> worlds;  // sigma of the diamond expression
  };
  bool run(int node, int world, std::vector<int>& vals) const;
  int build(const F& f);
  int term(const Term& t, bool& is_const);

  const StandpointStructure& M_;
  std::vector<Node> nodes_;
  std::vector<std::string> slot_names_;
  int root_;
};

std::vector<bool> sigma_of(const StandpointStructure& M, const SpExpr& e);

bool is_rigid(const StandpointStructure& M, const std::string& pred);

// f maps element d to perm[d].
using ETypePermutation = std::vector<int>;

std::vector<ETypePermutation> e_type_permutations(const StandpointStructure& M,
                                                  const std::vector<std::string>& e_preds);

struct ClosureOptions {
  int max_domain = 5;
  long max_worlds = 10000;
};

// Worlds are ordered world-major: index = pi * |P_E| + k with perms from e_type_permutations.
StandpointStructure permutational_closure(const StandpointStructure& M,
                                          const std::vector<std::string>& e_preds,
                                          const ClosureOptions& opt = {});

std::string level_pred(int j);
inline const std::string kChainPred = "F";

struct StackNames {
  std::string chain = kChainPred;
  std::vector<std::string> levels;  // L_0 .. L_{m-1}
  static StackNames standard(int m);
};

FOInterpretation stacked_interpretation(const StandpointStructure& M, const StackNames& names);
FOInterpretation stacked_interpretation(const StandpointStructure& M);

StandpointStructure extract_structure(const FOInterpretation& I, int m, const StackNames& names);
StandpointStructure extract_structure(const FOInterpretation& I, int m);

StandpointStructure pad_precisifications(const StandpointStructure& M, int n);

// M_prime must not yet carry the E-predicates; they are installed from FreeDia members.
StandpointStructure witness_selection(const StandpointStructure& M_prime, const F& f);

// E-predicate extensions from FreeDia membership, one predicate per FreeDia formula.
StandpointStructure enrich_with_e_preds(const StandpointStructure& M, const F& f,
                                        const std::vector<std::string>& e_names);

}  // namespace spc
