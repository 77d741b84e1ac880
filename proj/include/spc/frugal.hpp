// Normalization into frugal form: S5 only, no nullary predicates, no constants.
#pragma once

#include <map>
#include <string>

#include "spc/structure.hpp"
#include "spc/syntax.hpp"

namespace spc {

struct RenameLedger {
  std::map<std::string, std::string> standpoint_to_nullary;
  std::map<std::string, std::string> nullary_to_unary;
  std::map<std::string, std::string> constant_to_unary;

  void merge(const RenameLedger& other);
  std::string to_text() const;
  static RenameLedger from_text(const std::string& text);
  bool operator==(const RenameLedger&) const = default;
};

struct Transformed {
  F formula;
  RenameLedger ledger;
};

Transformed to_s5(const F& f);
Transformed remove_nullary(const F& f);
Transformed remove_constants(const F& f);
Transformed frugalize(const F& f);

// Model mappings across the three steps. The forward direction takes a model of the input
// to a model of the output; the backward direction goes the other way.
StandpointStructure s5_model_forward(const StandpointStructure& M, const RenameLedger& l);
StandpointStructure s5_model_backward(const StandpointStructure& M, const RenameLedger& l);
StandpointStructure nullary_model_forward(const StandpointStructure& M, const RenameLedger& l);
StandpointStructure nullary_model_backward(const StandpointStructure& M, const RenameLedger& l);
StandpointStructure constant_model_forward(const StandpointStructure& M, const RenameLedger& l);
StandpointStructure constant_model_backward(const StandpointStructure& M, const RenameLedger& l);

// Composite of the three forward (backward) maps, using the ledger of frugalize.
StandpointStructure frugal_model_forward(const StandpointStructure& M, const RenameLedger& l);
StandpointStructure frugal_model_backward(const StandpointStructure& M, const RenameLedger& l);

}  // namespace spc
