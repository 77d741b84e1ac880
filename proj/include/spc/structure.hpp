// Finite standpoint structures and plain first-order interpretations.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spc/syntax.hpp"

namespace spc {

struct PredDecl {
  std::string name;
  int arity = 0;
  bool operator==(const PredDecl&) const = default;
};

// Extension tables are flat: unary index d, binary index d1*n+d2, nullary index 0.
using Table = std::vector<uint8_t>;

struct StandpointStructure {
  std::vector<std::string> domain;
  std::vector<std::string> worlds;
  std::vector<PredDecl> preds;                     // sorted by name
  std::map<std::string, std::vector<bool>> sigma;  // excludes "*"
  std::map<std::string, int> consts;               // constant -> element index
  std::vector<std::vector<Table>> ext;             // ext[world][pred]

  static StandpointStructure make(std::vector<std::string> domain, std::vector<std::string> worlds,
                                  std::vector<PredDecl> preds);

  int n() const { return static_cast<int>(domain.size()); }
  int num_worlds() const { return static_cast<int>(worlds.size()); }
  int pred_index(const std::string& name) const;  // -1 when absent
  int arity(int p) const { return preds[p].arity; }
  int elem_index(const std::string& name) const;
  int world_index(const std::string& name) const;
  std::size_t table_size(int p) const;

  bool get(int w, int p, int a = 0, int b = 0) const { return ext[w][p][index(p, a, b)]; }
  void set(int w, int p, bool v, int a = 0, int b = 0) { ext[w][p][index(p, a, b)] = v; }
  std::size_t index(int p, int a, int b) const {
    return preds[p].arity == 2 ? static_cast<std::size_t>(a) * domain.size() + b
                               : static_cast<std::size_t>(preds[p].arity == 1 ? a : 0);
  }
  bool in_sigma(const std::string& sym, int w) const;

  // Adds a predicate with empty extension everywhere; returns its index.
  int add_pred(const std::string& name, int arity);
  void validate() const;
};

struct FOInterpretation {
  std::vector<std::string> domain;
  std::vector<PredDecl> preds;
  std::map<std::string, int> consts;
  std::vector<Table> ext;

  static FOInterpretation make(std::vector<std::string> domain, std::vector<PredDecl> preds);
  int n() const { return static_cast<int>(domain.size()); }
  int pred_index(const std::string& name) const;
  bool get(int p, int a = 0, int b = 0) const { return ext[p][index(p, a, b)]; }
  void set(int p, bool v, int a = 0, int b = 0) { ext[p][index(p, a, b)] = v; }
  std::size_t index(int p, int a, int b) const {
    return preds[p].arity == 2 ? static_cast<std::size_t>(a) * domain.size() + b
                               : static_cast<std::size_t>(preds[p].arity == 1 ? a : 0);
  }
  int add_pred(const std::string& name, int arity);
};

StandpointStructure as_structure(const FOInterpretation& I, const std::string& world = "w");
FOInterpretation as_interpretation(const StandpointStructure& M);

bool same_structure(const StandpointStructure& a, const StandpointStructure& b);
bool same_interpretation(const FOInterpretation& a, const FOInterpretation& b);

// Brute force over domain bijections; worlds are matched by position.
bool isomorphic(const StandpointStructure& a, const StandpointStructure& b);
bool isomorphic(const FOInterpretation& a, const FOInterpretation& b);

}  // namespace spc
