// Test corpora: hand-written files under the data directory plus seeded random generators.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spc/dl.hpp"
#include "spc/structure.hpp"
#include "spc/syntax.hpp"

namespace spc {

using Rng = std::mt19937_64;

// SPC_DATA_DIR if set, else the data directory of the source tree.
std::string data_dir();

struct CorpusEntry {
  std::string name;
  F formula;
};

// One sentence per top-level form.
std::vector<CorpusEntry> load_formula_corpus(const std::string& path, const std::string& prefix);

struct FormulaGen {
  std::vector<std::string> unary{"P", "Q"};
  std::vector<std::string> binary{"R"};
  std::vector<std::string> nullary{"A"};
  std::vector<std::string> constants{"a"};
  std::vector<std::string> standpoints{"s", "t"};
  std::size_t max_size = 12;  // |Sub|
  int max_depth = 3;          // quantifier and diamond nesting
  bool need_modal = false;
  int min_dia = 0;
  int max_dia = 1 << 20;

  static FormulaGen frugal();  // P, R and the universal standpoint only
};

// Distinct monodic C2 sentences within the generator limits.
std::vector<CorpusEntry> random_formulas(std::uint64_t seed, int count, const FormulaGen& g,
                                         const std::string& prefix);

// Hand-written file plus random sentences: the shared sentence corpus.
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed);
// Frugal sentences over P/1 and R/2: the hand-written frugal ones plus random ones.
std::vector<CorpusEntry> frugal_corpus(std::uint64_t seed);

F running_example();

// Each extension bit is set with probability one half; sigma rows likewise.
StandpointStructure random_structure(Rng& rng, const Signature& sig, int domain, int worlds);
StandpointStructure blank_structure(const Signature& sig, int domain, int worlds);

struct ConceptGen {
  std::vector<std::string> concepts{"A", "B"};
  std::vector<std::string> roles{"R", "S"};
  std::vector<std::string> simple_roles;  // for counting, Self and role booleans; empty means all
  std::vector<std::string> nominals{"o"};
  std::vector<std::string> standpoints{"s"};
  bool boolean_roles = true;
  bool self = true;
};

Concept random_concept(Rng& rng, int depth, const ConceptGen& g);
Role random_role(Rng& rng, const ConceptGen& g, bool allow_boolean);

struct DLEntry {
  std::string name;
  DLDocument doc;
};

// Every .spd file in the directory, sorted by file name.
std::vector<DLEntry> load_dl_corpus(const std::string& dir);
// Random sentences mixing GCIs, RIAs and sentence-level connectives.
std::vector<DLEntry> random_dl_sentences(std::uint64_t seed, int count);
// Hand-written files topped up with random sentences to the requested size.
std::vector<DLEntry> dl_corpus(std::uint64_t seed, std::size_t size);

}  // namespace spc
