// Tiling cases around the hardness gadgets, run through the bounded oracle.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spc/dl.hpp"
#include "spc/structure.hpp"

namespace spc {

enum class Expectation { SatEvidence, UnsatEvidence, Unknown };

std::string expectation_name(Expectation e);

struct ReductionCase {
  std::string name;
  TilingSystem tiling;
  Expectation expected = Expectation::Unknown;
  int max_domain = 4;
  int max_worlds = 3;
};

// (case NAME (tiles K) (h (A B)...) (v (A B)...) (init T...) (expect E) (bounds D W))
std::vector<ReductionCase> parse_cases(const std::string& text);
std::string print_case(const ReductionCase& c);

struct ReductionReport {
  std::string name;
  Expectation expected = Expectation::Unknown;
  std::optional<StandpointStructure> witness;
  bool agrees = true;  // false only when a definite expectation is contradicted
  std::string note;
  std::size_t axioms = 0;
  std::string text() const;
};

// Throws BudgetExceeded when the oracle gives up.
ReductionReport run_case(const ReductionCase& c, long long budget);

}  // namespace spc
