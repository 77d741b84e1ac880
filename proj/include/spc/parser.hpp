// S-expression grammars for formulas (.spf) and structures (.sps).
#pragma once

#include <string>
#include <vector>

#include "spc/structure.hpp"
#include "spc/syntax.hpp"

namespace spc {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

struct ParseError : Error {
  SourceSpan span;
  std::string message;
  std::vector<std::string> expected;
  ParseError(SourceSpan s, std::string msg, std::vector<std::string> exp = {});
};

struct Sexp {
  bool is_list = false;
  std::string atom;
  std::vector<Sexp> items;
  SourceSpan span;

  bool is_atom(const char* s) const { return !is_list && atom == s; }
  bool headed(const char* s) const {
    return is_list && !items.empty() && items[0].is_atom(s);
  }
};

std::vector<Sexp> read_sexps(const std::string& text);
// Message plus the offending line with carets under the span.
std::string render_error(const ParseError& e, const std::string& text);

struct ParsedFormula {
  F formula;
  Signature signature;
};

ParsedFormula parse_formula(const std::string& text);
F formula_from_sexp(const Sexp& s, Signature& sig);
SpExpr sp_from_sexp(const Sexp& s, Signature& sig);
Term term_from_sexp(const Sexp& s, Signature& sig);

std::string print_formula(const F& f);
std::string print_sp(const SpExpr& e);
std::string print_term(const Term& t);

StandpointStructure parse_structure(const std::string& text);
std::string print_structure(const StandpointStructure& M);
FOInterpretation parse_interpretation(const std::string& text);
std::string print_interpretation(const FOInterpretation& I);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace spc
