#include "spc/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "spc/ground.hpp"
#include "spc/parser.hpp"

namespace spc {

std::string expectation_name(Expectation e) {
  switch (e) {
    case Expectation::SatEvidence:
      return "sat-evidence";
    case Expectation::UnsatEvidence:
      return "unsat-evidence";
    case Expectation::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(const Sexp& s, const std::string& msg, std::vector<std::string> exp = {}) {
  throw ParseError(s.span, msg, std::move(exp));
}

int number(const Sexp& s) {
  if (s.is_list || s.atom.empty()) fail(s, "expected a number", {"natural number"});
  for (char c : s.atom)
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(s, "expected a number", {"natural number"});
  return std::stoi(s.atom);
}

std::set<std::pair<int, int>> pairs(const Sexp& s) {
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 1; i < s.items.size(); ++i) {
    const Sexp& p = s.items[i];
    if (!p.is_list || p.items.size() != 2) fail(p, "expected a tile pair", {"(A B)"});
    out.insert({number(p.items[0]), number(p.items[1])});
  }
  return out;
}

const std::vector<std::string> kFields = {"(tiles", "(h", "(v", "(init", "(expect", "(bounds"};

}  // namespace

std::vector<ReductionCase> parse_cases(const std::string& text) {
  std::vector<ReductionCase> out;
  for (const auto& s : read_sexps(text)) {
    if (!s.headed("case") || s.items.size() < 2 || s.items[1].is_list) fail(s, "expected a case", {"(case NAME ...)"});
    ReductionCase c;
    c.name = s.items[1].atom;
    for (std::size_t i = 2; i < s.items.size(); ++i) {
      const Sexp& f = s.items[i];
      if (!f.is_list || f.items.empty() || f.items[0].is_list) fail(f, "expected a case field", kFields);
      const std::string& k = f.items[0].atom;
      if (k == "tiles" && f.items.size() == 2) {
        c.tiling.k = number(f.items[1]);
      } else if (k == "h") {
        c.tiling.h = pairs(f);
      } else if (k == "v") {
        c.tiling.v = pairs(f);
      } else if (k == "init") {
        c.tiling.init.clear();
        for (std::size_t j = 1; j < f.items.size(); ++j) c.tiling.init.push_back(number(f.items[j]));
      } else if (k == "expect" && f.items.size() == 2) {
        const std::string& e = f.items[1].atom;
        if (e == "sat-evidence") c.expected = Expectation::SatEvidence;
        else if (e == "unsat-evidence") c.expected = Expectation::UnsatEvidence;
        else if (e == "unknown") c.expected = Expectation::Unknown;
        else fail(f.items[1], "unknown expectation", {"sat-evidence", "unsat-evidence", "unknown"});
      } else if (k == "bounds" && f.items.size() == 3) {
        c.max_domain = number(f.items[1]);
        c.max_worlds = number(f.items[2]);
        if (c.max_domain < 1 || c.max_worlds < 1) fail(f, "bounds must be at least 1");
      } else {
        fail(f, "unknown or malformed case field", kFields);
      }
    }
    const auto& t = c.tiling;
    if (t.k < 1) fail(s, "a tiling needs at least one tile");
    if (t.init.empty()) fail(s, "a tiling needs an initial row", {"(init T...)"});
    auto in_range = [&](int x) { return x >= 1 && x <= t.k; };
    bool ok = std::all_of(t.init.begin(), t.init.end(), in_range);
    for (const auto* rel : {&t.h, &t.v})
      for (const auto& [a, b] : *rel) ok &= in_range(a) && in_range(b);
    if (!ok) fail(s, "tile numbers must lie between 1 and the tile count");
    out.push_back(std::move(c));
  }
  return out;
}

std::string print_case(const ReductionCase& c) {
  std::ostringstream os;
  os << "(case " << c.name << " (tiles " << c.tiling.k << ")";
  os << " (h";
  for (const auto& [a, b] : c.tiling.h) os << " (" << a << ' ' << b << ")";
  os << ") (v";
  for (const auto& [a, b] : c.tiling.v) os << " (" << a << ' ' << b << ")";
  os << ") (init";
  for (int t : c.tiling.init) os << ' ' << t;
  os << ") (expect " << expectation_name(c.expected) << ") (bounds " << c.max_domain << ' '
     << c.max_worlds << "))";
  return os.str();
}

std::string ReductionReport::text() const {
  std::ostringstream os;
  os << "(report " << name << " (expect " << expectation_name(expected) << ") (axioms " << axioms << ")";
  if (witness) os << " (witness " << witness->n() << ' ' << witness->num_worlds() << ")";
  else os << " (witness none)";
  os << " (agrees " << (agrees ? "yes" : "no") << ") (note \"" << note << "\"))";
  return os.str();
}

ReductionReport run_case(const ReductionCase& c, long long budget) {
  ReductionReport r;
  r.name = c.name;
  r.expected = c.expected;
  DLDocument doc = gen_exp_tiling_tbox(c.tiling);
  r.axioms = axiom_count(doc.sentence);
  F f = dl_pipeline(doc);
  BsatOptions opt;
  opt.budget = budget;
  opt.rigid = doc.header.rigid;
  r.witness = bounded_sat(f, c.max_domain, c.max_worlds, opt);
  const std::string bounds = std::to_string(c.max_domain) + "x" + std::to_string(c.max_worlds);
  switch (c.expected) {
    case Expectation::SatEvidence:
      r.agrees = r.witness.has_value();
      r.note = r.agrees ? "witness found, satisfiable" : "no witness within bounds " + bounds + ", expected one";
      break;
    case Expectation::UnsatEvidence:
      r.agrees = !r.witness;
      r.note = r.agrees ? "no witness within bounds " + bounds + ", evidence only"
                        : "witness found although none was expected";
      break;
    case Expectation::Unknown:
      r.note = r.witness ? "witness found" : "no witness within bounds " + bounds;
      break;
  }
  return r;
}

}  // namespace spc
