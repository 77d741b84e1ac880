// spc: command-line front end for the standpoint logic toolkit.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "spc/dl.hpp"
#include "spc/frugal.hpp"
#include "spc/ground.hpp"
#include "spc/parser.hpp"
#include "spc/removal.hpp"
#include "spc/semantics.hpp"
#include "spc/verify.hpp"

using namespace spc;

namespace {

// Thrown after a parse error has been rendered.
struct Reported {
  int code;
};

template <class Fn>
auto parse_file(const std::string& path, Fn fn) {
  std::string text = read_file(path);
  try {
    return fn(text);
  } catch (const ParseError& e) {
    std::cerr << path << ": " << render_error(e, text) << "\n";
    throw Reported{2};
  }
}

F load_formula(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return parse_formula(t).formula; });
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_file(out, text);
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string report_text(const F& f) {
  auto r = fragment_report(f);
  std::ostringstream os;
  os << "(c2 " << yes(r.is_c2) << ") (monodic " << yes(r.is_monodic) << ") (s5 " << yes(r.is_s5)
     << ") (nullary-free " << yes(r.nullary_free) << ") (constant-free " << yes(r.constant_free)
     << ") (frugal " << yes(r.is_frugal) << ") (size " << r.size << ")";
  if (is_sentence(f)) {
    auto d = dia_sets(f);
    os << " (dia " << d.dia.size() << ") (free-dia " << d.free_dia.size() << ")";
  }
  return os.str();
}

std::set<std::pair<int, int>> parse_pairs(const std::vector<std::string>& items) {
  std::set<std::pair<int, int>> out;
  for (const auto& s : items) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("pair", "expected A:B, got " + s);
    out.emplace(std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1)));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Standpoint logic toolkit: fragment checks, frugalization, standpoint removal, DL translation and bounded search"};
  app.require_subcommand(1);
  long long budget = default_budget();
  app.add_option("--budget", budget, "search budget (conflicts plus decisions)")->check(CLI::PositiveNumber);

  std::string input, output, model, world, suite = "all", emit_parts;
  bool show_params = false, fo = false, want_report = false;
  int max_domain = 3, max_worlds = 3;
  std::uint64_t seed = 7;
  std::string expect;
  std::vector<std::string> rigid;

  auto* check = app.add_subcommand("check", "print the fragment report of a formula and of its frugalized form");
  check->add_option("input", input, ".spf file")->required();

  auto* frug = app.add_subcommand("frugalize", "rewrite into the frugal fragment");
  frug->add_option("input", input, ".spf file")->required();
  frug->add_option("-o,--output", output, "output .spf; the ledger goes next to it with a .ledger suffix");

  auto* trans = app.add_subcommand("translate", "frugalize, then remove standpoints");
  trans->add_option("input", input, ".spf file")->required();
  trans->add_option("-o,--output", output, "output .spf");
  trans->add_option("--emit-parts", emit_parts, "write PREFIX.stack.spf, PREFIX.rigidity.spf and PREFIX.trans.spf");
  trans->add_flag("--params", show_params, "print l, m and the diamond-to-predicate map");

  auto* dl2 = app.add_subcommand("dl2fosl", "translate a DL document into a standpoint formula");
  dl2->add_option("input", input, ".spd file")->required();
  dl2->add_option("-o,--output", output, "output .spf");

  auto* ev = app.add_subcommand("eval", "evaluate a sentence in a structure");
  ev->add_option("formula", input, ".spf file")->required();
  ev->add_option("model", model, ".sps file")->required();
  ev->add_option("--world", world, "world name; all worlds when omitted");

  auto* bs = app.add_subcommand("bsat", "bounded model search");
  bs->add_option("input", input, ".spf file")->required();
  bs->add_option("--domain", max_domain, "largest domain")->check(CLI::PositiveNumber);
  bs->add_option("--worlds", max_worlds, "most worlds")->check(CLI::PositiveNumber);
  bs->add_flag("--fo", fo, "plain first-order search, prints an interpretation");
  bs->add_option("--rigid", rigid, "predicates with one extension in all worlds");
  bs->add_option("--expect", expect, "sat or unsat; exit 1 when the search disagrees")
      ->check(CLI::IsMember({"sat", "unsat"}));
  bs->add_option("-o,--output", output, "write the model here");

  auto* ver = app.add_subcommand("verify", "run property suites");
  ver->add_option("--suite", suite, "suite name or all");
  ver->add_option("--seed", seed, "corpus seed");
  ver->add_flag("--report", want_report, "print the full s-expression report");

  TilingSystem tiling;
  std::vector<std::string> hpairs, vpairs;
  auto* gt = app.add_subcommand("gen-tiling", "emit the exponential tiling TBox");
  gt->set_help_flag("--help", "print this help message and exit");
  gt->add_option("--k", tiling.k, "number of tiles")->required()->check(CLI::PositiveNumber);
  gt->add_option("--h", hpairs, "horizontally compatible pairs A:B");
  gt->add_option("--v", vpairs, "vertically compatible pairs A:B");
  gt->add_option("--init", tiling.init, "initial row");
  gt->add_option("-o,--output", output, "output .spd");

  auto* gg = app.add_subcommand("gen-grid", "emit the grid gadget GCIs");
  gg->add_option("-o,--output", output, "output .spd");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      F f = load_formula(input);
      std::cout << "(input " << report_text(f) << ")\n";
      if (is_sentence(f)) std::cout << "(frugalized " << report_text(frugalize(f).formula) << ")\n";
      return 0;
    }
    if (*frug) {
      auto t = frugalize(load_formula(input));
      emit(output, print_formula(t.formula) + "\n");
      if (!output.empty() && output != "-")
        write_file(std::filesystem::path(output).replace_extension(".ledger").string(), t.ledger.to_text());
      else
        std::cerr << t.ledger.to_text();
      return 0;
    }
    if (*trans) {
      F fr = frugalize(load_formula(input)).formula;
      auto parts = remove_standpoints_parts(fr);
      if (show_params) {
        std::cout << "(params (l " << parts.params.ell << ") (m " << parts.params.m << ")";
        for (const auto& [d, e] : parts.params.free_dia_index) std::cout << "\n  (" << e << " " << print_formula(d) << ")";
        std::cout << ")\n";
      }
      if (!emit_parts.empty()) {
        write_file(emit_parts + ".stack.spf", print_formula(parts.stack) + "\n");
        write_file(emit_parts + ".rigidity.spf", print_formula(parts.rigidity) + "\n");
        write_file(emit_parts + ".trans.spf", print_formula(parts.trans) + "\n");
      }
      if (!show_params || !output.empty()) emit(output, print_formula(parts.combined) + "\n");
      return 0;
    }
    if (*dl2) {
      auto doc = parse_file(input, [](const std::string& t) { return parse_dl(t); });
      emit(output, print_formula(dl_pipeline(doc)) + "\n");
      return 0;
    }
    if (*ev) {
      F f = load_formula(input);
      auto M = parse_file(model, [](const std::string& t) { return parse_structure(t); });
      bool holds;
      if (world.empty()) {
        holds = models(M, f);
      } else {
        int w = M.world_index(world);
        if (w < 0) throw Error("no world named " + world);
        holds = eval(M, w, {}, f);
      }
      std::cout << (holds ? "true" : "false") << "\n";
      return holds ? 0 : 1;
    }
    if (*bs) {
      F f = load_formula(input);
      BsatOptions o;
      o.budget = budget;
      o.rigid.insert(rigid.begin(), rigid.end());
      std::string found;
      if (fo) {
        if (auto I = bounded_sat_fo(f, max_domain, o)) found = print_interpretation(*I);
      } else if (auto M = bounded_sat(f, max_domain, max_worlds, o)) {
        found = print_structure(*M);
      }
      if (found.empty()) std::cout << "unsat within bounds\n";
      else emit(output, found + "\n");
      if (expect.empty()) return 0;
      return (expect == "sat") == !found.empty() ? 0 : 1;
    }
    if (*ver) {
      SuiteOptions opt;
      opt.seed = seed;
      opt.budget = budget;
      std::vector<std::string> names;
      if (suite == "all") names = suite_names();
      else names.push_back(suite);
      bool ok = true;
      for (const auto& n : names) {
        auto r = run_suite(n, opt);
        ok &= r.passed;
        if (want_report) {
          std::cout << r.text() << "\n";
        } else {
          std::cout << (r.passed ? "pass " : "FAIL ") << n;
          for (const auto& [k, v] : r.counts) std::cout << " " << k << "=" << v;
          std::cout << "\n";
          for (const auto& f : r.failures) std::cout << "  " << f << "\n";
        }
      }
      return ok ? 0 : 1;
    }
    if (*gt) {
      tiling.h = parse_pairs(hpairs);
      tiling.v = parse_pairs(vpairs);
      emit(output, print_dl(gen_exp_tiling_tbox(tiling)));
      return 0;
    }
    if (*gg) {
      emit(output, print_dl(gen_und_grid_gcis()));
      return 0;
    }
  } catch (const Reported& r) {
    return r.code;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
