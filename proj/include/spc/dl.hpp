// Standpoint description logics: ASTs, the .spd grammar, translation into standpoint C2,
// a direct evaluator, normal forms and role-axiom elimination.
#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spc/parser.hpp"
#include "spc/structure.hpp"
#include "spc/syntax.hpp"

namespace spc {

struct RoleExpr;
using Role = std::shared_ptr<const RoleExpr>;

struct RoleExpr {
  enum class Kind { Name, Inverse, Not, And, Or };
  Kind kind;
  std::string name;  // Name
  Role a, b;         // Inverse(a), Not(a), And(a,b), Or(a,b)
};

Role role_name(const std::string& r);
Role role_inv(Role r);
Role role_not(Role r);
Role role_and(Role a, Role b);
Role role_or(Role a, Role b);
bool role_equal(const Role& a, const Role& b);

struct ConceptExpr;
using Concept = std::shared_ptr<const ConceptExpr>;

// Top, Bot, Or, Forall, AtMost and Box are kept as nodes so that normal forms stay readable;
// translation and evaluation treat them as the usual abbreviations.
struct ConceptExpr {
  enum class Kind { Top, Bot, Atomic, Nominal, Not, And, Or, AtLeast, AtMost, Forall, Self, Dia, Box };
  Kind kind;
  std::string name;  // Atomic, Nominal
  unsigned n = 0;    // AtLeast, AtMost
  Role role;         // AtLeast, AtMost, Forall, Self
  SpExpr sp;         // Dia, Box
  Concept a, b;
};

Concept c_top();
Concept c_bot();
Concept c_atomic(const std::string& a);
Concept c_nominal(const std::string& o);
Concept c_not(Concept c);
Concept c_and(Concept a, Concept b);
Concept c_or(Concept a, Concept b);
Concept c_atleast(unsigned n, Role r, Concept c);
Concept c_atmost(unsigned n, Role r, Concept c);
Concept c_exists(Role r, Concept c);
Concept c_forall(Role r, Concept c);
Concept c_self(Role r);
Concept c_dia(SpExpr e, Concept c);
Concept c_box(SpExpr e, Concept c);
bool concept_equal(const Concept& a, const Concept& b);
int concept_depth(const Concept& c);

struct DLSentenceNode;
using DL = std::shared_ptr<const DLSentenceNode>;

struct DLSentenceNode {
  enum class Kind { GCI, RIA, Not, And, Or, Dia, Box };
  Kind kind;
  Concept lhs, rhs;         // GCI
  std::vector<Role> chain;  // RIA
  std::string head;         // RIA
  SpExpr sp;                // Dia, Box
  DL a, b;
};

DL s_gci(Concept c, Concept d);
DL s_ria(std::vector<Role> chain, const std::string& head);
DL s_not(DL a);
DL s_and(DL a, DL b);
DL s_or(DL a, DL b);
DL s_dia(SpExpr e, DL a);
DL s_box(SpExpr e, DL a);
DL s_func(const std::string& role);
DL s_conj(const std::vector<DL>& parts);  // right-nested, at least one part
bool dl_equal(const DL& a, const DL& b);

enum class DLMode { ALCOIQBSelf, SROIQBs };

struct DLHeader {
  DLMode mode = DLMode::ALCOIQBSelf;
  std::set<std::string> nonsimple;
  std::vector<std::pair<std::string, std::string>> order;  // (R, S) means R precedes S
  std::set<std::string> rigid;
  bool operator==(const DLHeader&) const = default;
};

struct DLDocument {
  DLHeader header;
  DL sentence;
  Signature signature;  // concepts unary, roles binary
};

DLDocument parse_dl(const std::string& text);
std::string print_dl(const DLDocument& doc);
std::string print_role(const Role& r);
std::string print_concept(const Concept& c);
std::string print_dl_sentence(const DL& s);

Signature dl_signature(const DL& s);
// Role names occurring anywhere, including RIA heads.
std::set<std::string> role_names(const DL& s);

// Strict order on role names; simple roles precede every non-simple one.
class RoleOrder {
 public:
  RoleOrder(const DLHeader& h);
  bool simple(const std::string& r) const { return !nonsimple_.count(r); }
  bool simple(const Role& r) const;
  bool precedes(const std::string& r, const std::string& s) const;
  // Role expression R precedes name s: names and inverses by their name, boolean
  // expressions are simple.
  bool precedes(const Role& r, const std::string& s) const;
  void add_nonsimple(const std::string& r);
  void add(const std::string& r, const std::string& s);

 private:
  void close();
  std::set<std::string> nonsimple_;
  std::set<std::pair<std::string, std::string>> less_;
};

// Throws "non-simple role in restricted position" where SROIQB_s requires simple roles.
void check_simplicity(const DL& s, const DLHeader& h);

F rtrans(const std::string& z, const std::string& z2, const Role& r);
F ctrans(const std::string& z, const Concept& c);

struct DLTranslateOptions {
  // Role chains of any length, rendered with variables x0..xk. The output leaves C2.
  bool allow_chains = false;
};

F dl_to_fosl(const DL& s, const DLTranslateOptions& opt = {});

bool eval_role(const StandpointStructure& M, int world, int a, int b, const Role& r);
bool eval_dl(const StandpointStructure& M, int world, int elem, const Concept& c);
bool holds_dl(const StandpointStructure& M, int world, const DL& s);
// Truth of a sentence in every precisification.
bool models_dl(const StandpointStructure& M, const DL& s);

// Fresh symbols drawn while normalizing, so later steps avoid them too.
struct DLNames {
  std::set<std::string> taken;
  std::string take(const std::string& base);
  std::string take_numbered(const std::string& prefix);  // prefix1, prefix2, ...
  static DLNames from(const DL& s, const DLHeader& h);
};

Concept nnf_concept(const Concept& c);
DL nnf(const DL& s, DLHeader& h, DLNames& names);
DL nnf(const DL& s, DLHeader& h);
bool is_nnf(const DL& s);

struct RIA {
  std::vector<Role> chain;
  std::string head;
};

struct Separated {
  std::vector<RIA> ria_part;
  DL rest;
  std::map<std::string, std::string> lowered;   // non-simple R -> its lower copy
  std::vector<std::string> switches;            // one switch role per RIA occurrence
  std::vector<RIA> originals;                   // RIA occurrences, same order as switches
};

Separated separate_rias(const DL& s, DLHeader& h, DLNames& names);
Separated separate_rias(const DL& s, DLHeader& h);
DL ria_conj(const std::vector<RIA>& rias, const DL& rest);

DL compile_sh_rias(const std::vector<RIA>& ria_part, const DL& rest, const DLHeader& h,
                   DLNames& names);
DL compile_sh_rias(const std::vector<RIA>& ria_part, const DL& rest, const DLHeader& h);

// nnf, separate_rias, compile_sh_rias and dl_to_fosl in sequence.
F dl_pipeline(const DLDocument& doc);

// Pairs connected by the composed chain in one world, as an n*n table.
std::vector<uint8_t> chain_pairs(const StandpointStructure& M, int world, const std::vector<Role>& chain);

// Recomputes the roles in `heads` world by world as the least relations closed under the
// RIAs whose head is among them. With from_empty the current extensions are dropped first;
// otherwise they are kept as a starting point.
StandpointStructure close_roles(const StandpointStructure& M, const std::vector<RIA>& rias,
                                const std::set<std::string>& heads, bool from_empty);
// The completion recipe for separated forms: lower copies equal their role, each switch role
// is the identity in worlds where its RIA holds and empty elsewhere.
StandpointStructure extend_for_separation(const StandpointStructure& M, const Separated& sep);

struct TilingSystem {
  int k = 1;
  std::set<std::pair<int, int>> h, v;
  std::vector<int> init;
};

DLDocument gen_exp_tiling_tbox(const TilingSystem& t);
DLDocument gen_und_grid_gcis();
std::size_t axiom_count(const DL& s);

}  // namespace spc
