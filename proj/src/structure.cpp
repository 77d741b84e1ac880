#include "spc/structure.hpp"

#include <algorithm>
#include <numeric>

namespace spc {

namespace {

std::size_t size_for(int arity, std::size_t n) {
  return arity == 2 ? n * n : (arity == 1 ? n : 1);
}

void sort_preds(std::vector<PredDecl>& preds) {
  std::sort(preds.begin(), preds.end(),
            [](const PredDecl& a, const PredDecl& b) { return a.name < b.name; });
}

int find_pred(const std::vector<PredDecl>& preds, const std::string& name) {
  auto it = std::lower_bound(preds.begin(), preds.end(), name,
                             [](const PredDecl& p, const std::string& s) { return p.name < s; });
  if (it == preds.end() || it->name != name) return -1;
  return static_cast<int>(it - preds.begin());
}

}  // namespace

StandpointStructure StandpointStructure::make(std::vector<std::string> domain,
                                              std::vector<std::string> worlds,
                                              std::vector<PredDecl> preds) {
  StandpointStructure M;
  M.domain = std::move(domain);
  M.worlds = std::move(worlds);
  sort_preds(preds);
  M.preds = std::move(preds);
  M.ext.assign(M.worlds.size(), {});
  for (auto& row : M.ext)
    for (const auto& p : M.preds) row.emplace_back(size_for(p.arity, M.domain.size()), 0);
  return M;
}

int StandpointStructure::pred_index(const std::string& name) const { return find_pred(preds, name); }

int StandpointStructure::elem_index(const std::string& name) const {
  auto it = std::find(domain.begin(), domain.end(), name);
  return it == domain.end() ? -1 : static_cast<int>(it - domain.begin());
}

int StandpointStructure::world_index(const std::string& name) const {
  auto it = std::find(worlds.begin(), worlds.end(), name);
  return it == worlds.end() ? -1 : static_cast<int>(it - worlds.begin());
}

std::size_t StandpointStructure::table_size(int p) const {
  return size_for(preds[p].arity, domain.size());
}

bool StandpointStructure::in_sigma(const std::string& sym, int w) const {
  if (sym == kUniversal) return true;
  auto it = sigma.find(sym);
  if (it == sigma.end()) throw Error("standpoint symbol without sigma entry: " + sym);
  return it->second[w];
}

int StandpointStructure::add_pred(const std::string& name, int arity) {
  if (pred_index(name) >= 0) throw Error("predicate already present: " + name);
  preds.push_back({name, arity});
  sort_preds(preds);
  int idx = pred_index(name);
  for (auto& row : ext) row.insert(row.begin() + idx, Table(size_for(arity, domain.size()), 0));
  return idx;
}

void StandpointStructure::validate() const {
  if (domain.empty()) throw Error("structure has an empty domain");
  if (worlds.empty()) throw Error("structure has no worlds");
  if (ext.size() != worlds.size()) throw Error("extension rows do not match worlds");
  for (const auto& [s, row] : sigma)
    if (row.size() != worlds.size()) throw Error("sigma row size mismatch for " + s);
  for (const auto& [c, d] : consts)
    if (d < 0 || d >= n()) throw Error("constant outside domain: " + c);
}

FOInterpretation FOInterpretation::make(std::vector<std::string> domain,
                                        std::vector<PredDecl> preds) {
  FOInterpretation I;
  I.domain = std::move(domain);
  sort_preds(preds);
  I.preds = std::move(preds);
  for (const auto& p : I.preds) I.ext.emplace_back(size_for(p.arity, I.domain.size()), 0);
  return I;
}

int FOInterpretation::pred_index(const std::string& name) const { return find_pred(preds, name); }

int FOInterpretation::add_pred(const std::string& name, int arity) {
  if (pred_index(name) >= 0) throw Error("predicate already present: " + name);
  preds.push_back({name, arity});
  sort_preds(preds);
  int idx = pred_index(name);
  ext.insert(ext.begin() + idx, Table(size_for(arity, domain.size()), 0));
  return idx;
}

StandpointStructure as_structure(const FOInterpretation& I, const std::string& world) {
  StandpointStructure M = StandpointStructure::make(I.domain, {world}, I.preds);
  M.ext[0] = I.ext;
  M.consts = I.consts;
  return M;
}

FOInterpretation as_interpretation(const StandpointStructure& M) {
  if (M.worlds.size() != 1) throw Error("an FO interpretation needs exactly one world");
  FOInterpretation I = FOInterpretation::make(M.domain, M.preds);
  I.ext = M.ext[0];
  I.consts = M.consts;
  return I;
}

bool same_structure(const StandpointStructure& a, const StandpointStructure& b) {
  return a.domain == b.domain && a.worlds == b.worlds && a.preds == b.preds &&
         a.sigma == b.sigma && a.consts == b.consts && a.ext == b.ext;
}

bool same_interpretation(const FOInterpretation& a, const FOInterpretation& b) {
  return a.domain == b.domain && a.preds == b.preds && a.consts == b.consts && a.ext == b.ext;
}

namespace {

bool preserves(const StandpointStructure& a, const StandpointStructure& b,
               const std::vector<int>& g) {
  for (const auto& [c, d] : a.consts)
    if (b.consts.at(c) != g[d]) return false;
  int n = a.n();
  for (int w = 0; w < a.num_worlds(); ++w)
    for (int p = 0; p < static_cast<int>(a.preds.size()); ++p) {
      int q = b.pred_index(a.preds[p].name);
      switch (a.preds[p].arity) {
        case 0:
          if (a.get(w, p) != b.get(w, q)) return false;
          break;
        case 1:
          for (int d = 0; d < n; ++d)
            if (a.get(w, p, d) != b.get(w, q, g[d])) return false;
          break;
        default:
          for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
              if (a.get(w, p, d, e) != b.get(w, q, g[d], g[e])) return false;
      }
    }
  return true;
}

}  // namespace

bool isomorphic(const StandpointStructure& a, const StandpointStructure& b) {
  if (a.n() != b.n() || a.num_worlds() != b.num_worlds() || a.preds != b.preds ||
      a.sigma != b.sigma)
    return false;
  for (const auto& [c, d] : a.consts)
    if (!b.consts.count(c)) return false;
  if (a.consts.size() != b.consts.size()) return false;
  std::vector<int> g(a.n());
  std::iota(g.begin(), g.end(), 0);
  do {
    if (preserves(a, b, g)) return true;
  } while (std::next_permutation(g.begin(), g.end()));
  return false;
}

bool isomorphic(const FOInterpretation& a, const FOInterpretation& b) {
  return isomorphic(as_structure(a), as_structure(b));
}

}  // namespace spc
