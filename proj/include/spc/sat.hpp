// Small incremental CDCL solver used by the bounded model finder.
#pragma once

#include <cstdint>
#include <vector>

namespace spc::sat {

using Lit = int;  // 2*var for the positive literal, 2*var+1 for the negative one

inline Lit pos(int v) { return 2 * v; }
inline Lit neg(int v) { return 2 * v + 1; }
inline Lit negate(Lit l) { return l ^ 1; }
inline int var_of(Lit l) { return l >> 1; }
inline bool is_neg(Lit l) { return l & 1; }

enum class Result { Sat, Unsat, Budget };

class Solver {
 public:
  int new_var();
  int num_vars() const { return static_cast<int>(assign_.size()); }
  // Returns false once the clause set is unsatisfiable at level 0.
  bool add_clause(std::vector<Lit> lits);
  // budget is decremented per conflict and per decision.
  Result solve(const std::vector<Lit>& assumptions, long long& budget);
  bool model_value(int v) const { return model_[v]; }
  const std::vector<bool>& model() const { return model_; }
  bool okay() const { return ok_; }
  long long conflicts() const { return total_conflicts_; }

 private:
  struct Clause {
    std::vector<Lit> lits;
    bool learnt = false;
    bool deleted = false;
    double activity = 0;
  };
  enum : int8_t { kFalse = -1, kUndef = 0, kTrue = 1 };

  int8_t value(Lit l) const {
    int8_t a = assign_[var_of(l)];
    return is_neg(l) ? static_cast<int8_t>(-a) : a;
  }
  void enqueue(Lit l, int reason);
  int propagate();  // conflicting clause index or -1
  void analyze(int confl, std::vector<Lit>& learnt, int& bt_level);
  bool redundant(Lit l, uint32_t levels_mask);
  void backtrack(int level);
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }
  void attach(int ci);
  void bump_var(int v);
  void bump_clause(Clause& c);
  void decay();
  void reduce_db();
  int pick_branch();

  // binary heap over activity
  void heap_insert(int v);
  void heap_up(int i);
  void heap_down(int i);
  int heap_pop();
  bool heap_less(int a, int b) const { return activity_[a] > activity_[b]; }

  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> watches_;  // per literal: clause indices watching its negation
  std::vector<int8_t> assign_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<bool> phase_;
  std::vector<double> activity_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;
  std::vector<char> seen_;
  std::vector<int> analyze_clear_;
  std::vector<bool> model_;
  double var_inc_ = 1.0;
  double cla_inc_ = 1.0;
  bool ok_ = true;
  long long total_conflicts_ = 0;
  std::size_t learnt_count_ = 0;
  double max_learnts_ = 2000;
};

}  // namespace spc::sat
