#include "spc/sat.hpp"

#include <algorithm>

namespace spc::sat {

namespace {

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

}  // namespace

int Solver::new_var() {
  int v = num_vars();
  assign_.push_back(kUndef);
  level_.push_back(0);
  reason_.push_back(-1);
  phase_.push_back(false);
  activity_.push_back(0);
  seen_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_pos_.push_back(-1);
  heap_insert(v);
  return v;
}

void Solver::heap_insert(int v) {
  if (heap_pos_[v] >= 0) return;
  heap_pos_[v] = static_cast<int>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_pos_[v]);
}

void Solver::heap_up(int i) {
  int v = heap_[i];
  while (i > 0) {
    int p = (i - 1) / 2;
    if (!heap_less(v, heap_[p])) break;
    heap_[i] = heap_[p];
    heap_pos_[heap_[i]] = i;
    i = p;
  }
  heap_[i] = v;
  heap_pos_[v] = i;
}

void Solver::heap_down(int i) {
  int v = heap_[i];
  int n = static_cast<int>(heap_.size());
  for (;;) {
    int c = 2 * i + 1;
    if (c >= n) break;
    if (c + 1 < n && heap_less(heap_[c + 1], heap_[c])) ++c;
    if (!heap_less(heap_[c], v)) break;
    heap_[i] = heap_[c];
    heap_pos_[heap_[i]] = i;
    i = c;
  }
  heap_[i] = v;
  heap_pos_[v] = i;
}

int Solver::heap_pop() {
  int v = heap_[0];
  heap_pos_[v] = -1;
  int last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last] = 0;
    heap_down(0);
  }
  return v;
}

void Solver::bump_var(int v) {
  activity_[v] += var_inc_;
  if (activity_[v] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_pos_[v] >= 0) heap_up(heap_pos_[v]);
}

void Solver::bump_clause(Clause& c) {
  c.activity += cla_inc_;
  if (c.activity > 1e20) {
    for (auto& k : clauses_)
      if (k.learnt) k.activity *= 1e-20;
    cla_inc_ *= 1e-20;
  }
}

void Solver::decay() {
  var_inc_ /= 0.95;
  cla_inc_ /= 0.999;
}

void Solver::attach(int ci) {
  const auto& c = clauses_[ci].lits;
  watches_[negate(c[0])].push_back(ci);
  watches_[negate(c[1])].push_back(ci);
}

void Solver::enqueue(Lit l, int reason) {
  int v = var_of(l);
  assign_[v] = is_neg(l) ? kFalse : kTrue;
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(l);
}

bool Solver::add_clause(std::vector<Lit> lits) {
  if (!ok_) return false;
  backtrack(0);
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  std::vector<Lit> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i + 1 < lits.size() && lits[i + 1] == negate(lits[i])) return true;
    int8_t val = value(lits[i]);
    if (val == kTrue) return true;
    if (val == kUndef) kept.push_back(lits[i]);
  }
  if (kept.empty()) return ok_ = false;
  if (kept.size() == 1) {
    enqueue(kept[0], -1);
    if (propagate() >= 0) ok_ = false;
    return ok_;
  }
  clauses_.push_back({std::move(kept)});
  attach(static_cast<int>(clauses_.size()) - 1);
  return true;
}

int Solver::propagate() {
  while (qhead_ < trail_.size()) {
    Lit p = trail_[qhead_++];  // p became true; clauses watching negate(p) live in watches_[p]
    auto& ws = watches_[p];
    Lit false_lit = negate(p);
    std::size_t i = 0, j = 0;
    int confl = -1;
    while (i < ws.size()) {
      int ci = ws[i++];
      Clause& c = clauses_[ci];
      if (c.deleted) continue;
      auto& L = c.lits;
      if (L[0] == false_lit) std::swap(L[0], L[1]);
      if (value(L[0]) == kTrue) {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < L.size(); ++k) {
        if (value(L[k]) != kFalse) {
          std::swap(L[1], L[k]);
          watches_[negate(L[1])].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = ci;
      if (value(L[0]) == kFalse) {
        confl = ci;
        while (i < ws.size()) ws[j++] = ws[i++];
      } else {
        enqueue(L[0], ci);
      }
    }
    ws.resize(j);
    if (confl >= 0) return confl;
  }
  return -1;
}

bool Solver::redundant(Lit l, uint32_t levels_mask) {
  // iterative check that l is implied by literals already in the learnt clause
  std::vector<Lit> stack{l};
  std::size_t top = analyze_clear_.size();
  auto& touched = analyze_clear_;
  while (!stack.empty()) {
    int v = var_of(stack.back());
    stack.pop_back();
    int r = reason_[v];
    if (r < 0) {
      for (std::size_t t = top; t < touched.size(); ++t) seen_[touched[t]] = 0;
      touched.resize(top);
      return false;
    }
    for (Lit q : clauses_[r].lits) {
      int u = var_of(q);
      if (u == v || seen_[u] || level_[u] == 0) continue;
      if (reason_[u] >= 0 && ((levels_mask >> (level_[u] & 31)) & 1)) {
        seen_[u] = 1;
        touched.push_back(u);
        stack.push_back(q);
      } else {
        for (std::size_t t = top; t < touched.size(); ++t) seen_[touched[t]] = 0;
        touched.resize(top);
        return false;
      }
    }
  }
  return true;
}

void Solver::analyze(int confl, std::vector<Lit>& learnt, int& bt_level) {
  learnt.assign(1, 0);
  int counter = 0;
  Lit p = -1;
  int idx = static_cast<int>(trail_.size()) - 1;
  do {
    Clause& c = clauses_[confl];
    if (c.learnt) bump_clause(c);
    for (Lit q : c.lits) {
      if (p != -1 && q == p) continue;
      int v = var_of(q);
      if (!seen_[v] && level_[v] > 0) {
        seen_[v] = 1;
        bump_var(v);
        if (level_[v] >= decision_level()) ++counter;
        else learnt.push_back(q);
      }
    }
    while (!seen_[var_of(trail_[idx])]) --idx;
    p = trail_[idx--];
    confl = reason_[var_of(p)];
    seen_[var_of(p)] = 0;
    --counter;
  } while (counter > 0);
  learnt[0] = negate(p);

  uint32_t mask = 0;
  for (std::size_t i = 1; i < learnt.size(); ++i) mask |= 1u << (level_[var_of(learnt[i])] & 31);
  std::vector<Lit> all = learnt;
  std::size_t j = 1;
  for (std::size_t i = 1; i < learnt.size(); ++i)
    if (reason_[var_of(learnt[i])] < 0 || !redundant(learnt[i], mask)) learnt[j++] = learnt[i];
  learnt.resize(j);
  for (Lit q : all) seen_[var_of(q)] = 0;
  for (int v : analyze_clear_) seen_[v] = 0;
  analyze_clear_.clear();

  bt_level = 0;
  if (learnt.size() > 1) {
    std::size_t best = 1;
    for (std::size_t i = 2; i < learnt.size(); ++i)
      if (level_[var_of(learnt[i])] > level_[var_of(learnt[best])]) best = i;
    std::swap(learnt[1], learnt[best]);
    bt_level = level_[var_of(learnt[1])];
  }
}

void Solver::backtrack(int level) {
  if (decision_level() <= level) return;
  for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[level]; --i) {
    int v = var_of(trail_[i]);
    phase_[v] = !is_neg(trail_[i]);
    assign_[v] = kUndef;
    reason_[v] = -1;
    heap_insert(v);
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(level);
  qhead_ = trail_.size();
}

int Solver::pick_branch() {
  while (!heap_.empty()) {
    int v = heap_pop();
    if (assign_[v] == kUndef) return v;
  }
  return -1;
}

void Solver::reduce_db() {
  std::vector<int> learnts;
  for (int i = 0; i < static_cast<int>(clauses_.size()); ++i)
    if (clauses_[i].learnt && !clauses_[i].deleted && clauses_[i].lits.size() > 2) learnts.push_back(i);
  std::sort(learnts.begin(), learnts.end(),
            [&](int a, int b) { return clauses_[a].activity < clauses_[b].activity; });
  auto locked = [&](int ci) {
    Lit l = clauses_[ci].lits[0];
    return value(l) == kTrue && reason_[var_of(l)] == ci;
  };
  for (std::size_t k = 0; k < learnts.size() / 2; ++k) {
    int ci = learnts[k];
    if (locked(ci)) continue;
    clauses_[ci].deleted = true;
    clauses_[ci].lits.clear();
    clauses_[ci].lits.shrink_to_fit();
    --learnt_count_;
  }
  for (auto& ws : watches_)
    ws.erase(std::remove_if(ws.begin(), ws.end(), [&](int ci) { return clauses_[ci].deleted; }),
             ws.end());
}

Result Solver::solve(const std::vector<Lit>& assumptions, long long& budget) {
  backtrack(0);
  if (!ok_) return Result::Unsat;
  if (propagate() >= 0) {
    ok_ = false;
    return Result::Unsat;
  }
  std::vector<Lit> learnt;
  int restarts = 0;
  for (;;) {
    long long limit = static_cast<long long>(luby(2, restarts++) * 100);
    long long local = 0;
    for (;;) {
      int confl = propagate();
      if (confl >= 0) {
        ++total_conflicts_;
        ++local;
        if (--budget <= 0) {
          backtrack(0);
          return Result::Budget;
        }
        if (decision_level() == 0) {
          ok_ = false;
          return Result::Unsat;
        }
        int bt;
        analyze(confl, learnt, bt);
        backtrack(bt);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          clauses_.push_back({learnt, true, false, 0});
          int ci = static_cast<int>(clauses_.size()) - 1;
          attach(ci);
          bump_clause(clauses_[ci]);
          ++learnt_count_;
          enqueue(learnt[0], ci);
        }
        decay();
        continue;
      }
      if (local >= limit) {
        backtrack(0);
        break;
      }
      if (static_cast<double>(learnt_count_) > max_learnts_ + static_cast<double>(trail_.size())) {
        reduce_db();
        max_learnts_ *= 1.1;
      }
      Lit next = -1;
      while (decision_level() < static_cast<int>(assumptions.size())) {
        Lit a = assumptions[decision_level()];
        if (value(a) == kTrue) {
          trail_lim_.push_back(static_cast<int>(trail_.size()));
        } else if (value(a) == kFalse) {
          backtrack(0);
          return Result::Unsat;
        } else {
          next = a;
          break;
        }
      }
      if (next == -1) {
        int v = pick_branch();
        if (v < 0) {
          model_.assign(num_vars(), false);
          for (int u = 0; u < num_vars(); ++u) model_[u] = assign_[u] == kTrue;
          backtrack(0);
          return Result::Sat;
        }
        next = phase_[v] ? pos(v) : neg(v);
      }
      if (--budget <= 0) {
        backtrack(0);
        return Result::Budget;
      }
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      enqueue(next, -1);
    }
  }
}

}  // namespace spc::sat
