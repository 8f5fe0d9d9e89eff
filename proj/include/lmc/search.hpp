#pragma once

// Bounded backward proof search: iterative-deepening depth-first search over
// backward rule instances, invertible rules first, with per-branch caps on
// contraction and on angle-introducing steps, an ancestor loop check, a
// semantic pruning filter, failure memoization and a global node budget.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lmc/calculus.hpp"
#include "lmc/models.hpp"
#include "lmc/syntax.hpp"

namespace lmc {

struct SearchBudget {
  std::size_t max_depth = 14;
  std::size_t max_capC_per_branch = 1;
  std::size_t max_T_per_branch = 4;
  bool t_focus = true;
  std::size_t max_nodes = 1000000;
  // Prune goals that fail on a small model: sound, since derivable sequents
  // hold on every model of the axioms.
  bool semantic_filter = true;
};

struct SearchStats {
  std::size_t nodes = 0;
  bool budget_hit = false;  // some cutoff (depth/caps/nodes) pruned a branch
};

namespace detail {

inline int rule_priority(RuleId r) {
  switch (r) {
    case RuleId::init: case RuleId::oneR: case RuleId::botL: case RuleId::topR: return 0;
    case RuleId::prodL: case RuleId::meetL: case RuleId::diaL: case RuleId::oneL: return 1;
    case RuleId::joinL: case RuleId::meetR: return 2;
    case RuleId::bboxR: return 3;
    case RuleId::oEps: case RuleId::epsO: return 4;
    case RuleId::diaR: return 5;
    case RuleId::prodR: return 6;
    case RuleId::bboxL: return 7;
    case RuleId::joinR1: case RuleId::joinR2: return 8;
    case RuleId::prodOne: case RuleId::oneProd: return 9;
    case RuleId::K: return 10;
    case RuleId::Four: return 11;
    case RuleId::oA_l2r: case RuleId::oA_r2l:
    case RuleId::capA_l2r: case RuleId::capA_r2l: return 12;
    case RuleId::capE: return 13;
    case RuleId::capW1: return 14;
    case RuleId::T: return 15;
    case RuleId::capC: return 16;
    default: return 99;
  }
}

// A failed subgoal, keyed together with its remaining rule caps. `clean`
// failures exhausted every alternative (no cutoff involved) and hold at any
// depth; others are valid only up to the recorded remaining depth.
struct FailNote {
  std::size_t remaining = 0;
  bool clean = false;
};

struct Searcher {
  const SearchBudget& budget;
  SearchStats& stats;
  const Model* filter = nullptr;
  std::unordered_map<std::string, FailNote>* memo = nullptr;
  std::unordered_map<std::string, bool>* sem_memo = nullptr;
  std::size_t loop_events = 0;

  bool plausible(const Sequent& s) {
    if (!filter) return true;
    std::string key = render(s);
    auto it = sem_memo->find(key);
    if (it != sem_memo->end()) return it->second;
    CheckOptions opt;
    opt.exhaustive_budget = 4096;
    opt.samples = 64;
    bool ok = check_sequent(*filter, s, opt).holds;
    (*sem_memo)[key] = ok;
    return ok;
  }

  std::optional<Deriv> dfs(const Sequent& goal, std::size_t depth, std::size_t capC_used,
                           std::size_t t_used, std::vector<std::string>& path) {
    if (stats.nodes >= budget.max_nodes) {
      stats.budget_hit = true;
      return std::nullopt;
    }
    if (depth >= budget.max_depth) {
      stats.budget_hit = true;
      return std::nullopt;
    }
    std::size_t remaining = budget.max_depth - depth;
    std::size_t capC_left = budget.max_capC_per_branch - capC_used;
    std::size_t t_left = budget.max_T_per_branch - t_used;

    std::string key = render(goal);
    std::string mkey =
        key + "#" + std::to_string(capC_left) + "#" + std::to_string(t_left);
    if (auto it = memo->find(mkey); it != memo->end()) {
      if (it->second.clean) return std::nullopt;
      if (remaining <= it->second.remaining) {
        stats.budget_hit = true;
        return std::nullopt;
      }
    }
    ++stats.nodes;  // memo hits and depth cutoffs are not expansions

    BackwardOptions bopt;
    bopt.allow_capC = capC_left > 0;
    bopt.allow_T = t_left > 0;
    bopt.t_focus = budget.t_focus;
    std::vector<BackwardInstance> insts = backward_instances(goal, bopt);
    std::stable_sort(insts.begin(), insts.end(),
                     [](const BackwardInstance& a, const BackwardInstance& b) {
                       return rule_priority(a.app.rule) < rule_priority(b.app.rule);
                     });

    bool cut_below_before = stats.budget_hit;
    stats.budget_hit = false;
    std::size_t loops_before = loop_events;

    path.push_back(key);
    for (const BackwardInstance& inst : insts) {
      std::size_t capC2 = capC_used + (inst.app.rule == RuleId::capC ? 1 : 0);
      std::size_t t2 = t_used + (inst.app.rule == RuleId::T ? 1 : 0);
      bool skip = false;
      for (const Sequent& prem : inst.premises) {
        if (std::find(path.begin(), path.end(), render(prem)) != path.end()) {
          ++loop_events;
          skip = true;
          break;
        }
        if (!plausible(prem)) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      std::vector<Deriv> sub;
      bool ok = true;
      for (const Sequent& prem : inst.premises) {
        auto r = dfs(prem, depth + 1, capC2, t2, path);
        if (!r) {
          ok = false;
          break;
        }
        sub.push_back(*r);
      }
      if (ok) {
        path.pop_back();
        stats.budget_hit = cut_below_before || stats.budget_hit;
        return mk(inst.app, std::move(sub));
      }
    }
    path.pop_back();

    bool cut_here = stats.budget_hit;
    bool loop_here = loop_events != loops_before;
    stats.budget_hit = cut_below_before || cut_here;
    // Loop-affected failures depend on the ancestor path and are not cached.
    if (!loop_here) {
      FailNote& note = (*memo)[mkey];
      if (!note.clean) {
        if (!cut_here) note = {remaining, true};
        else note.remaining = std::max(note.remaining, remaining);
      }
    }
    return std::nullopt;
  }
};

}  // namespace detail

// Iterative deepening over the depth limit: shallow proofs are found before
// deep branches can blow up, and an iteration that exhausts without hitting
// any cutoff settles non-derivability for the remaining budget.
inline std::optional<Deriv> prove(const Sequent& goal, const SearchBudget& budget = {},
                                  SearchStats* stats_out = nullptr) {
  static const Model filter_model = build_truncated_model("a", 1);
  const Model* filter = budget.semantic_filter ? &filter_model : nullptr;
  std::unordered_map<std::string, detail::FailNote> memo;
  std::unordered_map<std::string, bool> sem_memo;

  SearchStats total;
  std::optional<Deriv> r;
  if (filter) {
    detail::Searcher probe{budget, total, filter, &memo, &sem_memo};
    if (!probe.plausible(goal)) {
      // The goal itself fails on a model of the axioms: no proof exists.
      if (stats_out) *stats_out = total;
      return std::nullopt;
    }
  }
  for (std::size_t depth = 2; !r; depth += 2) {
    SearchBudget b = budget;
    b.max_depth = std::min(depth, budget.max_depth);
    if (total.nodes >= budget.max_nodes) {
      total.budget_hit = true;
      break;
    }
    b.max_nodes = budget.max_nodes - total.nodes;
    SearchStats stats;
    detail::Searcher s{b, stats, filter, &memo, &sem_memo};
    std::vector<std::string> path;
    r = s.dfs(goal, 0, 0, 0, path);
    total.nodes += stats.nodes;
    if (!r && !stats.budget_hit) {
      total.budget_hit = false;  // exhausted: settled, no proof
      break;
    }
    total.budget_hit = stats.budget_hit;
    if (depth >= budget.max_depth) break;
  }
  if (stats_out) *stats_out = total;
  return r;
}

// Proves both directions of an equation's sequent forms.
inline std::optional<std::vector<Deriv>> prove_equation(const Equation& e,
                                                        const SearchBudget& budget = {}) {
  std::vector<Deriv> out;
  for (const Sequent& s : flat(e)) {
    auto r = prove(s, budget);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return out;
}

}  // namespace lmc
