#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "seqsched/core.hpp"
#include "seqsched/tree.hpp"

namespace seqsched {

// One tied option offered to a tie-breaking rule: the machine and the leaf
// that backward induction reaches below it.
struct Continuation {
  int machine;
  Schedule leaf;
  LoadVector loads;
  Rational cost;  // mover's final cost at `leaf`
};

struct TieContext {
  int node;                       // tree node id
  int player;                     // job moving at `node`
  const PartialSchedule& history; // jobs that moved above `node`
  std::span<const Continuation> candidates;  // exactly the tied options, >= 2
};

// Deterministic tie resolution. Must return the machine of one candidate.
using TieBreakRule = std::function<int(const TieContext&)>;

struct PathStep {
  int node;
  int player;
  int machine;
};

struct SpeOutcome {
  Schedule schedule;
  LoadVector loads;
  Rational makespan;
  std::vector<Rational> costs;  // costs[j] = loads[schedule[j]]
  std::vector<PathStep> path;   // root-to-leaf moves
};

// Builds the outcome record for a leaf of `tree`, replaying its path.
inline SpeOutcome make_outcome(const Instance& inst, const AdaptiveTree& tree,
                               const Schedule& leaf) {
  SpeOutcome out;
  out.schedule = leaf;
  out.loads = loads(inst, leaf);
  out.makespan = max_load(out.loads);
  out.costs.reserve(leaf.size());
  for (int i : leaf) out.costs.push_back(out.loads[i]);
  for (int node = tree.root(); !tree.is_leaf(node);) {
    const int p = tree.player(node);
    out.path.push_back({node, p, leaf[p]});
    node = tree.child(node, leaf[p]);
  }
  return out;
}

struct SpeSolution {
  SpeOutcome outcome;
  std::vector<int> strategy;  // chosen machine per node id, -1 for leaves/unvisited
  std::uint64_t nodes_visited = 0;
};

// Backward induction: every mover picks the child whose continuation leaf
// gives her the smallest final load; exact ties go to `rule`.
inline SpeSolution spe_solve(const Instance& inst, const AdaptiveTree& tree,
                             const TieBreakRule& rule) {
  if (tree.jobs() != inst.jobs() || tree.machines() != inst.machines()) {
    throw std::invalid_argument("tree shape does not match instance");
  }
  tree.validate();
  const int m = inst.machines();

  struct Leaf {
    Schedule schedule;
    LoadVector loads;
  };

  SpeSolution sol;
  sol.strategy.assign(tree.node_count(), -1);
  PartialSchedule history(inst.jobs());
  LoadVector load = inst.initial_loads();

  auto solve = [&](auto&& self, int node) -> Leaf {
    if (tree.is_leaf(node)) return {history.slots(), load};
    ++sol.nodes_visited;
    const int j = tree.player(node);
    std::vector<Leaf> below;
    below.reserve(m);
    for (int c = 0; c < m; ++c) {
      history.assign(j, c);
      load[c] += inst.time(c, j);
      below.push_back(self(self, tree.child(node, c)));
      load[c] -= inst.time(c, j);
      history.unassign(j);
    }
    Rational best = below[0].loads[0];
    for (int c = 1; c < m; ++c) best = std::min(best, below[c].loads[c]);
    std::vector<int> tied;
    for (int c = 0; c < m; ++c)
      if (below[c].loads[c] == best) tied.push_back(c);

    int choice = tied.front();
    if (tied.size() > 1) {
      std::vector<Continuation> cands;
      cands.reserve(tied.size());
      for (int c : tied) cands.push_back({c, below[c].schedule, below[c].loads, best});
      choice = rule(TieContext{node, j, history, cands});
      if (std::find(tied.begin(), tied.end(), choice) == tied.end()) {
        throw ContractViolation("tie rule chose M" + std::to_string(choice + 1) + " for J" +
                                std::to_string(j + 1) + ", which is not a tied candidate");
      }
    }
    sol.strategy[node] = choice;
    return std::move(below[choice]);
  };

  const Leaf root = solve(solve, tree.root());
  sol.outcome = make_outcome(inst, tree, root.schedule);
  return sol;
}

inline SpeOutcome spe(const Instance& inst, const AdaptiveTree& tree, const TieBreakRule& rule) {
  return spe_solve(inst, tree, rule).outcome;
}

// All outcomes reachable under some arbitrary (per-history) tie resolution,
// sorted by schedule.
using OutcomeSet = std::vector<SpeOutcome>;

// Leaves m^n above which spe_outcome_set refuses to run (2^12 for m = 2).
inline constexpr std::uint64_t kDefaultOutcomeSetLeaves = 4096;

// Leaf-index form of the outcome set, shared by the measures. Child c's
// outcome o survives at a node iff the mover's cost at o does not exceed,
// for every other child c', the largest cost she can face below c'. That is
// exactly the set of argmin members over all combinations of one
// representative per child.
struct LeafTable {
  std::vector<Schedule> schedules;
  std::vector<LoadVector> loads;
};

inline std::vector<int> outcome_leaf_ids(const Instance& inst, const AdaptiveTree& tree,
                                         LeafTable& table, std::uint64_t max_leaves) {
  if (tree.jobs() != inst.jobs() || tree.machines() != inst.machines()) {
    throw std::invalid_argument("tree shape does not match instance");
  }
  if (saturating_pow(inst.machines(), inst.jobs()) > max_leaves) {
    throw BudgetExceeded("outcome-set enumeration bound exceeded: " +
                         std::to_string(inst.machines()) + "^" + std::to_string(inst.jobs()) +
                         " leaves > " + std::to_string(max_leaves));
  }
  tree.validate();
  const int m = inst.machines();
  PartialSchedule history(inst.jobs());
  LoadVector load = inst.initial_loads();

  auto solve = [&](auto&& self, int node) -> std::vector<int> {
    if (tree.is_leaf(node)) {
      table.schedules.push_back(history.slots());
      table.loads.push_back(load);
      return {static_cast<int>(table.schedules.size()) - 1};
    }
    const int j = tree.player(node);
    std::vector<std::vector<int>> below(m);
    std::vector<Rational> worst(m);
    for (int c = 0; c < m; ++c) {
      history.assign(j, c);
      load[c] += inst.time(c, j);
      below[c] = self(self, tree.child(node, c));
      load[c] -= inst.time(c, j);
      history.unassign(j);
      worst[c] = table.loads[below[c].front()][c];
      for (int id : below[c]) worst[c] = std::max(worst[c], table.loads[id][c]);
    }
    std::vector<int> out;
    for (int c = 0; c < m; ++c) {
      bool capped = false;
      Rational cap;
      for (int o = 0; o < m; ++o) {
        if (o == c) continue;
        if (!capped || worst[o] < cap) cap = worst[o];
        capped = true;
      }
      for (int id : below[c])
        if (!capped || table.loads[id][c] <= cap) out.push_back(id);
    }
    return out;
  };
  return solve(solve, tree.root());
}

inline OutcomeSet spe_outcome_set(const Instance& inst, const AdaptiveTree& tree,
                                  std::uint64_t max_leaves = kDefaultOutcomeSetLeaves) {
  LeafTable table;
  const auto ids = outcome_leaf_ids(inst, tree, table, max_leaves);
  OutcomeSet set;
  set.reserve(ids.size());
  for (int id : ids) set.push_back(make_outcome(inst, tree, table.schedules[id]));
  std::sort(set.begin(), set.end(),
            [](const SpeOutcome& a, const SpeOutcome& b) { return a.schedule < b.schedule; });
  return set;
}

inline const SpeOutcome& worst_outcome(const OutcomeSet& set) {
  // Largest makespan; earliest schedule among equals.
  auto it = std::max_element(set.begin(), set.end(), [](const SpeOutcome& a, const SpeOutcome& b) {
    return a.makespan < b.makespan;
  });
  return *it;
}

inline const SpeOutcome& best_outcome(const OutcomeSet& set) {
  auto it = std::min_element(set.begin(), set.end(), [](const SpeOutcome& a, const SpeOutcome& b) {
    return a.makespan < b.makespan;
  });
  return *it;
}

}  // namespace seqsched
