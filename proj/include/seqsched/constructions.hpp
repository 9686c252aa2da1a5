#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "seqsched/core.hpp"
#include "seqsched/spe.hpp"
#include "seqsched/tree.hpp"

namespace seqsched {

// Two machines, five jobs; with lowest-machine ties the order J1..J5 ends
// at makespan 4 - 13 eps while OPT = 1.
inline Instance gen_thm1(const Rational& eps) {
  if (eps.sign() < 0 || eps >= Rational(1, 13)) {
    throw std::invalid_argument("gen_thm1 needs 0 <= eps < 1/13");
  }
  const Rational e = eps;
  return Instance({
      {3 - 11 * e, e, e, 1 - 2 * e, 2 - 8 * e},
      {e, 2 - 9 * e, 2 - 8 * e, 1 - 2 * e, 1 - 2 * e},
  });
}

// 3k-1 jobs on two machines: blocks (k-t+1, 0), (0, k-t), (0, k-t) for
// t = 0..k-2, then (1, 1) and (2, 1). OPT = 1; worst-tie SPE makespan k+2.
inline Instance gen_thm2(int k) {
  if (k < 2) throw std::invalid_argument("gen_thm2 needs k >= 2");
  std::vector<Rational> m1;
  std::vector<Rational> m2;
  for (int t = 0; t <= k - 2; ++t) {
    m1.insert(m1.end(), {Rational(k - t + 1), Rational(0), Rational(0)});
    m2.insert(m2.end(), {Rational(0), Rational(k - t), Rational(k - t)});
  }
  m1.insert(m1.end(), {Rational(1), Rational(2)});
  m2.insert(m2.end(), {Rational(1), Rational(1)});
  return Instance({m1, m2});
}

// Three machines and jobs where no adaptive tree reaches OPT = 4.
inline Instance gen_thm5(const Rational& eps) {
  if (eps.sign() < 0 || eps >= Rational(1)) throw std::invalid_argument("gen_thm5 needs 0 <= eps < 1");
  return Instance({
      {4 - eps, Rational(2), Rational(2)},
      {Rational(4), Rational(3), Rational(3)},
      {Rational(6), 6 - eps, 6 - eps},
  });
}

// Identical machines with initial loads (0, 2, 6) and jobs 7, 5, 5.
inline Instance gen_appendix_d() {
  const std::vector<Rational> row{7, 5, 5};
  return Instance({row, row, row}, {0, 2, 6});
}

// Two jobs, two machines: M1 = (1, l), M2 = (l, 1).
inline Instance gen_example1(const Rational& l) {
  if (l < Rational(1)) throw std::invalid_argument("gen_example1 needs l >= 1");
  return Instance({{Rational(1), l}, {l, Rational(1)}});
}

// The two-group ordering for two machines.
struct TwoGroupOrder {
  PlayerOrder order;
  std::vector<int> first;   // jobs of the optimum's less-populated machine
  std::vector<int> second;  // the rest
  int first_machine = 0;
  Rational opt_makespan;
};

// Jobs of the canonical optimum's machine with fewer jobs (ties: M1) in
// ascending index, followed by the remaining jobs in ascending index.
inline TwoGroupOrder thm3_groups(const Instance& inst) {
  if (inst.machines() != 2) throw std::invalid_argument("thm3_order needs m = 2");
  const OptResult best = opt(inst);
  const auto on_m1 = std::count(best.schedule.begin(), best.schedule.end(), 0);
  const auto on_m2 = static_cast<long>(best.schedule.size()) - on_m1;
  TwoGroupOrder g;
  g.first_machine = on_m2 < on_m1 ? 1 : 0;
  g.opt_makespan = best.makespan;
  for (int j = 0; j < inst.jobs(); ++j) {
    (best.schedule[j] == g.first_machine ? g.first : g.second).push_back(j);
  }
  std::vector<int> all = g.first;
  all.insert(all.end(), g.second.begin(), g.second.end());
  g.order = PlayerOrder(std::move(all));
  return g;
}

inline PlayerOrder thm3_order(const Instance& inst) { return thm3_groups(inst).order; }

// Adaptive tree in which backward induction (with ties broken toward the
// recommendation) implements an optimum on two machines. Per node: the
// recommended machine for the mover, the schedule her subtree implements
// and the constrained optimum makespan of the node's history.
struct Thm4Tree {
  AdaptiveTree tree;
  std::vector<int> recommended;        // per node id, -1 at leaves
  std::vector<Schedule> node_outcome;  // leaf implemented below each node
  std::vector<Rational> node_opt_makespan;
  int fallback_nodes = 0;  // histories where the first candidate did not work
  int failed_nodes = 0;    // histories where no mover reaches OPT_h
};

namespace detail {

// Plans a mover per history (partial assignment), memoized, then lays out
// the tree. A mover is accepted if backward induction over her two planned
// subtrees ends at makespan OPT_h; the construction's candidate is tried first,
// then the remaining jobs in index order.
class Thm4Builder {
 public:
  explicit Thm4Builder(const Instance& inst) : inst_(inst) {}

  Thm4Tree run() {
    Thm4Tree out{AdaptiveTree(inst_.jobs(), 2), {}, {}, {}, 0, 0};
    out.tree.set_root(layout(out, PartialSchedule(inst_.jobs())));
    out.fallback_nodes = fallbacks_;
    out.failed_nodes = failures_;
    return out;
  }

 private:
  struct Plan {
    int mover = -1;
    int recommended = -1;
    Schedule outcome;
    Rational opt_makespan;
  };

  const OptResult& copt(const PartialSchedule& fixed) {
    auto it = opt_cache_.find(fixed);
    if (it == opt_cache_.end()) it = opt_cache_.emplace(fixed, constrained_opt(inst_, fixed)).first;
    return it->second;
  }

  // J' (lowest free job on the non-bottleneck machine) if forcing it onto
  // the bottleneck keeps that load >= OPT_h, else J'' (lowest job the
  // forced optimum moves the other way); -1 if there is no J''. With no J'
  // any order works and the first free job is returned.
  int first_candidate(const PartialSchedule& fixed) {
    const OptResult& here = copt(fixed);
    const LoadVector l = loads(inst_, here.schedule);
    const int hi = l[1] > l[0] ? 1 : 0;
    const int lo = 1 - hi;
    int first_free = -1;
    int j_prime = -1;
    for (int j = 0; j < inst_.jobs(); ++j) {
      if (fixed.assigned(j)) continue;
      if (first_free < 0) first_free = j;
      if (j_prime < 0 && here.schedule[j] == lo) j_prime = j;
    }
    if (j_prime < 0) return first_free;
    const OptResult& forced = copt(fixed.with(j_prime, hi));
    if (loads(inst_, forced.schedule)[hi] >= here.makespan) return j_prime;
    for (int j = 0; j < inst_.jobs(); ++j) {
      if (!fixed.assigned(j) && forced.schedule[j] == lo && here.schedule[j] == hi) return j;
    }
    return -1;
  }

  // Backward induction at a node whose children are planned; ties go to
  // whichever child reaches the lower makespan (M1 if equal).
  Plan try_mover(const PartialSchedule& fixed, int j) {
    const Plan& a = plan(fixed.with(j, 0));
    const Plan& b = plan(fixed.with(j, 1));
    const Rational ca = loads(inst_, a.outcome)[0];
    const Rational cb = loads(inst_, b.outcome)[1];
    int pick = ca < cb ? 0 : 1;
    if (ca == cb) pick = makespan(inst_, b.outcome) < makespan(inst_, a.outcome) ? 1 : 0;
    Plan p;
    p.mover = j;
    p.recommended = pick;
    p.outcome = pick == 0 ? a.outcome : b.outcome;
    return p;
  }

  const Plan& plan(const PartialSchedule& fixed) {
    if (auto it = plans_.find(fixed); it != plans_.end()) return it->second;
    Plan best;
    if (fixed.complete()) {
      best.outcome = fixed.slots();
      best.opt_makespan = makespan(inst_, best.outcome);
    } else {
      const Rational target = copt(fixed).makespan;
      std::vector<int> order;
      const int first = first_candidate(fixed);
      if (first >= 0) order.push_back(first);
      for (int j = 0; j < inst_.jobs(); ++j)
        if (!fixed.assigned(j) && j != first) order.push_back(j);
      bool found = false;
      for (std::size_t k = 0; k < order.size() && !found; ++k) {
        Plan p = try_mover(fixed, order[k]);
        const bool hit = makespan(inst_, p.outcome) == target;
        if (k == 0 || hit) best = std::move(p);
        found = hit;
        if (hit && k > 0) ++fallbacks_;
      }
      if (!found) ++failures_;
      best.opt_makespan = target;
    }
    return plans_.emplace(fixed, std::move(best)).first->second;
  }

  int layout(Thm4Tree& out, const PartialSchedule& fixed) {
    const Plan p = plan(fixed);  // copy: the map may grow below
    int node;
    if (fixed.complete()) {
      node = out.tree.add_leaf();
    } else {
      const int kids[2] = {layout(out, fixed.with(p.mover, 0)), layout(out, fixed.with(p.mover, 1))};
      node = out.tree.add_node(p.mover, kids);
    }
    out.recommended.resize(node + 1, -1);
    out.node_outcome.resize(node + 1);
    out.node_opt_makespan.resize(node + 1);
    out.recommended[node] = p.recommended;
    out.node_outcome[node] = p.outcome;
    out.node_opt_makespan[node] = p.opt_makespan;
    return node;
  }

  const Instance& inst_;
  std::map<PartialSchedule, OptResult> opt_cache_;
  std::map<PartialSchedule, Plan> plans_;
  int fallbacks_ = 0;
  int failures_ = 0;
};

}  // namespace detail

inline Thm4Tree thm4_tree(const Instance& inst) {
  if (inst.machines() != 2) throw std::invalid_argument("thm4_tree needs m = 2");
  return detail::Thm4Builder(inst).run();
}

// Outcome of unilateral deviations from a constrained optimum: for every
// free job and every other machine, the job's load in the constrained
// optimum that forces it there.
struct DeviationReport {
  OptResult optimum;
  LoadVector optimum_loads;
  struct Deviation {
    int machine;
    Rational cost;
    Schedule witness;
    LoadVector loads;
  };
  struct Job {
    int job;
    int home;
    Rational home_cost;
    std::vector<Deviation> deviations;
    bool improves = false;  // some deviation costs strictly less than home
  };
  std::vector<Job> jobs;

  // True iff some free job has no improving deviation.
  bool some_player_stays() const {
    return std::any_of(jobs.begin(), jobs.end(), [](const Job& j) { return !j.improves; });
  }
};

inline DeviationReport deviation_check(const Instance& inst, const PartialSchedule& fixed) {
  DeviationReport r;
  r.optimum = constrained_opt(inst, fixed);
  r.optimum_loads = loads(inst, r.optimum.schedule);
  for (int j = 0; j < inst.jobs(); ++j) {
    if (fixed.assigned(j)) continue;
    DeviationReport::Job entry;
    entry.job = j;
    entry.home = r.optimum.schedule[j];
    entry.home_cost = r.optimum_loads[entry.home];
    for (int d = 0; d < inst.machines(); ++d) {
      if (d == entry.home) continue;
      const OptResult alt = constrained_opt(inst, fixed.with(j, d));
      LoadVector l = loads(inst, alt.schedule);
      const Rational cost = l[d];
      entry.improves = entry.improves || cost < entry.home_cost;
      entry.deviations.push_back({d, cost, alt.schedule, std::move(l)});
    }
    r.jobs.push_back(std::move(entry));
  }
  return r;
}

inline DeviationReport appendix_d_check() {
  const Instance inst = gen_appendix_d();
  return deviation_check(inst, PartialSchedule(inst.jobs()));
}

}  // namespace seqsched
