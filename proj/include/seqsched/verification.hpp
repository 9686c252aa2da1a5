#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "seqsched/constructions.hpp"
#include "seqsched/core.hpp"
#include "seqsched/lpsearch.hpp"
#include "seqsched/measures.hpp"
#include "seqsched/nash.hpp"
#include "seqsched/simplex.hpp"
#include "seqsched/spe.hpp"
#include "seqsched/tie_rules.hpp"

namespace seqsched {

struct VerificationCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string note;  // informational, never part of the verdict
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }
};

struct VerifyOptions {
  std::function<Instance(const Rational&)> thm1 = gen_thm1;
  std::uint64_t seed = 20240607;
  unsigned threads = 1;
  bool enforce_time_limits = true;
};

// Integer times drawn uniformly from [0, hi].
inline Instance random_instance(std::mt19937_64& rng, int machines, int jobs, int hi = 10) {
  std::uniform_int_distribution<int> d(0, hi);
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(machines),
                                          std::vector<Rational>(static_cast<std::size_t>(jobs)));
  for (auto& r : rows)
    for (auto& x : r) x = Rational(d(rng));
  return Instance(std::move(rows));
}

namespace detail {

struct CheckOutcome {
  std::string computed;
  bool pass = false;
  std::string note;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline Rational outcome_min(const OutcomeSet& set) { return best_outcome(set).makespan; }
inline Rational outcome_max(const OutcomeSet& set) { return worst_outcome(set).makespan; }

inline OutcomeSet order_set(const Instance& inst, const PlayerOrder& order) {
  return spe_outcome_set(inst, AdaptiveTree::from_order(order, inst.machines()), std::uint64_t{1} << 12);
}

inline CheckOutcome check_thm1(const VerifyOptions& o) {
  const Instance inst = o.thm1(Rational(1, 100));
  const auto tree = AdaptiveTree::from_order(PlayerOrder::identity(inst.jobs()), 2);
  const SpeOutcome s = spe(inst, tree, prefer_lowest());
  const Rational best = opt(inst).makespan;
  const MeasureReport spoa = spoa_fixed(inst, PlayerOrder::identity(inst.jobs()));
  const bool pass = format_schedule(s.schedule) == "(M1,M2,M1,M2,M2)" && s.makespan == Rational(387, 100) &&
                    best == Rational(1) && spoa.value == Ratio{false, Rational(387, 100)};
  return {"spe=" + format_schedule(s.schedule) + " makespan=" + s.makespan.to_string() + " opt=" +
              best.to_string() + " spoa=" + spoa.value.to_string(),
          pass, {}};
}

inline CheckOutcome check_thm2() {
  std::string out;
  bool pass = true;
  for (int k = 2; k <= 4; ++k) {
    const Instance inst = gen_thm2(k);
    const auto tree = AdaptiveTree::from_order(PlayerOrder::identity(inst.jobs()), 2);
    const Rational worst = outcome_max(spe_outcome_set(inst, tree));
    const Rational best = opt(inst).makespan;
    const Rational scripted = spe(inst, tree, scripted_rule_thm2(k)).makespan;
    pass = pass && worst == Rational(k + 2) && best == Rational(1) && scripted == Rational(k + 2);
    out += (k > 2 ? "; " : "") + std::string("k=") + std::to_string(k) + ": max=" + worst.to_string() +
           " opt=" + best.to_string() + " scripted=" + scripted.to_string();
  }
  return {out, pass, {}};
}

inline CheckOutcome check_thm3(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> njobs(4, 7);
  int bound_violations = 0;
  int group_violations = 0;
  int group_orders = 0;
  for (int it = 0; it < 200; ++it) {
    const int n = njobs(rng);
    const Instance inst = random_instance(rng, 2, n);
    const TwoGroupOrder g = thm3_groups(inst);
    const Rational best = outcome_min(order_set(inst, g.order));
    if (best > (Rational(n, 2) + 1) * g.opt_makespan) ++bound_violations;
    if (n > 5) continue;
    const Rational cap = Rational(static_cast<std::int64_t>(g.first.size()) + 1) * g.opt_makespan;
    std::vector<int> a = g.first;
    do {
      std::vector<int> b = g.second;
      do {
        std::vector<int> all = a;
        all.insert(all.end(), b.begin(), b.end());
        ++group_orders;
        if (outcome_min(order_set(inst, PlayerOrder(all))) > cap) ++group_violations;
      } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
  }
  return {"n/2+1 violations=" + std::to_string(bound_violations) + " (|G1|+1) violations=" +
              std::to_string(group_violations) + " over " + std::to_string(group_orders) + " orders",
          bound_violations == 0 && group_violations == 0, {}};
}

inline CheckOutcome check_thm4(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> njobs(1, 7);
  int spe_mismatch = 0;
  int set_mismatch = 0;
  int adaptive_mismatch = 0;
  int adaptive_runs = 0;
  for (int it = 0; it < 200; ++it) {
    const int n = njobs(rng);
    const Instance inst = random_instance(rng, 2, n);
    const Rational best = opt(inst).makespan;
    const Thm4Tree t = thm4_tree(inst);
    if (spe(inst, t.tree, prefer_recommended(t.recommended)).makespan != best) ++spe_mismatch;
    if (n > 5) continue;
    if (outcome_min(spe_outcome_set(inst, t.tree)) != best) ++set_mismatch;
    ++adaptive_runs;
    if (!(adaptive_spos(inst).value == Ratio{false, Rational(1)})) ++adaptive_mismatch;
  }
  return {"spe!=opt: " + std::to_string(spe_mismatch) + ", tree set min!=opt: " + std::to_string(set_mismatch) +
              ", adaptive_spos!=1: " + std::to_string(adaptive_mismatch) + " of " + std::to_string(adaptive_runs),
          spe_mismatch == 0 && set_mismatch == 0 && adaptive_mismatch == 0, {}};
}

inline CheckOutcome check_thm5() {
  const Rational eps(1, 10);
  const Instance inst = gen_thm5(eps);
  const MeasureReport r = adaptive_spos(inst);
  MeasureOptions worst;
  worst.ties = TieConvention::worst;
  const MeasureReport w = adaptive_spos(inst, worst);
  const bool consistent = Rational(59, 40) >= Rational(3, 2) - eps / 8;
  const bool pass = r.value == Ratio{false, Rational(59, 40)} && r.makespan == Rational(59, 10) &&
                    adaptive_tree_count(3, 3) == 24 && consistent;
  return {"adaptive_spos=" + r.value.to_string() + " witness makespan=" + r.makespan.to_string() + " over " +
              std::to_string(adaptive_tree_count(3, 3)) + " trees",
          pass,
          "worst-case ties within each tree give " + w.value.to_string() + " (makespan " + w.makespan.to_string() +
              ")"};
}

inline CheckOutcome check_appendix_d() {
  const DeviationReport r = appendix_d_check();
  const LoadVector want{Rational(10), Rational(9), Rational(6)};
  bool costs = r.jobs.size() == 3;
  std::string detail;
  for (const auto& j : r.jobs) {
    // the size-7 job moves to M1, the size-5 jobs to M2; both cost 7
    const int machine = j.job == 0 ? 0 : 1;
    bool found = false;
    for (const auto& d : j.deviations) {
      if (d.machine == machine && d.cost == Rational(7) && d.cost < j.home_cost) found = true;
    }
    costs = costs && found && j.improves;
    detail += " J" + std::to_string(j.job + 1) + (j.improves ? ":improves" : ":stays");
  }
  const bool pass = r.optimum.makespan == Rational(10) && r.optimum_loads == want && costs && !r.some_player_stays();
  return {"opt=" + r.optimum.makespan.to_string() + " loads=" + format_loads(r.optimum_loads) + detail, pass, {}};
}

inline CheckOutcome check_example1() {
  const auto eq = pure_nash(gen_example1(Rational(5)));
  std::string set;
  for (const auto& s : eq) set += (set.empty() ? "" : ",") + format_schedule(s);
  const PoaPosReport a = poa_pos(gen_example1(Rational(5)));
  const PoaPosReport b = poa_pos(gen_example1(Rational(100)));
  std::vector<std::string> names;
  for (const auto& s : eq) names.push_back(format_schedule(s));
  std::sort(names.begin(), names.end());
  const bool pass = names == std::vector<std::string>{"(M1,M2)", "(M2,M1)"} && a.poa == Ratio{false, Rational(5)} &&
                    a.pos == Ratio{false, Rational(1)} && b.poa == Ratio{false, Rational(100)} &&
                    b.pos == Ratio{false, Rational(1)};
  return {"nash={" + set + "} l=5: (" + a.poa.to_string() + "," + a.pos.to_string() + ") l=100: (" +
              b.poa.to_string() + "," + b.pos.to_string() + ")",
          pass, {}};
}

inline CheckOutcome check_counts() {
  const StructureFilter obs1{true, false, false};
  const std::uint64_t c3 = count_structures(3, obs1);
  const std::uint64_t c4 = count_structures(4, obs1);
  const std::uint64_t c5 = count_structures(5, obs1);
  const std::uint64_t s3 = enumerate_structures(3, obs1, [](const TreeStructure&) { return true; });
  const std::uint64_t s4 = enumerate_structures(4, obs1, [](const TreeStructure&) { return true; });
  std::uint64_t s5 = 0;
  enumerate_structures(5, obs1, [&](const TreeStructure& t) {
    s5 += obs1_consistent(t) ? 1 : 0;
    return true;
  });
  const std::uint64_t all5 = count_structures(5, {false, false, false});
  const bool pass = c3 == 48 && c4 == 2560 && c5 == 5505024 && s3 == c3 && s4 == c4 && s5 == c5 &&
                    all5 == (std::uint64_t{1} << 31) && c5 > 5'000'000 && c5 < 7'000'000;
  return {"n=3: " + std::to_string(c3) + " n=4: " + std::to_string(c4) + " n=5: " + std::to_string(c5) +
              " (streamed " + std::to_string(s5) + ") unpruned n=5: " + std::to_string(all5),
          pass, {}};
}

inline CheckOutcome check_lp(unsigned threads) {
  bool simplex_ok = true;
  {
    LpProblem a;
    a.variables = 2;
    a.objective = {Rational(1), Rational(0)};
    a.add({Rational(1), Rational(1)}, Rational(1));
    const LpResult r = simplex_solve(a);
    simplex_ok = simplex_ok && r.status == LpStatus::optimal && r.value == Rational(1) && lp_feasible_point(a, r.witness);
  }
  {
    LpProblem b;
    b.variables = 2;
    b.objective = {Rational(3), Rational(5)};
    b.add({Rational(1), Rational(0)}, Rational(4));
    b.add({Rational(0), Rational(2)}, Rational(12));
    b.add({Rational(3), Rational(2)}, Rational(18));
    const LpResult r = simplex_solve(b);
    simplex_ok = simplex_ok && r.status == LpStatus::optimal && r.value == Rational(36) &&
                 r.witness == std::vector<Rational>{Rational(2), Rational(6)};
  }
  {
    LpProblem c;
    c.variables = 1;
    c.objective = {Rational(1)};
    c.add({Rational(1)}, Rational(-1));
    simplex_ok = simplex_ok && simplex_solve(c).status == LpStatus::infeasible;
  }
  {
    LpProblem d;
    d.variables = 1;
    d.objective = {Rational(1)};
    simplex_ok = simplex_ok && simplex_solve(d).status == LpStatus::unbounded;
  }

  const TreeStructure thm1 = structure_from_spe(gen_thm1(Rational(1, 100)), prefer_lowest());
  const Instance flat = gen_thm1(Rational(0));
  const int opt_leaf = static_cast<int>(schedule_code(opt(flat).schedule, 2));
  const LpProblem lp = build_lp(thm1, opt_leaf, 1);
  std::vector<Rational> point;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 5; ++j) point.push_back(flat.time(i, j));
  const bool point_ok = lp_feasible_point(lp, point) && lp_objective_at(lp, point) == Rational(4);

  SearchOptions only;
  only.only_structure = thm1;
  only.only_opt_leaf = opt_leaf;
  const SearchResult restricted = lp_search(5, only);
  const bool restricted_ok = restricted.best && restricted.best->value >= Rational(4);

  bool prune_ok = true;
  bool round_trip_ok = true;
  std::string maxima;
  for (int n = 2; n <= 3; ++n) {
    SearchOptions on;
    on.threads = threads;
    SearchOptions off = on;
    off.filter = {false, false, true};
    const SearchResult a = lp_search(n, on);
    const SearchResult b = lp_search(n, off);
    prune_ok = prune_ok && a.best && b.best && a.best->value == b.best->value;
    for (const auto* r : {&a, &b}) {
      if (r->best) {
        const RoundTrip rt = witness_round_trip(*r->best);
        round_trip_ok = round_trip_ok && rt.ok && rt.leaf_makespan == r->best->value;
      }
    }
    maxima += " n=" + std::to_string(n) + ": " + (a.best ? a.best->value.to_string() : "-") + "/" +
              (b.best ? b.best->value.to_string() : "-");
  }
  return {"simplex=" + yes_no(simplex_ok) + " eps0 point feasible, objective 4=" + yes_no(point_ok) +
              " restricted search=" + (restricted.best ? restricted.best->value.to_string() : "-") +
              " pruned/unpruned max" + maxima + " round trip=" + yes_no(round_trip_ok),
          simplex_ok && point_ok && restricted_ok && prune_ok && round_trip_ok, {}};
}

inline CheckOutcome check_chain(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n5(1, 5);
  int chain_violations = 0;
  for (int it = 0; it < 100; ++it) {
    const Instance inst = random_instance(rng, 2, n5(rng));
    const Ratio a = adaptive_spos(inst).value;
    const Ratio s = spos(inst).value;
    const Ratio w = spoa_fixed(inst, PlayerOrder::identity(inst.jobs())).value;
    if (!(a <= s && s <= w)) ++chain_violations;
  }
  std::uniform_int_distribution<int> n4(1, 4);
  std::uniform_int_distribution<int> m3(1, 3);
  int no_nash_opt = 0;
  for (int it = 0; it < 100; ++it) {
    const int m = m3(rng);
    const Instance inst = random_instance(rng, m, n4(rng));
    const Rational best = opt(inst).makespan;
    bool found = false;
    for_each_schedule(inst.jobs(), m, [&](const Schedule& s) {
      if (!found && makespan(inst, s) == best && is_pure_nash(inst, s)) found = true;
    });
    if (!found) ++no_nash_opt;
  }
  return {"chain violations=" + std::to_string(chain_violations) +
              " instances without optimal Nash=" + std::to_string(no_nash_opt),
          chain_violations == 0 && no_nash_opt == 0, {}};
}

}  // namespace detail

// Runs every acceptance check. Each check records its own wall time and
// fails if it exceeds its budget (when enforced).
inline VerificationReport verify_paper(const VerifyOptions& o = {},
                                       const std::function<void(const VerificationCheck&)>& on_check = {}) {
  VerificationReport report;
  auto run = [&](std::string name, std::string expected, double limit, auto&& fn) {
    VerificationCheck c{std::move(name), std::move(expected), {}, false, 0, limit, {}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      detail::CheckOutcome out = fn();
      c.computed = std::move(out.computed);
      c.pass = out.pass;
      c.note = std::move(out.note);
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
      c.pass = false;
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.enforce_time_limits && c.seconds > limit) {
      c.pass = false;
      c.note += (c.note.empty() ? "" : "; ") + std::string("over time budget");
    }
    report.checks.push_back(c);
    if (on_check) on_check(report.checks.back());
  };

  run("thm1-five-jobs", "spe=(M1,M2,M1,M2,M2) makespan=387/100 opt=1 spoa=387/100", 1.0,
      [&] { return detail::check_thm1(o); });
  run("thm2-linear-family", "k=2,3,4: outcome-set max = k+2, opt = 1, scripted rule = k+2", 60.0,
      [] { return detail::check_thm2(); });
  run("thm3-two-group-order", "0 violations of (n/2+1)*OPT and (|G1|+1)*OPT", 120.0,
      [&] { return detail::check_thm3(o.seed); });
  run("thm4-adaptive-optimum", "spe = opt on 200 instances; adaptive_spos = 1 for n <= 5", 180.0,
      [&] { return detail::check_thm4(o.seed + 1); });
  run("thm5-three-machines", "adaptive_spos=59/40 witness makespan=59/10 over 24 trees", 5.0,
      [] { return detail::check_thm5(); });
  run("appendix-d-identical", "opt=10 loads=(10,9,6), every job has an improving deviation", 1.0,
      [] { return detail::check_appendix_d(); });
  run("example1-nash", "nash={(M1,M2),(M2,M1)} l=5: (5,1) l=100: (100,1)", 1.0,
      [] { return detail::check_example1(); });
  run("structure-counts", "48, 2560, 5505024; unpruned n=5: 2^31", 120.0, [] { return detail::check_counts(); });
  run("lp-search", "simplex suite, eps=0 point objective 4, restricted >= 4, pruning ON = OFF for n <= 3",
      120.0, [&] { return detail::check_lp(o.threads); });
  run("measure-chain", "adaptive <= spos <= spoa on 100 instances; optimal Nash exists on 100 instances", 120.0,
      [&] { return detail::check_chain(o.seed + 2); });
  return report;
}

}  // namespace seqsched
