#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "seqsched/core.hpp"
#include "seqsched/nash.hpp"

using namespace seqsched;

TEST(Core, LoadsIncludeInitialLoads) {
  const Instance inst({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}, {Rational(5), Rational(0)});
  const LoadVector l = loads(inst, Schedule{0, 1});
  EXPECT_EQ(l[0], Rational(6));
  EXPECT_EQ(l[1], Rational(4));
  EXPECT_EQ(makespan(inst, Schedule{0, 1}), Rational(6));
}

TEST(Core, RejectsMalformedInstances) {
  EXPECT_THROW(Instance(std::vector<std::vector<Rational>>{}), std::invalid_argument);
  EXPECT_THROW(Instance({{Rational(1)}, {Rational(1), Rational(2)}}), std::invalid_argument);
  EXPECT_THROW(Instance({{Rational(-1)}}), std::invalid_argument);
  EXPECT_THROW(Instance({{Rational(1)}}, {Rational(1), Rational(2)}), std::invalid_argument);
}

TEST(Core, OptMatchesExhaustiveSearch) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + trial % 2;
    const int n = 1 + trial % 6;
    const Instance inst = oracle::random_instance(rng, m, n, 9);
    const OptResult r = opt(inst);
    EXPECT_EQ(r.makespan, oracle::opt(inst));
    EXPECT_EQ(makespan(inst, r.schedule), r.makespan);
  }
}

TEST(Core, OptWitnessIsLexicographicallySmallest) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = oracle::random_instance(rng, 2, 5, 4);
    const Rational best = oracle::opt(inst);
    Schedule first;
    oracle::all_schedules(5, 2, [&](const Schedule& s) {
      if (first.empty() && oracle::span(inst, s) == best) first = s;
    });
    EXPECT_EQ(opt(inst).schedule, first);
  }
}

TEST(Core, ConstrainedOptRespectsFixedJobs) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = oracle::random_instance(rng, 3, 4, 9);
    const PartialSchedule fixed = PartialSchedule(4).with(1, 2).with(3, 0);
    const OptResult r = constrained_opt(inst, fixed);
    EXPECT_EQ(r.schedule[1], 2);
    EXPECT_EQ(r.schedule[3], 0);
    std::optional<Rational> best;
    oracle::all_schedules(4, 3, [&](const Schedule& s) {
      if (s[1] != 2 || s[3] != 0) return;
      const Rational v = oracle::span(inst, s);
      if (!best || v < *best) best = v;
    });
    EXPECT_EQ(r.makespan, *best);
  }
}

TEST(Core, BudgetGuard) {
  const Instance inst(std::vector<std::vector<Rational>>(3, std::vector<Rational>(30, Rational(1))));
  EXPECT_THROW(opt(inst), BudgetExceeded);
}

TEST(Core, ScheduleCodes) {
  const Schedule s{1, 0, 2, 1};
  const auto code = schedule_code(s, 3);
  EXPECT_EQ(code, 1u * 27 + 0 * 9 + 2 * 3 + 1);
  EXPECT_EQ(schedule_from_code(code, 4, 3), s);
  EXPECT_EQ(format_schedule(s), "(M2,M1,M3,M2)");
}

TEST(Nash, MatchesExhaustiveCheck) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = oracle::random_instance(rng, 2 + trial % 2, 1 + trial % 5, 6);
    std::vector<Schedule> expected;
    oracle::all_schedules(inst.jobs(), inst.machines(), [&](const Schedule& s) {
      if (oracle::is_nash(inst, s)) expected.push_back(s);
    });
    EXPECT_EQ(pure_nash(inst), expected);
  }
}
