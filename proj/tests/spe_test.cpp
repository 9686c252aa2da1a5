#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "seqsched/constructions.hpp"
#include "seqsched/spe.hpp"
#include "seqsched/tie_rules.hpp"

using namespace seqsched;

namespace {

std::set<Schedule> library_set(const Instance& inst, const AdaptiveTree& tree) {
  std::set<Schedule> out;
  for (const auto& o : spe_outcome_set(inst, tree)) out.insert(o.schedule);
  return out;
}

}  // namespace

TEST(Spe, FiveJobLowestTies) {
  const Instance inst = gen_thm1(Rational(1, 100));
  const SpeOutcome o = spe(inst, AdaptiveTree::from_order(PlayerOrder::identity(5), 2), prefer_lowest());
  EXPECT_EQ(o.schedule, (Schedule{0, 1, 0, 1, 1}));
  EXPECT_EQ(o.makespan, Rational(387, 100));
  EXPECT_EQ(opt(inst).makespan, Rational(1));
  ASSERT_EQ(o.path.size(), 5u);
  EXPECT_EQ(o.costs[1], Rational(387, 100));
}

TEST(Spe, OutcomeSetMatchesProfileEnumerationOnOrders) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 2 + trial % 2;
    const int n = m == 2 ? 1 + trial % 5 : 1 + trial % 4;
    const Instance inst = oracle::random_instance(rng, m, n, 3);  // small range: many ties
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const AdaptiveTree tree = AdaptiveTree::from_order(PlayerOrder(perm), m);
    EXPECT_EQ(library_set(inst, tree), oracle::spe_outcomes_by_product(inst, tree)) << format_instance(inst);
  }
}

TEST(Spe, OutcomeSetMatchesProfileEnumerationOnAdaptiveTrees) {
  std::mt19937_64 rng(12);
  const auto trees = oracle::all_trees(3, 2);
  ASSERT_EQ(trees.size(), 12u);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = oracle::random_instance(rng, 2, 3, 3);
    for (const auto& tree : trees) EXPECT_EQ(library_set(inst, tree), oracle::spe_outcomes_by_profiles(inst, tree));
  }
}

TEST(Spe, ProductAndProfileOraclesAgree) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + trial % 2;
    const Instance inst = oracle::random_instance(rng, m, m == 2 ? 1 + trial % 4 : 1 + trial % 2, 2);
    const AdaptiveTree tree = AdaptiveTree::from_order(PlayerOrder::identity(inst.jobs()), m);
    EXPECT_EQ(oracle::spe_outcomes_by_product(inst, tree), oracle::spe_outcomes_by_profiles(inst, tree));
  }
}

TEST(Spe, DeterministicRuleLandsInOutcomeSet) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = oracle::random_instance(rng, 2, 4, 3);
    const AdaptiveTree tree = AdaptiveTree::from_order(PlayerOrder::identity(4), 2);
    const auto set = library_set(inst, tree);
    EXPECT_TRUE(set.count(spe(inst, tree, prefer_lowest()).schedule));
    EXPECT_TRUE(set.count(spe(inst, tree, prefer_highest()).schedule));
  }
}

TEST(Spe, RuleMustPickATiedMachine) {
  const Instance inst({{Rational(1)}, {Rational(1)}, {Rational(5)}});
  const AdaptiveTree tree = AdaptiveTree::from_order(PlayerOrder::identity(1), 3);
  const TieBreakRule bad = [](const TieContext&) { return 2; };
  EXPECT_THROW(spe(inst, tree, bad), ContractViolation);
}

TEST(Spe, RejectsMismatchedTree) {
  const Instance inst = gen_thm1(Rational(0));
  EXPECT_THROW(spe(inst, AdaptiveTree::from_order(PlayerOrder::identity(4), 2), prefer_lowest()), std::invalid_argument);
}

TEST(Spe, LinearFamilyScriptedRule) {
  for (int k = 2; k <= 4; ++k) {
    const Instance inst = gen_thm2(k);
    const AdaptiveTree tree = AdaptiveTree::from_order(PlayerOrder::identity(inst.jobs()), 2);
    EXPECT_EQ(spe(inst, tree, scripted_rule_thm2(k)).makespan, Rational(k + 2)) << "k=" << k;
    EXPECT_EQ(worst_outcome(spe_outcome_set(inst, tree)).makespan, Rational(k + 2)) << "k=" << k;
    EXPECT_EQ(opt(inst).makespan, Rational(1));
  }
}
