#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "seqsched/simplex.hpp"

using namespace seqsched;

namespace {

LpProblem make(int vars, std::vector<Rational> objective) {
  LpProblem lp;
  lp.variables = vars;
  lp.objective = std::move(objective);
  return lp;
}

}  // namespace

TEST(Simplex, TextbookMaximum) {
  LpProblem lp = make(2, {Rational(3), Rational(5)});
  lp.add({Rational(1), Rational(0)}, Rational(4));
  lp.add({Rational(0), Rational(2)}, Rational(12));
  lp.add({Rational(3), Rational(2)}, Rational(18));
  const LpResult r = simplex_solve(lp);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, Rational(36));
  EXPECT_TRUE(lp_feasible_point(lp, r.witness));
}

TEST(Simplex, Infeasible) {
  LpProblem lp = make(1, {Rational(1)});
  lp.add({Rational(1)}, Rational(1));
  lp.add({Rational(-1)}, Rational(-2));
  EXPECT_EQ(simplex_solve(lp).status, LpStatus::infeasible);
}

TEST(Simplex, Unbounded) {
  LpProblem lp = make(2, {Rational(1), Rational(1)});
  lp.add({Rational(1), Rational(-1)}, Rational(1));
  EXPECT_EQ(simplex_solve(lp).status, LpStatus::unbounded);
}

TEST(Simplex, NegativeRightHandSide) {
  LpProblem lp = make(2, {Rational(-1), Rational(-1)});
  lp.add({Rational(-1), Rational(-1)}, Rational(-3, 2));
  lp.add({Rational(1), Rational(0)}, Rational(1));
  const LpResult r = simplex_solve(lp);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, Rational(-3, 2));
}

TEST(Simplex, DegenerateAndRedundantRows) {
  LpProblem lp = make(2, {Rational(1), Rational(1)});
  lp.add({Rational(1), Rational(1)}, Rational(0));
  lp.add({Rational(-1), Rational(-1)}, Rational(0));
  lp.add({Rational(2), Rational(2)}, Rational(0));
  const LpResult r = simplex_solve(lp);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, Rational(0));
}

TEST(Simplex, SizeMismatchRejected) {
  LpProblem lp = make(2, {Rational(1)});
  EXPECT_THROW(simplex_solve(lp), std::invalid_argument);
}

TEST(Simplex, AgreesWithVertexEnumeration) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> rhs(-3, 8);
  int infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int nv = 2 + trial % 3;
    const int rows = 1 + trial % 4;
    LpProblem lp = make(nv, {});
    for (int j = 0; j < nv; ++j) lp.objective.push_back(Rational(coef(rng)));
    for (int r = 0; r < rows; ++r) {
      std::vector<Rational> c;
      for (int j = 0; j < nv; ++j) c.push_back(Rational(coef(rng)));
      lp.add(std::move(c), Rational(rhs(rng)));
    }
    for (int j = 0; j < nv; ++j) {  // box keeps every LP bounded
      std::vector<Rational> c(nv);
      c[j] = Rational(1);
      lp.add(std::move(c), Rational(10));
    }
    const auto expected = oracle::lp_vertex_max(lp);
    const LpResult r = simplex_solve(lp);
    if (!expected) {
      ++infeasible;
      EXPECT_EQ(r.status, LpStatus::infeasible);
      continue;
    }
    ASSERT_EQ(r.status, LpStatus::optimal);
    EXPECT_EQ(r.value, *expected);
    EXPECT_TRUE(lp_feasible_point(lp, r.witness));
    EXPECT_EQ(lp_objective_at(lp, r.witness), r.value);
  }
  EXPECT_GT(infeasible, 0);
}
