#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "seqsched/rational.hpp"

namespace seqsched {

// maximize objective . x  subject to  coef . x <= rhs (each row), x >= 0.
struct LpConstraint {
  std::vector<Rational> coef;
  Rational rhs;
};

struct LpProblem {
  int variables = 0;
  std::vector<LpConstraint> constraints;
  std::vector<Rational> objective;

  void add(std::vector<Rational> coef, Rational rhs) {
    coef.resize(static_cast<std::size_t>(variables));
    constraints.push_back({std::move(coef), rhs});
  }
};

enum class LpStatus { optimal, infeasible, unbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> witness;
  std::uint64_t pivots = 0;
};

inline Rational lp_objective_at(const LpProblem& lp, const std::vector<Rational>& x) {
  Rational v;
  for (int j = 0; j < lp.variables; ++j) v = v + lp.objective[j] * x[j];
  return v;
}

// Exact check: x >= 0 and every constraint holds.
inline bool lp_feasible_point(const LpProblem& lp, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != lp.variables) return false;
  for (const auto& v : x)
    if (v.sign() < 0) return false;
  for (const auto& c : lp.constraints) {
    Rational lhs;
    for (int j = 0; j < lp.variables; ++j) lhs = lhs + c.coef[j] * x[j];
    if (lhs > c.rhs) return false;
  }
  return true;
}

namespace detail {

// Dense tableau, columns: variables, slacks, artificials.
class Tableau {
 public:
  explicit Tableau(const LpProblem& lp) : nv_(lp.variables), nr_(static_cast<int>(lp.constraints.size())) {
    for (const auto& c : lp.constraints)
      if (c.rhs.sign() < 0) ++na_;
    cols_ = nv_ + nr_ + na_;
    a_.assign(static_cast<std::size_t>(nr_), std::vector<Rational>(static_cast<std::size_t>(cols_)));
    rhs_.resize(static_cast<std::size_t>(nr_));
    basis_.resize(static_cast<std::size_t>(nr_));
    int art = nv_ + nr_;
    for (int i = 0; i < nr_; ++i) {
      const auto& c = lp.constraints[i];
      const bool flip = c.rhs.sign() < 0;
      const Rational s = flip ? Rational(-1) : Rational(1);
      for (int j = 0; j < nv_; ++j) a_[i][j] = s * c.coef[j];
      a_[i][nv_ + i] = s;
      rhs_[i] = s * c.rhs;
      if (flip) {
        a_[i][art] = Rational(1);
        basis_[i] = art++;
      } else {
        basis_[i] = nv_ + i;
      }
    }
  }

  // Returns false if unbounded. Columns >= limit never enter.
  bool optimize(const std::vector<Rational>& cost, int limit, std::uint64_t& pivots) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < limit && enter < 0; ++j) {
        if (is_basic(j)) continue;
        Rational d = cost[j];
        for (int i = 0; i < nr_; ++i)
          if (!a_[i][j].is_zero()) d = d - cost[basis_[i]] * a_[i][j];
        if (d.sign() > 0) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < nr_; ++i) {
        if (a_[i][enter].sign() <= 0) continue;
        const Rational ratio = rhs_[i] / a_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void pivot(int r, int c) {
    const Rational inv = a_[r][c].reciprocal();
    for (auto& v : a_[r]) v = v * inv;
    rhs_[r] = rhs_[r] * inv;
    for (int i = 0; i < nr_; ++i) {
      if (i == r || a_[i][c].is_zero()) continue;
      const Rational f = a_[i][c];
      for (int j = 0; j < cols_; ++j)
        if (!a_[r][j].is_zero()) a_[i][j] = a_[i][j] - f * a_[r][j];
      rhs_[i] = rhs_[i] - f * rhs_[r];
    }
    basis_[r] = c;
  }

  // Moves zero-level artificials out of the basis; drops redundant rows.
  void expel_artificials() {
    const int first_art = nv_ + nr0();
    for (int i = 0; i < nr_;) {
      if (basis_[i] < first_art) {
        ++i;
        continue;
      }
      int c = -1;
      for (int j = 0; j < first_art && c < 0; ++j)
        if (!is_basic(j) && !a_[i][j].is_zero()) c = j;
      if (c >= 0) {
        pivot(i, c);
        ++i;
      } else {
        a_.erase(a_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --nr_;
      }
    }
  }

  Rational value(const std::vector<Rational>& cost) const {
    Rational v;
    for (int i = 0; i < nr_; ++i) v = v + cost[basis_[i]] * rhs_[i];
    return v;
  }

  std::vector<Rational> point() const {
    std::vector<Rational> x(static_cast<std::size_t>(nv_));
    for (int i = 0; i < nr_; ++i)
      if (basis_[i] < nv_) x[basis_[i]] = rhs_[i];
    return x;
  }

  int slack_end() const { return nv_ + nr0(); }
  int artificials() const { return na_; }
  int columns() const { return cols_; }

 private:
  bool is_basic(int j) const {
    for (int b : basis_)
      if (b == j) return true;
    return false;
  }
  int nr0() const { return cols_ - nv_ - na_; }

  int nv_;
  int nr_;
  int na_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
};

}  // namespace detail

// Two-phase primal simplex over exact rationals, Bland's rule throughout.
inline LpResult simplex_solve(const LpProblem& lp) {
  if (static_cast<int>(lp.objective.size()) != lp.variables) {
    throw std::invalid_argument("objective length differs from variable count");
  }
  for (const auto& c : lp.constraints) {
    if (static_cast<int>(c.coef.size()) != lp.variables) {
      throw std::invalid_argument("constraint length differs from variable count");
    }
  }
  detail::Tableau t(lp);
  LpResult r;
  const int n_struct = t.slack_end();
  if (t.artificials() > 0) {
    std::vector<Rational> phase1(static_cast<std::size_t>(t.columns()));
    for (int j = n_struct; j < t.columns(); ++j) phase1[j] = Rational(-1);
    t.optimize(phase1, t.columns(), r.pivots);
    if (t.value(phase1).sign() < 0) {
      r.status = LpStatus::infeasible;
      return r;
    }
    t.expel_artificials();
  }
  std::vector<Rational> cost(static_cast<std::size_t>(t.columns()));
  for (int j = 0; j < lp.variables; ++j) cost[j] = lp.objective[j];
  if (!t.optimize(cost, n_struct, r.pivots)) {
    r.status = LpStatus::unbounded;
    return r;
  }
  r.status = LpStatus::optimal;
  r.witness = t.point();
  r.value = lp_objective_at(lp, r.witness);
  return r;
}

}  // namespace seqsched
