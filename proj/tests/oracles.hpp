#pragma once

// Brute-force reference implementations. They share only the data types
// with the library, never its algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "seqsched/core.hpp"
#include "seqsched/instance_io.hpp"
#include "seqsched/simplex.hpp"
#include "seqsched/tree.hpp"

namespace oracle {

using seqsched::AdaptiveTree;
using seqsched::Instance;
using seqsched::Rational;
using seqsched::Schedule;

inline std::vector<Rational> load_vector(const Instance& inst, const Schedule& s) {
  std::vector<Rational> l = inst.initial_loads();
  for (int j = 0; j < inst.jobs(); ++j) l[s[j]] += inst.time(s[j], j);
  return l;
}

inline Rational span(const Instance& inst, const Schedule& s) {
  const auto l = load_vector(inst, s);
  return *std::max_element(l.begin(), l.end());
}

inline void all_schedules(int n, int m, const std::function<void(const Schedule&)>& fn) {
  Schedule s(n, 0);
  while (true) {
    fn(s);
    int k = n - 1;
    while (k >= 0 && s[k] == m - 1) s[k--] = 0;
    if (k < 0) return;
    ++s[k];
  }
}

inline Rational opt(const Instance& inst) {
  std::optional<Rational> best;
  all_schedules(inst.jobs(), inst.machines(), [&](const Schedule& s) {
    const Rational v = span(inst, s);
    if (!best || v < *best) best = v;
  });
  return *best;
}

inline bool is_nash(const Instance& inst, const Schedule& s) {
  const auto l = load_vector(inst, s);
  for (int j = 0; j < inst.jobs(); ++j)
    for (int i = 0; i < inst.machines(); ++i)
      if (i != s[j] && l[i] + inst.time(i, j) < l[s[j]]) return false;
  return true;
}

// Every subgame-perfect outcome, found by enumerating complete strategy
// profiles (one machine per internal node) and keeping those in which no
// mover gains by switching at her node.
inline std::set<Schedule> spe_outcomes_by_profiles(const Instance& inst, const AdaptiveTree& tree) {
  const int m = inst.machines();
  const int n = inst.jobs();
  std::vector<int> internal;
  for (int v = 0; v < tree.node_count(); ++v)
    if (!tree.is_leaf(v)) internal.push_back(v);
  std::vector<int> pick(static_cast<std::size_t>(tree.node_count()), 0);
  std::set<Schedule> out;

  // Leaf reached from `v` by following the profile, given the history.
  std::function<Schedule(int, Schedule)> follow = [&](int v, Schedule s) {
    while (!tree.is_leaf(v)) {
      s[tree.player(v)] = pick[v];
      v = tree.child(v, pick[v]);
    }
    return s;
  };
  std::function<bool(int, Schedule)> stable = [&](int v, Schedule s) -> bool {
    if (tree.is_leaf(v)) return true;
    const int p = tree.player(v);
    std::vector<Rational> cost(m);
    for (int i = 0; i < m; ++i) {
      Schedule h = s;
      h[p] = i;
      cost[i] = load_vector(inst, follow(tree.child(v, i), h))[i];
    }
    for (int i = 0; i < m; ++i)
      if (cost[i] < cost[pick[v]]) return false;
    for (int i = 0; i < m; ++i) {
      Schedule h = s;
      h[p] = i;
      if (!stable(tree.child(v, i), h)) return false;
    }
    return true;
  };

  std::size_t total = 1;
  for (std::size_t k = 0; k < internal.size(); ++k) total *= static_cast<std::size_t>(m);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int v : internal) {
      pick[v] = static_cast<int>(c % m);
      c /= m;
    }
    const Schedule empty(n, -1);
    if (stable(tree.root(), empty)) out.insert(follow(tree.root(), empty));
  }
  return out;
}

// Every subgame-perfect outcome by the product definition: at each node,
// every tuple of child outcomes is tried and each child minimizing the
// mover's cost in that tuple contributes its outcome.
inline std::set<Schedule> spe_outcomes_by_product(const Instance& inst, const AdaptiveTree& tree) {
  const int m = inst.machines();
  std::function<std::set<Schedule>(int, const Schedule&)> rec = [&](int v, const Schedule& h) {
    if (tree.is_leaf(v)) return std::set<Schedule>{h};
    const int p = tree.player(v);
    std::vector<std::vector<Schedule>> kids(m);
    for (int i = 0; i < m; ++i) {
      Schedule g = h;
      g[p] = i;
      const auto sub = rec(tree.child(v, i), g);
      kids[i].assign(sub.begin(), sub.end());
    }
    std::set<Schedule> out;
    std::vector<std::size_t> idx(m, 0);
    while (true) {
      std::vector<Rational> cost(m);
      for (int i = 0; i < m; ++i) cost[i] = load_vector(inst, kids[i][idx[i]])[i];
      const Rational lo = *std::min_element(cost.begin(), cost.end());
      for (int i = 0; i < m; ++i)
        if (cost[i] == lo) out.insert(kids[i][idx[i]]);
      int k = m - 1;
      while (k >= 0 && idx[k] + 1 == kids[k].size()) idx[k--] = 0;
      if (k < 0) break;
      ++idx[k];
    }
    return out;
  };
  return rec(tree.root(), Schedule(inst.jobs(), -1));
}

// Preorder texts of every adaptive tree over `jobs` (bitmask).
inline std::vector<std::string> all_tree_texts(int jobs_mask, int n, int m,
                                               std::map<int, std::vector<std::string>>& memo) {
  if (auto it = memo.find(jobs_mask); it != memo.end()) return it->second;
  std::vector<std::string> out;
  if (jobs_mask == 0) {
    out.push_back(".");
  } else {
    for (int j = 0; j < n; ++j) {
      if (!((jobs_mask >> j) & 1)) continue;
      const auto subs = all_tree_texts(jobs_mask & ~(1 << j), n, m, memo);
      std::vector<std::size_t> idx(m, 0);
      while (true) {
        std::string s = "J" + std::to_string(j + 1) + "(";
        for (int i = 0; i < m; ++i) s += (i ? "," : "") + subs[idx[i]];
        out.push_back(s + ")");
        int k = m - 1;
        while (k >= 0 && idx[k] + 1 == subs.size()) idx[k--] = 0;
        if (k < 0) break;
        ++idx[k];
      }
    }
  }
  memo[jobs_mask] = out;
  return out;
}

inline std::vector<AdaptiveTree> all_trees(int n, int m) {
  std::map<int, std::vector<std::string>> memo;
  std::vector<AdaptiveTree> out;
  for (const auto& s : all_tree_texts((1 << n) - 1, n, m, memo)) out.push_back(AdaptiveTree::parse(s, n, m));
  return out;
}

// Gaussian elimination; nullopt if singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c].is_zero()) ++r;
    if (r == n) return std::nullopt;
    std::swap(a[r], a[c]);
    std::swap(b[r], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Maximum over all basic feasible points of a bounded LP; nullopt if none.
inline std::optional<Rational> lp_vertex_max(const seqsched::LpProblem& lp) {
  const int nv = lp.variables;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints) {
    rows.push_back(c.coef);
    rhs.push_back(c.rhs);
  }
  for (int j = 0; j < nv; ++j) {
    std::vector<Rational> e(nv);
    e[j] = Rational(-1);
    rows.push_back(e);
    rhs.push_back(Rational(0));
  }
  const int total = static_cast<int>(rows.size());
  std::optional<Rational> best;
  std::vector<int> pick(nv);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int k : pick) {
      a.push_back(rows[k]);
      b.push_back(rhs[k]);
    }
    if (auto x = solve_square(a, b)) {
      bool ok = true;
      for (int r = 0; r < total && ok; ++r) {
        Rational lhs;
        for (int j = 0; j < nv; ++j) lhs += rows[r][j] * (*x)[j];
        ok = lhs <= rhs[r];
      }
      if (ok) {
        Rational v;
        for (int j = 0; j < nv; ++j) v += lp.objective[j] * (*x)[j];
        if (!best || v > *best) best = v;
      }
    }
    int k = nv - 1;
    while (k >= 0 && pick[k] == total - nv + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int t = k + 1; t < nv; ++t) pick[t] = pick[t - 1] + 1;
  }
  return best;
}

inline Instance random_instance(std::mt19937_64& rng, int m, int n, int hi) {
  std::uniform_int_distribution<int> d(0, hi);
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n));
  for (auto& row : rows)
    for (auto& p : row) p = Rational(d(rng));
  return Instance(std::move(rows));
}

}  // namespace oracle
