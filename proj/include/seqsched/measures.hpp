#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "seqsched/core.hpp"
#include "seqsched/nash.hpp"
#include "seqsched/spe.hpp"
#include "seqsched/tree.hpp"

namespace seqsched {

// makespan / OPT, with OPT = 0 handled explicitly: 0/0 is 1, x/0 is
// unbounded.
struct Ratio {
  bool unbounded = false;
  Rational value{1};

  static Ratio of(const Rational& makespan, const Rational& opt_makespan) {
    if (opt_makespan.is_zero()) {
      return makespan.is_zero() ? Ratio{false, Rational(1)} : Ratio{true, Rational(0)};
    }
    return Ratio{false, makespan / opt_makespan};
  }

  std::string to_string() const { return unbounded ? "unbounded" : value.to_string(); }
  std::string to_string_approx() const { return unbounded ? "unbounded" : with_approx(value); }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.unbounded == b.unbounded && (a.unbounded || a.value == b.value);
  }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    if (a.unbounded || b.unbounded) return !a.unbounded && b.unbounded;
    return a.value < b.value;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
};

struct MeasureReport {
  Ratio value;
  Rational makespan;      // witness outcome makespan
  Rational opt_makespan;
  std::optional<PlayerOrder> order;  // fixed-order witnesses
  std::optional<AdaptiveTree> tree;  // witness tree (always set)
  SpeOutcome outcome;
};

// Which member of an outcome set SPoS and adaptive SPoS charge to a tree.
enum class TieConvention { best, worst };

struct MeasureOptions {
  TieConvention ties = TieConvention::best;
  std::uint64_t max_leaves = kDefaultOutcomeSetLeaves;
  int max_jobs_spos = 7;
  std::uint64_t tree_budget = kDefaultSearchBudget;
  unsigned threads = 1;
};

// SPoA of one instance and order: worst outcome over arbitrary ties.
inline MeasureReport spoa_fixed(const Instance& inst, const PlayerOrder& order,
                                const MeasureOptions& opts = {}) {
  if (order.size() != inst.jobs()) throw std::invalid_argument("order length differs from n");
  const Rational best = opt(inst).makespan;
  AdaptiveTree tree = AdaptiveTree::from_order(order, inst.machines());
  const OutcomeSet set = spe_outcome_set(inst, tree, opts.max_leaves);
  const SpeOutcome& worst = worst_outcome(set);
  MeasureReport r;
  r.value = Ratio::of(worst.makespan, best);
  r.makespan = worst.makespan;
  r.opt_makespan = best;
  r.order = order;
  r.outcome = worst;
  r.tree = std::move(tree);
  return r;
}

namespace detail {

inline Rational order_makespan(const Instance& inst, const PlayerOrder& order,
                               std::uint64_t max_leaves, TieConvention ties) {
  const AdaptiveTree tree = AdaptiveTree::from_order(order, inst.machines());
  LeafTable table;
  const auto ids = outcome_leaf_ids(inst, tree, table, max_leaves);
  Rational v = max_load(table.loads[ids.front()]);
  for (int id : ids) {
    const Rational mk = max_load(table.loads[id]);
    v = ties == TieConvention::best ? std::min(v, mk) : std::max(v, mk);
  }
  return v;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

// SPoS of one instance: best order; ties per opts.ties. Witness is the
// lexicographically first order attaining the minimum.
inline MeasureReport spos(const Instance& inst, const MeasureOptions& opts = {}) {
  const int n = inst.jobs();
  if (n > opts.max_jobs_spos) {
    throw BudgetExceeded("spos enumerates n! orders; n = " + std::to_string(n) + " exceeds " +
                         std::to_string(opts.max_jobs_spos));
  }
  std::vector<std::vector<int>> orders;
  orders.reserve(detail::factorial(n));
  std::vector<int> perm(n);
  for (int j = 0; j < n; ++j) perm[j] = j;
  do {
    orders.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Rational> value(orders.size());
  detail::parallel_for(orders.size(), opts.threads, [&](std::size_t i) {
    value[i] = detail::order_makespan(inst, PlayerOrder(orders[i]), opts.max_leaves, opts.ties);
  });
  const std::size_t arg = static_cast<std::size_t>(
      std::min_element(value.begin(), value.end()) - value.begin());

  const PlayerOrder order(orders[arg]);
  AdaptiveTree tree = AdaptiveTree::from_order(order, inst.machines());
  const OutcomeSet set = spe_outcome_set(inst, tree, opts.max_leaves);
  MeasureReport r;
  r.opt_makespan = opt(inst).makespan;
  r.outcome = opts.ties == TieConvention::best ? best_outcome(set) : worst_outcome(set);
  r.makespan = r.outcome.makespan;
  r.value = Ratio::of(r.makespan, r.opt_makespan);
  r.order = order;
  r.tree = std::move(tree);
  return r;
}

// Number of valid adaptive trees: f(0) = 1, f(r) = r * f(r-1)^m.
// Saturates at UINT64_MAX.
inline std::uint64_t adaptive_tree_count(int n, int m) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t f = 1;
  for (int r = 1; r <= n; ++r) {
    const std::uint64_t pw = saturating_pow(f, m);
    if (pw == kMax || (pw != 0 && static_cast<std::uint64_t>(r) > kMax / pw)) return kMax;
    f = static_cast<std::uint64_t>(r) * pw;
  }
  return f;
}

namespace detail {

// Fixed-width leaf bitset for the adaptive search (m^n <= 256).
struct LeafSet {
  std::array<std::uint64_t, 4> words{};
  void set(int leaf) { words[leaf >> 6] |= std::uint64_t{1} << (leaf & 63); }
  friend bool operator==(const LeafSet&, const LeafSet&) = default;
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int w = 0; w < 4; ++w) {
      for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1) {
        fn(w * 64 + std::countr_zero(bits));
      }
    }
  }
};

struct LeafSetHash {
  std::size_t operator()(const LeafSet& s) const noexcept {
    std::size_t h = 0;
    for (auto w : s.words) h = h * 0x9E3779B97F4A7C15ULL ^ (w + (h >> 29));
    return h;
  }
};

// Exhaustive minimization over all adaptive trees. Trees below a history
// (partial assignment) are independent of how the history was reached, and
// a tree's outcome set depends only on its children's outcome sets, so
// every history keeps one entry per distinct reachable outcome set together
// with the first tree (in canonical order: mover index, then children in
// machine order) producing it. Iterating child classes in first-appearance
// order keeps that representative canonical.
class AdaptiveSearch {
 public:
  explicit AdaptiveSearch(const Instance& inst) : inst_(inst), m_(inst.machines()), n_(inst.jobs()) {
    const std::uint64_t leaves = saturating_pow(m_, n_);
    if (leaves > 256) throw BudgetExceeded("adaptive search supports at most 256 leaves");
    leaf_loads_.resize(leaves);
    leaf_makespan_.resize(leaves);
    for (std::uint64_t code = 0; code < leaves; ++code) {
      leaf_loads_[code] = loads(inst, schedule_from_code(code, n_, m_));
      leaf_makespan_[code] = max_load(leaf_loads_[code]);
    }
  }

  struct Class {
    LeafSet set;
    int player = -1;              // -1 for a completed history
    std::vector<int> children;    // class index within each child history
    std::vector<std::uint64_t> child_keys;
  };

  // Base-(m+1) key: digit 0 = unassigned, i+1 = machine i.
  const std::vector<Class>& classes(std::uint64_t key) {
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Class> out = expand(key);
    return memo_.emplace(key, std::move(out)).first->second;
  }

  std::uint64_t root_key() const { return 0; }

  // First leaf of s (in code order) with the smallest or largest makespan.
  int extreme_leaf(const LeafSet& s, TieConvention ties) const {
    int arg = -1;
    s.for_each([&](int leaf) {
      if (arg < 0) {
        arg = leaf;
      } else if (ties == TieConvention::best ? leaf_makespan_[leaf] < leaf_makespan_[arg]
                                             : leaf_makespan_[leaf] > leaf_makespan_[arg]) {
        arg = leaf;
      }
    });
    return arg;
  }
  const Rational& makespan_of(int leaf) const { return leaf_makespan_[leaf]; }

  int build_tree(AdaptiveTree& tree, std::uint64_t key, int cls) {
    const Class& c = classes(key)[cls];
    if (c.player < 0) return tree.add_leaf();
    std::vector<int> kids;
    for (int i = 0; i < m_; ++i) kids.push_back(build_tree(tree, c.child_keys[i], c.children[i]));
    return tree.add_node(c.player, kids);
  }

 private:
  int digit(std::uint64_t key, int job) const {
    for (int j = n_ - 1; j > job; --j) key /= static_cast<std::uint64_t>(m_ + 1);
    return static_cast<int>(key % static_cast<std::uint64_t>(m_ + 1));
  }
  std::uint64_t place(std::uint64_t key, int job, int machine) const {
    return key + static_cast<std::uint64_t>(machine + 1) *
                     saturating_pow(static_cast<std::uint64_t>(m_ + 1), n_ - 1 - job);
  }

  std::vector<Class> expand(std::uint64_t key) {
    std::vector<int> free_jobs;
    std::uint64_t leaf = 0;
    for (int j = 0; j < n_; ++j) {
      const int d = digit(key, j);
      if (d == 0) free_jobs.push_back(j);
      leaf = leaf * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(d == 0 ? 0 : d - 1);
    }
    if (free_jobs.empty()) {
      Class c;
      c.set.set(static_cast<int>(leaf));
      return {c};
    }

    std::vector<Class> out;
    std::unordered_map<LeafSet, int, LeafSetHash> seen;
    for (int j : free_jobs) {
      std::vector<std::uint64_t> child_keys(m_);
      std::vector<const std::vector<Class>*> kids(m_);
      for (int c = 0; c < m_; ++c) {
        child_keys[c] = place(key, j, c);
        kids[c] = &classes(child_keys[c]);
      }
      // worst[c][k] = largest cost j can face below child c under class k.
      std::vector<std::vector<Rational>> worst(m_);
      for (int c = 0; c < m_; ++c) {
        for (const Class& k : *kids[c]) {
          std::optional<Rational> w;
          k.set.for_each([&](int l) {
            if (!w || leaf_loads_[l][c] > *w) w = leaf_loads_[l][c];
          });
          worst[c].push_back(*w);
        }
      }
      std::vector<int> pick(m_, 0);
      while (true) {
        LeafSet merged;
        for (int c = 0; c < m_; ++c) {
          std::optional<Rational> cap;
          for (int o = 0; o < m_; ++o) {
            if (o != c && (!cap || worst[o][pick[o]] < *cap)) cap = worst[o][pick[o]];
          }
          (*kids[c])[pick[c]].set.for_each([&](int l) {
            if (!cap || leaf_loads_[l][c] <= *cap) merged.set(l);
          });
        }
        if (seen.emplace(merged, static_cast<int>(out.size())).second) {
          out.push_back(Class{merged, j, pick, child_keys});
        }
        int c = m_ - 1;
        while (c >= 0 && pick[c] + 1 == static_cast<int>(kids[c]->size())) pick[c--] = 0;
        if (c < 0) break;
        ++pick[c];
      }
    }
    return out;
  }

  const Instance& inst_;
  int m_;
  int n_;
  std::vector<LoadVector> leaf_loads_;
  std::vector<Rational> leaf_makespan_;
  std::unordered_map<std::uint64_t, std::vector<Class>> memo_;
};

}  // namespace detail

// Adaptive SPoS of one instance: best tree; ties per opts.ties.
inline MeasureReport adaptive_spos(const Instance& inst, const MeasureOptions& opts = {}) {
  const std::uint64_t trees = adaptive_tree_count(inst.jobs(), inst.machines());
  if (trees > opts.tree_budget) {
    throw BudgetExceeded("adaptive_spos: " + std::to_string(trees) +
                         " trees exceed budget " + std::to_string(opts.tree_budget));
  }
  detail::AdaptiveSearch search(inst);
  const auto& roots = search.classes(search.root_key());
  int arg = 0;
  int arg_leaf = search.extreme_leaf(roots[0].set, opts.ties);
  for (int k = 1; k < static_cast<int>(roots.size()); ++k) {
    const int leaf = search.extreme_leaf(roots[k].set, opts.ties);
    if (search.makespan_of(leaf) < search.makespan_of(arg_leaf)) {
      arg = k;
      arg_leaf = leaf;
    }
  }
  AdaptiveTree tree(inst.jobs(), inst.machines());
  tree.set_root(search.build_tree(tree, search.root_key(), arg));
  const Schedule leaf = schedule_from_code(static_cast<std::uint64_t>(arg_leaf), inst.jobs(),
                                           inst.machines());

  MeasureReport r;
  r.opt_makespan = opt(inst).makespan;
  r.outcome = make_outcome(inst, tree, leaf);
  r.makespan = r.outcome.makespan;
  r.value = Ratio::of(r.makespan, r.opt_makespan);
  r.tree = std::move(tree);
  return r;
}

struct PoaPosReport {
  bool has_nash = false;
  Ratio poa;
  Ratio pos;
  Schedule worst;
  Schedule best;
  Rational opt_makespan;
  std::size_t equilibria = 0;
};

inline PoaPosReport poa_pos(const Instance& inst, std::uint64_t budget = kDefaultSearchBudget) {
  PoaPosReport r;
  r.opt_makespan = opt(inst, budget).makespan;
  const auto eq = pure_nash(inst, budget);
  r.equilibria = eq.size();
  if (eq.empty()) return r;
  r.has_nash = true;
  Rational lo = makespan(inst, eq.front());
  Rational hi = lo;
  r.worst = r.best = eq.front();
  for (const auto& s : eq) {
    const Rational mk = makespan(inst, s);
    if (mk > hi) {
      hi = mk;
      r.worst = s;
    }
    if (mk < lo) {
      lo = mk;
      r.best = s;
    }
  }
  r.poa = Ratio::of(hi, r.opt_makespan);
  r.pos = Ratio::of(lo, r.opt_makespan);
  return r;
}

}  // namespace seqsched
