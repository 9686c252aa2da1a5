#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seqsched/core.hpp"
#include "seqsched/measures.hpp"
#include "seqsched/simplex.hpp"
#include "seqsched/spe.hpp"
#include "seqsched/tree.hpp"

namespace seqsched {

// Equilibrium decisions of the fixed-order (J1..Jn) two-machine tree: bit k
// is the branch chosen at level-order node k (0 = M1, 1 = M2). Node k has
// children 2k+1 (M1) and 2k+2 (M2); a node at depth d with offset s in its
// level has history s, read as d binary digits with J1 most significant.
// Leaf codes use the same digits, so leaf code = offset in the last level.
struct TreeStructure {
  int n = 0;
  std::uint64_t bits = 0;

  static constexpr int kMaxJobs = 6;

  int internal_nodes() const { return (1 << n) - 1; }
  int choice(int node) const { return static_cast<int>((bits >> node) & 1U); }

  // Leaf code reached from `node` by following chosen branches.
  int equilibrium_leaf(int node = 0) const {
    while (node < internal_nodes()) node = 2 * node + 1 + choice(node);
    return node - internal_nodes();
  }

  std::string to_hex() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(bits));
    return buf;
  }

  friend bool operator==(const TreeStructure&, const TreeStructure&) = default;
};

inline TreeStructure parse_structure(int n, const std::string& hex) {
  if (n < 1 || n > TreeStructure::kMaxJobs) throw std::invalid_argument("structure needs 1 <= n <= 6");
  std::size_t used = 0;
  std::uint64_t bits = 0;
  try {
    bits = std::stoull(hex, &used, 16);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != hex.size()) throw std::invalid_argument("bad structure hex '" + hex + "'");
  const int width = (1 << n) - 1;
  if (width < 64 && (bits >> width) != 0) throw std::invalid_argument("structure has bits beyond node " + std::to_string(width - 1));
  return {n, bits};
}

inline int node_depth(int node) { return std::bit_width(static_cast<unsigned>(node + 1)) - 1; }

// Swaps the machines: node with history s maps to the node with the
// complementary history, and every choice flips.
inline TreeStructure mirror(const TreeStructure& t) {
  TreeStructure out{t.n, 0};
  for (int node = 0; node < t.internal_nodes(); ++node) {
    const int d = node_depth(node);
    const int first = (1 << d) - 1;
    const int twin = first + ((~(node - first)) & ((1 << d) - 1));
    if (t.choice(node) == 0) out.bits |= std::uint64_t{1} << twin;
  }
  return out;
}

// Last-layer decisions as a function over histories of J1..J(n-1): bit s
// is 1 iff the last job picks M2 after history s.
inline std::uint64_t last_layer(const TreeStructure& t) {
  const int upper = (1 << (t.n - 1)) - 1;
  const int width = 1 << (t.n - 1);
  const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  return (t.bits >> upper) & mask;
}

// f over subsets of k variables (bit s = f(s), 1 = M2) such that S subset
// of S' and f(S) = M1 imply f(S') = M1, i.e. {f = M2} is closed downward.
inline bool monotone_last_layer(std::uint64_t f, int k) {
  for (int s = 0; s < (1 << k); ++s) {
    if ((f >> s) & 1U) continue;
    for (int b = 0; b < k; ++b) {
      const int up = s | (1 << b);
      if (up != s && ((f >> up) & 1U)) return false;
    }
  }
  return true;
}

inline bool obs1_consistent(const TreeStructure& t) {
  return monotone_last_layer(last_layer(t), t.n - 1);
}

// All monotone last-layer functions on k variables, ascending. Built from
// the split on the highest variable: f = g0 | g1 << 2^(k-1) with g1 subset
// of g0.
inline std::vector<std::uint64_t> monotone_functions(int k) {
  if (k < 0 || k > TreeStructure::kMaxJobs - 1) throw std::invalid_argument("monotone_functions needs 0 <= k <= 5");
  std::vector<std::uint64_t> cur{0, 1};
  for (int v = 1; v <= k; ++v) {
    const int half = 1 << (v - 1);
    std::vector<std::uint64_t> next;
    for (std::uint64_t g1 : cur)
      for (std::uint64_t g0 : cur)
        if ((g1 & ~g0) == 0) next.push_back(g0 | (g1 << half));
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

struct StructureFilter {
  bool prune_obs1 = true;
  bool prune_mirror = false;
  bool exclude_extreme_eq_leaf = false;
};

inline bool is_extreme_leaf(int leaf, int n) { return leaf == 0 || leaf == (1 << n) - 1; }

inline bool passes(const TreeStructure& t, const StructureFilter& f) {
  if (f.prune_obs1 && !obs1_consistent(t)) return false;
  if (f.prune_mirror && t.choice(0) != 0) return false;
  if (f.exclude_extreme_eq_leaf && is_extreme_leaf(t.equilibrium_leaf(), t.n)) return false;
  return true;
}

// Streams every structure passing the filter in ascending bit order;
// fn returns false to stop. Returns the number streamed.
template <typename Fn>
std::uint64_t enumerate_structures(int n, const StructureFilter& filter, Fn&& fn) {
  if (n < 1 || n > TreeStructure::kMaxJobs) throw std::invalid_argument("enumeration needs 1 <= n <= 6");
  const int upper = (1 << (n - 1)) - 1;
  const int width = 1 << (n - 1);
  std::vector<std::uint64_t> lasts;
  if (filter.prune_obs1) {
    lasts = monotone_functions(n - 1);
  } else {
    if (width > 20) throw BudgetExceeded("unpruned enumeration for n = " + std::to_string(n) + " is not supported");
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << width); ++f) lasts.push_back(f);
  }
  const std::uint64_t uppers = std::uint64_t{1} << upper;
  std::uint64_t streamed = 0;
  for (std::uint64_t f : lasts) {
    for (std::uint64_t u = 0; u < uppers; ++u) {
      const TreeStructure t{n, u | (f << upper)};
      if (filter.prune_mirror && t.choice(0) != 0) continue;
      if (filter.exclude_extreme_eq_leaf && is_extreme_leaf(t.equilibrium_leaf(), n)) continue;
      ++streamed;
      if (!fn(t)) return streamed;
    }
  }
  return streamed;
}

// Count without enumeration: each equilibrium leaf fixes n-1 upper bits
// and one last-layer value, the other upper bits are free.
inline std::uint64_t count_structures(int n, const StructureFilter& filter) {
  if (n < 1 || n > TreeStructure::kMaxJobs) throw std::invalid_argument("count needs 1 <= n <= 6");
  const int k = n - 1;
  const int upper = (1 << k) - 1;
  const int points = 1 << k;
  // with_value[s][b] = number of admissible last layers with f(s) = b
  std::vector<std::array<std::uint64_t, 2>> with_value(static_cast<std::size_t>(points));
  if (filter.prune_obs1) {
    for (std::uint64_t f : monotone_functions(k))
      for (int s = 0; s < points; ++s) ++with_value[s][(f >> s) & 1U];
  } else {
    for (auto& w : with_value) w = {std::uint64_t{1} << (points - 1), std::uint64_t{1} << (points - 1)};
  }
  const std::uint64_t free_upper = std::uint64_t{1} << (upper - k);
  std::uint64_t total = 0;
  for (int leaf = 0; leaf < (1 << n); ++leaf) {
    if (filter.prune_mirror && (leaf >> (n - 1)) != 0) continue;
    if (filter.exclude_extreme_eq_leaf && is_extreme_leaf(leaf, n)) continue;
    total += free_upper * with_value[leaf >> 1][leaf & 1];
  }
  return total;
}

// Equilibrium structure of an instance under a tie rule, identity order.
inline TreeStructure structure_from_spe(const Instance& inst, const TieBreakRule& rule) {
  if (inst.machines() != 2) throw std::invalid_argument("structures need m = 2");
  if (inst.jobs() < 1 || inst.jobs() > TreeStructure::kMaxJobs) throw std::invalid_argument("structures need 1 <= n <= 6");
  const AdaptiveTree tree = AdaptiveTree::from_order(PlayerOrder::identity(inst.jobs()), 2);
  const SpeSolution sol = spe_solve(inst, tree, rule);
  TreeStructure t{inst.jobs(), 0};
  for (int node = 0; node < t.internal_nodes(); ++node)
    if (sol.strategy[node] == 1) t.bits |= std::uint64_t{1} << node;
  return t;
}

struct LpTies {
  bool strict = false;
  Rational eps;
  static LpTies weak() { return {}; }
  static LpTies strict_by(const Rational& e) {
    if (e.sign() <= 0) throw std::invalid_argument("strict eps must be positive");
    return {true, e};
  }
};

inline int leaf_machine(int leaf, int job, int n) { return (leaf >> (n - 1 - job)) & 1; }

// Variables p_ij at index i*n + j.
inline std::vector<Rational> load_expr(int leaf, int machine, int n) {
  std::vector<Rational> e(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j)
    if (leaf_machine(leaf, j, n) == machine) e[machine * n + j] = Rational(1);
  return e;
}

// One constraint per internal node (the mover weakly or strictly prefers
// her chosen branch given the equilibrium below each child), then both
// loads of the optimum leaf <= 1. Maximizes the objective machine's load at
// the equilibrium leaf.
inline LpProblem build_lp(const TreeStructure& t, int opt_leaf, int objective_machine,
                          const LpTies& ties = LpTies::weak()) {
  const int n = t.n;
  if (opt_leaf < 0 || opt_leaf >= (1 << n)) throw std::invalid_argument("opt leaf out of range");
  if (opt_leaf == t.equilibrium_leaf()) throw std::invalid_argument("opt leaf equals the equilibrium leaf");
  if (is_extreme_leaf(opt_leaf, n)) throw std::invalid_argument("opt leaf is an extreme leaf");
  if (objective_machine != 0 && objective_machine != 1) throw std::invalid_argument("objective machine must be 0 or 1");
  LpProblem lp;
  lp.variables = 2 * n;
  for (int node = 0; node < t.internal_nodes(); ++node) {
    const int b = t.choice(node);
    const int chosen = t.equilibrium_leaf(2 * node + 1 + b);
    const int other = t.equilibrium_leaf(2 * node + 2 - b);
    std::vector<Rational> row = load_expr(chosen, b, n);
    const std::vector<Rational> alt = load_expr(other, 1 - b, n);
    for (int v = 0; v < lp.variables; ++v) row[v] = row[v] - alt[v];
    lp.add(std::move(row), ties.strict ? -ties.eps : Rational(0));
  }
  lp.add(load_expr(opt_leaf, 0, n), Rational(1));
  lp.add(load_expr(opt_leaf, 1, n), Rational(1));
  lp.objective = load_expr(t.equilibrium_leaf(), objective_machine, n);
  return lp;
}

inline Instance instance_from_point(const std::vector<Rational>& x, int n) {
  return Instance({std::vector<Rational>(x.begin(), x.begin() + n),
                   std::vector<Rational>(x.begin() + n, x.begin() + 2 * n)});
}

struct SearchOptions {
  StructureFilter filter{true, true, true};
  LpTies ties = LpTies::weak();
  std::optional<TreeStructure> only_structure;
  std::optional<int> only_opt_leaf;
  int shard_index = 0;
  int shard_count = 1;
  unsigned threads = 1;
  std::uint64_t start = 0;           // first stream ordinal to process
  std::uint64_t max_structures = 0;  // 0 = no limit
};

struct SearchHit {
  Rational value;
  TreeStructure structure;
  int opt_leaf = -1;
  int objective_machine = 0;
  std::uint64_t ordinal = 0;
  std::vector<Rational> point;

  Instance witness() const { return instance_from_point(point, structure.n); }
};

struct SearchResult {
  std::optional<SearchHit> best;
  std::optional<SearchHit> first_unbounded;  // value unused
  std::uint64_t structures = 0;
  std::uint64_t lps = 0;
  std::uint64_t optimal = 0;
  std::uint64_t infeasible = 0;
  std::uint64_t unbounded = 0;
  bool complete = true;
  std::uint64_t next_cursor = 0;  // resume with options.start = next_cursor
};

namespace detail {

// Larger value first; then stream position, opt leaf and machine.
inline bool better_hit(const SearchHit& a, const SearchHit& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.ordinal != b.ordinal) return a.ordinal < b.ordinal;
  if (a.opt_leaf != b.opt_leaf) return a.opt_leaf < b.opt_leaf;
  return a.objective_machine < b.objective_machine;
}

inline void solve_structure(const TreeStructure& t, std::uint64_t ordinal, const SearchOptions& opts,
                            SearchResult& acc) {
  const int n = t.n;
  const int eq = t.equilibrium_leaf();
  for (int leaf = 0; leaf < (1 << n); ++leaf) {
    if (leaf == eq || is_extreme_leaf(leaf, n)) continue;
    if (opts.only_opt_leaf && *opts.only_opt_leaf != leaf) continue;
    for (int machine = 0; machine < 2; ++machine) {
      const LpResult r = simplex_solve(build_lp(t, leaf, machine, opts.ties));
      ++acc.lps;
      if (r.status == LpStatus::infeasible) {
        ++acc.infeasible;
      } else if (r.status == LpStatus::unbounded) {
        ++acc.unbounded;
        if (!acc.first_unbounded) acc.first_unbounded = SearchHit{Rational(0), t, leaf, machine, ordinal, {}};
      } else {
        ++acc.optimal;
        SearchHit h{r.value, t, leaf, machine, ordinal, r.witness};
        if (!acc.best || better_hit(h, *acc.best)) acc.best = std::move(h);
      }
    }
  }
}

inline void merge(SearchResult& into, SearchResult&& part) {
  into.structures += part.structures;
  into.lps += part.lps;
  into.optimal += part.optimal;
  into.infeasible += part.infeasible;
  into.unbounded += part.unbounded;
  if (part.best && (!into.best || better_hit(*part.best, *into.best))) into.best = std::move(part.best);
  if (part.first_unbounded &&
      (!into.first_unbounded || part.first_unbounded->ordinal < into.first_unbounded->ordinal)) {
    into.first_unbounded = std::move(part.first_unbounded);
  }
}

}  // namespace detail

// Worst-case ratio over structures and optimum leaves. Work is processed in
// blocks; on_improve (if set) sees the running best after each block that
// raised it, so output is identical for every thread count.
inline SearchResult lp_search(int n, const SearchOptions& opts,
                              const std::function<void(const SearchHit&)>& on_improve = {}) {
  if (n < 2 || n > TreeStructure::kMaxJobs) throw std::invalid_argument("lp-search needs 2 <= n <= 6");
  if (opts.shard_count < 1 || opts.shard_index < 0 || opts.shard_index >= opts.shard_count) {
    throw std::invalid_argument("shard must satisfy 0 <= i < k");
  }
  if (opts.only_structure && opts.only_structure->n != n) throw std::invalid_argument("structure size differs from n");
  constexpr std::size_t kBlock = 512;

  SearchResult total;
  total.next_cursor = opts.start;
  std::vector<std::pair<TreeStructure, std::uint64_t>> block;
  bool stopped = false;

  auto flush = [&] {
    std::vector<SearchResult> parts(block.size());
    detail::parallel_for(block.size(), opts.threads, [&](std::size_t i) {
      parts[i].structures = 1;
      detail::solve_structure(block[i].first, block[i].second, opts, parts[i]);
    });
    const auto before = total.best ? std::optional<Rational>(total.best->value) : std::nullopt;
    for (auto& p : parts) detail::merge(total, std::move(p));
    if (on_improve && total.best && (!before || total.best->value > *before)) on_improve(*total.best);
    block.clear();
  };

  std::uint64_t ordinal = 0;
  auto visit = [&](const TreeStructure& t) {
    const std::uint64_t ord = ordinal++;
    if (ord < opts.start) return true;
    if (opts.max_structures != 0 && total.structures + block.size() >= opts.max_structures) {
      stopped = true;
      total.next_cursor = ord;
      return false;
    }
    total.next_cursor = ord + 1;
    if (ord % static_cast<std::uint64_t>(opts.shard_count) != static_cast<std::uint64_t>(opts.shard_index)) {
      return true;
    }
    block.emplace_back(t, ord);
    if (block.size() == kBlock) flush();
    return true;
  };

  // An explicit structure bypasses the filters.
  if (opts.only_structure) {
    visit(*opts.only_structure);
  } else {
    enumerate_structures(n, opts.filter, visit);
  }
  if (!block.empty()) flush();
  total.complete = !stopped;
  return total;
}

// The LP witness, replayed through the solver: its outcome set on the
// identity order contains the structure's equilibrium leaf, whose makespan
// is at least the LP value (equal in weak mode for the search maximum).
struct RoundTrip {
  bool leaf_in_set = false;
  Rational leaf_makespan;
  bool ok = false;
};

inline RoundTrip witness_round_trip(const SearchHit& hit) {
  const Instance inst = hit.witness();
  const int n = hit.structure.n;
  const AdaptiveTree tree = AdaptiveTree::from_order(PlayerOrder::identity(n), 2);
  const OutcomeSet set = spe_outcome_set(inst, tree, std::uint64_t{1} << n);
  const Schedule eq = schedule_from_code(static_cast<std::uint64_t>(hit.structure.equilibrium_leaf()), n, 2);
  RoundTrip rt;
  for (const auto& o : set) {
    if (o.schedule == eq) {
      rt.leaf_in_set = true;
      rt.leaf_makespan = o.makespan;
    }
  }
  rt.ok = rt.leaf_in_set && rt.leaf_makespan >= hit.value;
  return rt;
}

}  // namespace seqsched
