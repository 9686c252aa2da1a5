#pragma once

#include <algorithm>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "seqsched/constructions.hpp"
#include "seqsched/error.hpp"
#include "seqsched/spe.hpp"

namespace seqsched {

inline TieBreakRule prefer_lowest() {
  return [](const TieContext& ctx) { return ctx.candidates.front().machine; };
}

inline TieBreakRule prefer_highest() {
  return [](const TieContext& ctx) { return ctx.candidates.back().machine; };
}

// recommended[node] is the preferred machine at that node; -1 or a machine
// that is not tied falls back to the lowest candidate.
inline TieBreakRule prefer_recommended(std::vector<int> recommended) {
  auto table = std::make_shared<const std::vector<int>>(std::move(recommended));
  return [table](const TieContext& ctx) {
    if (ctx.node >= 0 && ctx.node < static_cast<int>(table->size())) {
      const int want = (*table)[ctx.node];
      for (const auto& c : ctx.candidates)
        if (c.machine == want) return want;
    }
    return ctx.candidates.front().machine;
  };
}

// Table-driven rule: the first entry whose player matches and whose `when`
// assignments all hold in the history wins, provided its machine is tied.
struct ScriptedEntry {
  int player;
  std::vector<std::pair<int, int>> when;  // (job, machine) that must hold
  int prefer;
};

struct ScriptedTable {
  std::vector<ScriptedEntry> entries;
  int fallback = 0;  // used when no entry applies (if tied; else lowest)
};

inline TieBreakRule scripted_rule(ScriptedTable table) {
  auto shared = std::make_shared<const ScriptedTable>(std::move(table));
  return [shared](const TieContext& ctx) {
    auto tied = [&](int machine) {
      return std::any_of(ctx.candidates.begin(), ctx.candidates.end(),
                         [&](const Continuation& c) { return c.machine == machine; });
    };
    for (const auto& e : shared->entries) {
      if (e.player != ctx.player) continue;
      const bool holds = std::all_of(e.when.begin(), e.when.end(), [&](const auto& jm) {
        return jm.first < ctx.history.jobs() && ctx.history.machine_of(jm.first) == jm.second;
      });
      if (holds && tied(e.prefer)) return e.prefer;
    }
    if (tied(shared->fallback)) return shared->fallback;
    return ctx.candidates.front().machine;
  };
}

// Text form, 1-based, one entry per line, '#' comments:
//   player 4 when 1=1,2=1,3=2 prefer 1
//   player 5 when * prefer 2
//   default prefer 2
inline ScriptedTable parse_scripted_table(const std::string& text) {
  ScriptedTable table;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  auto index = [&](const std::string& tok, const char* what) {
    try {
      const Rational r = Rational::parse(tok);
      if (!r.is_integer() || r.num() < 1) throw std::invalid_argument("");
      return static_cast<int>(r.num()) - 1;
    } catch (const std::exception&) {
      throw ParseError(lineno, std::string("bad ") + what + " '" + tok + "'");
    }
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() == 3 && toks[0] == "default" && toks[1] == "prefer") {
      table.fallback = index(toks[2], "machine");
      continue;
    }
    if (toks.size() < 6 || toks[0] != "player" || toks[2] != "when" ||
        toks[toks.size() - 2] != "prefer") {
      throw ParseError(lineno, "expected 'player <j> when <pattern> prefer <i>'");
    }
    ScriptedEntry e;
    e.player = index(toks[1], "player");
    e.prefer = index(toks.back(), "machine");
    std::string pattern;
    for (std::size_t k = 3; k + 2 < toks.size(); ++k) pattern += toks[k];
    if (pattern != "*") {
      std::stringstream ps(pattern);
      for (std::string term; std::getline(ps, term, ',');) {
        const auto eq = term.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "pattern term '" + term + "' lacks '='");
        e.when.emplace_back(index(term.substr(0, eq), "job"), index(term.substr(eq + 1), "machine"));
      }
    }
    table.entries.push_back(std::move(e));
  }
  return table;
}

inline std::string format_scripted_table(const ScriptedTable& table) {
  std::string out;
  for (const auto& e : table.entries) {
    out += "player " + std::to_string(e.player + 1) + " when ";
    if (e.when.empty()) out += "*";
    for (std::size_t k = 0; k < e.when.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(e.when[k].first + 1) + "=" + std::to_string(e.when[k].second + 1);
    }
    out += " prefer " + std::to_string(e.prefer + 1) + "\n";
  }
  out += "default prefer " + std::to_string(table.fallback + 1) + "\n";
  return out;
}

namespace detail {

// Choices of the perturbed five-job game (gen_thm1 at eps = 1/100, lowest
// ties) at every history of the identity order. Its strict preferences
// survive at eps = 0, so they complete the ties of the unperturbed game.
inline std::vector<ScriptedEntry> thm1_limit_entries(int offset,
                                                     const std::vector<std::pair<int, int>>& prefix) {
  const Instance inst = gen_thm1(Rational(1, 100));
  const AdaptiveTree tree = AdaptiveTree::from_order(PlayerOrder::identity(5), 2);
  const SpeSolution sol = spe_solve(inst, tree, prefer_lowest());
  std::vector<ScriptedEntry> out;
  std::vector<std::pair<int, int>> when = prefix;
  auto walk = [&](auto&& self, int node) -> void {
    if (tree.is_leaf(node)) return;
    const int j = tree.player(node);
    out.push_back({offset + j, when, sol.strategy[node]});
    for (int c = 0; c < 2; ++c) {
      when.emplace_back(offset + j, c);
      self(self, tree.child(node, c));
      when.pop_back();
    }
  };
  walk(walk, tree.root());
  return out;
}

}  // namespace detail

// Tie preferences for the (3k-1)-job family (see gen_thm2). Block t holds
// jobs 3t..3t+2 (0-based); its zero-cost machines are M2, M1, M1. While
// every earlier block sat on its zero-cost machines, block t < k-2 uses:
//   - the block leader prefers M1;
//   - the other two block members avoid the leader's machine;
//   - with the leader on M1, the second-to-last job prefers M1 when only the
//     third block member went to M2, and M2 when the second member did;
//   - with the leader on M1, the last job prefers M2.
// The final block plus the last two jobs form the k = 2 instance, which is
// the five-job instance of gen_thm1 at eps = 0; its ties follow the
// perturbed game's choices. Anything else falls back to M2.
inline ScriptedTable thm2_table(int k) {
  if (k < 2) throw std::invalid_argument("thm2 rule needs k >= 2");
  constexpr int M1 = 0;
  constexpr int M2 = 1;
  const int second_last = 3 * k - 3;
  const int last = 3 * k - 2;
  ScriptedTable table;
  table.fallback = M2;
  std::vector<std::pair<int, int>> zero;  // earlier blocks on zero-cost machines
  for (int t = 0; t < k - 2; ++t) {
    const int a = 3 * t;
    auto when = [&](std::initializer_list<std::pair<int, int>> extra) {
      auto w = zero;
      w.insert(w.end(), extra.begin(), extra.end());
      return w;
    };
    table.entries.push_back({a, when({}), M1});
    table.entries.push_back({a + 1, when({{a, M1}}), M2});
    table.entries.push_back({a + 1, when({{a, M2}}), M1});
    table.entries.push_back({a + 2, when({{a, M1}}), M2});
    table.entries.push_back({a + 2, when({{a, M2}}), M1});
    table.entries.push_back({second_last, when({{a, M1}, {a + 1, M1}, {a + 2, M2}}), M1});
    table.entries.push_back({second_last, when({{a, M1}, {a + 1, M2}}), M2});
    table.entries.push_back({last, when({{a, M1}}), M2});
    zero.insert(zero.end(), {{a, M2}, {a + 1, M1}, {a + 2, M1}});
  }
  const auto tail = detail::thm1_limit_entries(3 * (k - 2), zero);
  table.entries.insert(table.entries.end(), tail.begin(), tail.end());
  return table;
}

inline TieBreakRule scripted_rule_thm2(int k) { return scripted_rule(thm2_table(k)); }

}  // namespace seqsched
