#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "seqsched/constructions.hpp"
#include "seqsched/instance_io.hpp"
#include "seqsched/lpsearch.hpp"
#include "seqsched/measures.hpp"
#include "seqsched/nash.hpp"
#include "seqsched/tie_rules.hpp"
#include "seqsched/verification.hpp"

namespace seqsched::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One record of output: ordered key/value pairs. Text mode prints one
// `key=value` per line, rationals with their decimal approximation; JSON mode
// prints the record as a single object line.
class Record {
 public:
  Record() = default;
  // One-line records print `k=v k=v ...` with exact values only.
  static Record line() {
    Record r;
    r.one_line_ = true;
    return r;
  }

  Record& put(std::string key, std::string value) {
    fields_.push_back({std::move(key), std::move(value), {}});
    return *this;
  }
  Record& put(std::string key, const Rational& r) {
    fields_.push_back({std::move(key), r.to_string(), r.is_integer() ? std::string() : with_approx(r)});
    return *this;
  }
  Record& put(std::string key, const Ratio& r) {
    if (r.unbounded) return put(std::move(key), std::string("unbounded"));
    return put(std::move(key), r.value);
  }
  Record& put(std::string key, std::uint64_t v) { return put(std::move(key), std::to_string(v)); }
  Record& put(std::string key, int v) { return put(std::move(key), std::to_string(v)); }
  Record& put(std::string key, bool v) { return put(std::move(key), std::string(v ? "yes" : "no")); }

  void write(std::ostream& out, bool json) const {
    if (json) {
      nlohmann::ordered_json j;
      for (const auto& f : fields_) j[f.key] = f.value;
      out << j.dump() << '\n';
      return;
    }
    if (one_line_) {
      for (std::size_t k = 0; k < fields_.size(); ++k) out << (k ? " " : "") << fields_[k].key << '=' << fields_[k].value;
      out << '\n';
      return;
    }
    for (const auto& f : fields_) out << f.key << '=' << (f.text.empty() ? f.value : f.text) << '\n';
  }

 private:
  struct Field {
    std::string key;
    std::string value;
    std::string text;
  };
  std::vector<Field> fields_;
  bool one_line_ = false;
};

inline std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

inline std::string schedule_list(const std::vector<int>& jobs) {
  std::string s = "(";
  for (std::size_t k = 0; k < jobs.size(); ++k) s += (k ? ",J" : "J") + std::to_string(jobs[k] + 1);
  return s + ")";
}

inline std::string path_text(const std::vector<PathStep>& path) {
  std::string s;
  for (const auto& p : path) {
    if (!s.empty()) s += ',';
    s += "J" + std::to_string(p.player + 1) + ":M" + std::to_string(p.machine + 1);
  }
  return s;
}

inline std::string costs_text(const std::vector<Rational>& costs) {
  std::string s = "(";
  for (std::size_t k = 0; k < costs.size(); ++k) s += (k ? "," : "") + costs[k].to_string();
  return s + ")";
}

// Job=machine pairs, 1-based: "1=2,3=1".
inline PartialSchedule parse_assignment(const std::string& text, const Instance& inst) {
  PartialSchedule fixed(inst.jobs());
  if (text.empty()) return fixed;
  std::stringstream ss(text);
  for (std::string term; std::getline(ss, term, ',');) {
    const auto eq = term.find('=');
    if (eq == std::string::npos) throw UsageError("assignment term '" + term + "' lacks '='");
    int j = 0;
    int i = 0;
    try {
      j = std::stoi(term.substr(0, eq)) - 1;
      i = std::stoi(term.substr(eq + 1)) - 1;
    } catch (const std::exception&) {
      throw UsageError("bad assignment term '" + term + "'");
    }
    if (j < 0 || j >= inst.jobs() || i < 0 || i >= inst.machines()) {
      throw UsageError("assignment term '" + term + "' out of range");
    }
    fixed.assign(j, i);
  }
  return fixed;
}

struct TreeChoice {
  AdaptiveTree tree;
  std::optional<PlayerOrder> order;
  std::vector<int> recommended;  // set for thm4 trees
};

inline TreeChoice make_tree(const Instance& inst, const std::string& order_text, const std::string& tree_text) {
  if (!order_text.empty() && !tree_text.empty()) throw UsageError("--order and --tree are exclusive");
  if (tree_text == "thm4") {
    Thm4Tree t = thm4_tree(inst);
    return {std::move(t.tree), std::nullopt, std::move(t.recommended)};
  }
  if (!tree_text.empty()) return {AdaptiveTree::parse(tree_text, inst.jobs(), inst.machines()), std::nullopt, {}};
  const PlayerOrder order = order_text.empty() ? PlayerOrder::identity(inst.jobs()) : PlayerOrder::parse(order_text);
  if (order.size() != inst.jobs()) throw UsageError("order has " + std::to_string(order.size()) + " players, instance has " + std::to_string(inst.jobs()));
  return {AdaptiveTree::from_order(order, inst.machines()), order, {}};
}

inline TieBreakRule make_rule(const std::string& name, const std::string& table_path, const TreeChoice& t,
                              std::istream& in) {
  if (!table_path.empty()) return scripted_rule(parse_scripted_table(read_source(table_path, in)));
  if (name == "lowest") return prefer_lowest();
  if (name == "highest") return prefer_highest();
  if (name == "recommended") {
    if (t.recommended.empty()) throw UsageError("--tie recommended needs --tree thm4");
    return prefer_recommended(t.recommended);
  }
  if (name.rfind("thm2:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(name.substr(5));
    } catch (const std::exception&) {
      throw UsageError("bad tie rule '" + name + "'");
    }
    return scripted_rule_thm2(k);
  }
  throw UsageError("unknown tie rule '" + name + "' (lowest, highest, recommended, thm2:<k>)");
}

inline TieConvention parse_ties(const std::string& s) {
  if (s == "best") return TieConvention::best;
  if (s == "worst") return TieConvention::worst;
  throw UsageError("--ties must be best or worst");
}

inline unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

inline Rational parse_rational_arg(const std::string& s, const char* what) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + " '" + s + "'");
  }
}

inline std::pair<int, int> parse_shard(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw UsageError("--shard expects i/k");
  try {
    return {std::stoi(s.substr(0, slash)), std::stoi(s.substr(slash + 1))};
  } catch (const std::exception&) {
    throw UsageError("--shard expects i/k");
  }
}

inline void report_measure(Record& r, const MeasureReport& m) {
  r.put("value", m.value).put("makespan", m.makespan).put("opt", m.opt_makespan);
  if (m.order) r.put("order", m.order->to_string());
  if (m.tree) r.put("tree", m.tree->to_string());
  r.put("schedule", format_schedule(m.outcome.schedule));
}

// Parses argv and runs one subcommand. Returns the process exit code.
inline int dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequential scheduling games on unrelated machines: equilibria, measures, constructions, LP search"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit one JSON object per record");

  std::string file = "-";
  std::string order_text;
  std::string tree_text;
  std::string tie = "lowest";
  std::string tie_table;
  std::string ties = "best";
  unsigned threads = 0;
  auto add_file = [&](CLI::App* s) { s->add_option("file", file, "Instance file, '-' for stdin"); };
  auto add_tree = [&](CLI::App* s) {
    s->add_option("--order", order_text, "Player order, 1-based, e.g. 1,5,2,3,4");
    s->add_option("--tree", tree_text, "'thm4' or a preorder tree such as J1(J2(.,.),J2(.,.))");
  };
  auto add_threads = [&](CLI::App* s) { s->add_option("--threads", threads, "Worker threads"); };

  auto* spe_cmd = app.add_subcommand("spe", "Subgame-perfect equilibrium under a tie rule");
  add_file(spe_cmd);
  add_tree(spe_cmd);
  spe_cmd->add_option("--tie", tie, "lowest | highest | recommended | thm2:<k>");
  spe_cmd->add_option("--tie-table", tie_table, "Scripted tie table file");

  auto* set_cmd = app.add_subcommand("spe-set", "All equilibrium outcomes under arbitrary ties");
  add_file(set_cmd);
  add_tree(set_cmd);

  auto* opt_cmd = app.add_subcommand("opt", "Optimal makespan");
  add_file(opt_cmd);

  std::string fix;
  auto* copt_cmd = app.add_subcommand("constrained-opt", "Optimal completion of a partial assignment");
  add_file(copt_cmd);
  copt_cmd->add_option("--fix", fix, "Fixed jobs, 1-based job=machine pairs, e.g. 1=2,3=1");

  auto* nash_cmd = app.add_subcommand("nash", "Pure Nash equilibria, PoA and PoS");
  add_file(nash_cmd);

  auto* spoa_cmd = app.add_subcommand("spoa", "Worst equilibrium over ties for one order");
  add_file(spoa_cmd);
  spoa_cmd->add_option("--order", order_text, "Player order, 1-based");

  auto* spos_cmd = app.add_subcommand("spos", "Best order");
  add_file(spos_cmd);
  add_threads(spos_cmd);
  spos_cmd->add_option("--ties", ties, "Outcome charged per order: best | worst");

  auto* aspos_cmd = app.add_subcommand("adaptive-spos", "Best adaptive tree");
  add_file(aspos_cmd);
  add_threads(aspos_cmd);
  aspos_cmd->add_option("--ties", ties, "Outcome charged per tree: best | worst");

  auto* thm3_cmd = app.add_subcommand("order-thm3", "Two-group order for two machines");
  add_file(thm3_cmd);

  bool probe_worst = false;
  auto* thm4_cmd = app.add_subcommand("tree-thm4", "Adaptive tree implementing the optimum on two machines");
  add_file(thm4_cmd);
  thm4_cmd->add_flag("--probe-worst", probe_worst, "Also report the worst outcome under arbitrary ties");

  std::string appendix_file;
  auto* appd_cmd = app.add_subcommand("check-appendix-d", "Unilateral deviations from the optimum");
  appd_cmd->add_option("file", appendix_file, "Instance file (default: the identical-machines example)");
  appd_cmd->add_option("--fix", fix, "Fixed jobs, 1-based job=machine pairs");

  std::string gen_eps = "1/100";
  int gen_k = 2;
  std::string gen_l = "5";
  auto* gen_cmd = app.add_subcommand("gen", "Print a construction instance");
  gen_cmd->require_subcommand(1);
  auto* gen_thm1_cmd = gen_cmd->add_subcommand("thm1", "Two machines, five jobs");
  gen_thm1_cmd->add_option("--eps", gen_eps, "0 <= eps < 1/13");
  auto* gen_thm2_cmd = gen_cmd->add_subcommand("thm2", "Two machines, 3k-1 jobs");
  gen_thm2_cmd->add_option("--k", gen_k, "k >= 2");
  auto* gen_thm5_cmd = gen_cmd->add_subcommand("thm5", "Three machines, three jobs");
  gen_thm5_cmd->add_option("--eps", gen_eps, "0 <= eps < 1");
  auto* gen_appd_cmd = gen_cmd->add_subcommand("appendix-d", "Identical machines with initial loads");
  auto* gen_ex1_cmd = gen_cmd->add_subcommand("example1", "Two jobs, two machines");
  gen_ex1_cmd->add_option("--l", gen_l, "l >= 1");

  int lp_n = 0;
  bool no_obs1 = false;
  bool no_mirror = false;
  bool keep_extreme = false;
  std::string strict_eps;
  std::string shard = "0/1";
  std::string only_structure;
  int only_leaf = -1;
  std::uint64_t start = 0;
  std::uint64_t max_structures = 0;
  std::string witness_dir;
  auto* lp_cmd = app.add_subcommand("lp-search", "LP search over two-machine equilibrium structures");
  lp_cmd->add_option("--n", lp_n, "Number of jobs (2..6)")->required();
  lp_cmd->add_flag("--no-prune-obs1", no_obs1, "Keep structures whose last layer is not monotone");
  lp_cmd->add_flag("--no-mirror", no_mirror, "Keep mirror images");
  lp_cmd->add_flag("--keep-extreme", keep_extreme, "Keep structures whose equilibrium is an extreme leaf");
  lp_cmd->add_option("--strict-eps", strict_eps, "Strict preference margin a/b");
  lp_cmd->add_option("--shard", shard, "Process stream positions congruent to i mod k");
  lp_cmd->add_option("--structure", only_structure, "Only this structure (hex)");
  lp_cmd->add_option("--opt-leaf", only_leaf, "Only this optimum leaf");
  lp_cmd->add_option("--start", start, "Resume at this stream position");
  lp_cmd->add_option("--max-structures", max_structures, "Stop after this many structures (0 = all)");
  lp_cmd->add_option("--witness-dir", witness_dir, "Write a witness instance file per improvement");
  add_threads(lp_cmd);

  int count_n = 0;
  auto* count_cmd = app.add_subcommand("count-structures", "Structure counts with and without pruning");
  count_cmd->add_option("--n", count_n, "Number of jobs (1..6)")->required();

  bool no_time_limits = false;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run every acceptance check");
  add_threads(verify_cmd);
  verify_cmd->add_flag("--no-time-limits", no_time_limits, "Do not fail checks on their time budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto load_instance = [&] { return parse_instance(read_source(file, in)); };
  auto emit = [&](const Record& r) { r.write(out, json); };

  try {
    if (spe_cmd->parsed()) {
      const Instance inst = load_instance();
      const TreeChoice t = make_tree(inst, order_text, tree_text);
      const TieBreakRule rule = make_rule(tie, tie_table, t, in);
      const SpeOutcome o = spe(inst, t.tree, rule);
      Record r;
      r.put("schedule", format_schedule(o.schedule)).put("makespan", o.makespan).put("loads", format_loads(o.loads));
      r.put("costs", costs_text(o.costs)).put("path", path_text(o.path));
      if (t.order) r.put("order", t.order->to_string());
      emit(r);
    } else if (set_cmd->parsed()) {
      const Instance inst = load_instance();
      const TreeChoice t = make_tree(inst, order_text, tree_text);
      const OutcomeSet set = spe_outcome_set(inst, t.tree);
      for (const auto& o : set) emit(Record::line().put("outcome", format_schedule(o.schedule)).put("makespan", o.makespan));
      emit(Record()
               .put("count", static_cast<std::uint64_t>(set.size()))
               .put("min", best_outcome(set).makespan)
               .put("max", worst_outcome(set).makespan));
    } else if (opt_cmd->parsed()) {
      const Instance inst = load_instance();
      const OptResult o = opt(inst);
      emit(Record().put("opt", o.makespan).put("schedule", format_schedule(o.schedule)).put("loads", format_loads(loads(inst, o.schedule))));
    } else if (copt_cmd->parsed()) {
      const Instance inst = load_instance();
      const OptResult o = constrained_opt(inst, parse_assignment(fix, inst));
      emit(Record().put("opt", o.makespan).put("schedule", format_schedule(o.schedule)).put("loads", format_loads(loads(inst, o.schedule))));
    } else if (nash_cmd->parsed()) {
      const Instance inst = load_instance();
      for (const auto& s : pure_nash(inst)) emit(Record::line().put("nash", format_schedule(s)).put("makespan", makespan(inst, s)));
      const PoaPosReport p = poa_pos(inst);
      Record r;
      r.put("equilibria", static_cast<std::uint64_t>(p.equilibria)).put("opt", p.opt_makespan);
      if (p.has_nash) {
        r.put("poa", p.poa).put("pos", p.pos).put("worst", format_schedule(p.worst)).put("best", format_schedule(p.best));
      } else {
        r.put("pure_nash", std::string("none"));
      }
      emit(r);
    } else if (spoa_cmd->parsed()) {
      const Instance inst = load_instance();
      const PlayerOrder order = order_text.empty() ? PlayerOrder::identity(inst.jobs()) : PlayerOrder::parse(order_text);
      Record r;
      report_measure(r, spoa_fixed(inst, order));
      emit(r);
    } else if (spos_cmd->parsed()) {
      const Instance inst = load_instance();
      MeasureOptions o;
      o.ties = parse_ties(ties);
      o.threads = threads ? threads : default_threads();
      Record r;
      report_measure(r, spos(inst, o));
      r.put("ties", ties);
      emit(r);
    } else if (aspos_cmd->parsed()) {
      const Instance inst = load_instance();
      MeasureOptions o;
      o.ties = parse_ties(ties);
      o.threads = threads ? threads : default_threads();
      Record r;
      report_measure(r, adaptive_spos(inst, o));
      r.put("ties", ties);
      emit(r);
    } else if (thm3_cmd->parsed()) {
      const Instance inst = load_instance();
      const TwoGroupOrder g = thm3_groups(inst);
      const OutcomeSet set = spe_outcome_set(inst, AdaptiveTree::from_order(g.order, 2));
      const Rational n = Rational(inst.jobs());
      emit(Record()
               .put("order", g.order.to_string())
               .put("first_group", schedule_list(g.first))
               .put("first_machine", "M" + std::to_string(g.first_machine + 1))
               .put("second_group", schedule_list(g.second))
               .put("opt", g.opt_makespan)
               .put("best_makespan", best_outcome(set).makespan)
               .put("group_bound", Rational(static_cast<std::int64_t>(g.first.size()) + 1) * g.opt_makespan)
               .put("half_n_bound", (n / 2 + 1) * g.opt_makespan));
    } else if (thm4_cmd->parsed()) {
      const Instance inst = load_instance();
      const Thm4Tree t = thm4_tree(inst);
      const SpeOutcome o = spe(inst, t.tree, prefer_recommended(t.recommended));
      Record r;
      r.put("tree", t.tree.to_string()).put("schedule", format_schedule(o.schedule)).put("makespan", o.makespan);
      r.put("opt", opt(inst).makespan).put("fallback_nodes", t.fallback_nodes).put("failed_nodes", t.failed_nodes);
      if (probe_worst) r.put("worst_makespan", worst_outcome(spe_outcome_set(inst, t.tree)).makespan);
      emit(r);
    } else if (appd_cmd->parsed()) {
      const Instance inst = appendix_file.empty() ? gen_appendix_d() : parse_instance(read_source(appendix_file, in));
      const DeviationReport rep = deviation_check(inst, parse_assignment(fix, inst));
      emit(Record().put("opt", rep.optimum.makespan).put("schedule", format_schedule(rep.optimum.schedule)).put("loads", format_loads(rep.optimum_loads)));
      for (const auto& j : rep.jobs) {
        Record r = Record::line();
        r.put("job", "J" + std::to_string(j.job + 1)).put("home", "M" + std::to_string(j.home + 1)).put("home_cost", j.home_cost);
        for (const auto& d : j.deviations) r.put("deviation_M" + std::to_string(d.machine + 1), d.cost);
        r.put("improves", j.improves);
        emit(r);
      }
      emit(Record().put("some_player_stays", rep.some_player_stays()));
    } else if (gen_cmd->parsed()) {
      Instance inst = gen_appendix_d();
      if (gen_thm1_cmd->parsed()) inst = gen_thm1(parse_rational_arg(gen_eps, "eps"));
      if (gen_thm2_cmd->parsed()) inst = gen_thm2(gen_k);
      if (gen_thm5_cmd->parsed()) inst = gen_thm5(parse_rational_arg(gen_eps, "eps"));
      if (gen_ex1_cmd->parsed()) inst = gen_example1(parse_rational_arg(gen_l, "l"));
      (void)gen_appd_cmd;
      out << format_instance(inst);
    } else if (lp_cmd->parsed()) {
      SearchOptions o;
      o.filter = {!no_obs1, !no_mirror, !keep_extreme};
      if (!strict_eps.empty()) o.ties = LpTies::strict_by(parse_rational_arg(strict_eps, "eps"));
      std::tie(o.shard_index, o.shard_count) = parse_shard(shard);
      if (!only_structure.empty()) o.only_structure = parse_structure(lp_n, only_structure);
      if (only_leaf >= 0) o.only_opt_leaf = only_leaf;
      o.start = start;
      o.max_structures = max_structures;
      o.threads = threads ? threads : default_threads();
      if (!witness_dir.empty()) std::filesystem::create_directories(witness_dir);
      const SearchResult res = lp_search(lp_n, o, [&](const SearchHit& h) {
        Record r = Record::line();
        r.put("value", h.value).put("structure", h.structure.to_hex()).put("optleaf", h.opt_leaf);
        r.put("objective", "M" + std::to_string(h.objective_machine + 1));
        if (!witness_dir.empty()) {
          const auto path = std::filesystem::path(witness_dir) /
                            ("witness_" + h.structure.to_hex() + "_" + std::to_string(h.opt_leaf) + ".txt");
          std::ofstream(path) << "# value " << h.value.to_string() << " structure " << h.structure.to_hex()
                              << " optleaf " << h.opt_leaf << '\n'
                              << format_instance(h.witness());
          r.put("witness", path.string());
        }
        emit(r);
      });
      Record r;
      if (res.best) {
        r.put("best", res.best->value).put("structure", res.best->structure.to_hex()).put("optleaf", res.best->opt_leaf);
        r.put("round_trip", witness_round_trip(*res.best).ok);
      } else {
        r.put("best", std::string("none"));
      }
      r.put("structures", res.structures).put("lps", res.lps).put("optimal", res.optimal);
      r.put("infeasible", res.infeasible).put("unbounded", res.unbounded);
      if (res.first_unbounded) {
        r.put("first_unbounded", res.first_unbounded->structure.to_hex() + "/" + std::to_string(res.first_unbounded->opt_leaf) +
                                     "/M" + std::to_string(res.first_unbounded->objective_machine + 1));
      }
      r.put("complete", res.complete).put("next_cursor", res.next_cursor);
      emit(r);
    } else if (count_cmd->parsed()) {
      emit(Record()
               .put("n", count_n)
               .put("total", count_structures(count_n, {false, false, false}))
               .put("obs1", count_structures(count_n, {true, false, false}))
               .put("obs1_mirror", count_structures(count_n, {true, true, false}))
               .put("obs1_mirror_extreme", count_structures(count_n, {true, true, true})));
    } else if (verify_cmd->parsed()) {
      VerifyOptions o;
      o.threads = threads ? threads : default_threads();
      o.enforce_time_limits = !no_time_limits;
      int passed = 0;
      const VerificationReport rep = verify_paper(o, [&](const VerificationCheck& c) {
        passed += c.pass ? 1 : 0;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.3f", c.seconds);
        if (json) {
          nlohmann::ordered_json j{{"check", c.name}, {"pass", c.pass},        {"expected", c.expected},
                                   {"computed", c.computed}, {"seconds", c.seconds}, {"note", c.note}};
          out << j.dump() << '\n';
        } else {
          out << (c.pass ? "PASS " : "FAIL ") << c.name << " | expected: " << c.expected << " | computed: " << c.computed
              << " | " << secs << "s" << (c.note.empty() ? "" : " | note: " + c.note) << '\n';
        }
        out.flush();
      });
      if (!json) out << "passed " << passed << "/" << rep.checks.size() << '\n';
      return rep.all_pass() ? kOk : kCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace seqsched::cli
