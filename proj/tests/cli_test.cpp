#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "dispatch.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "seqsched");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = seqsched::cli::dispatch(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(SEQSCHED_SAMPLES) + "/" + name; }

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream s(text);
  for (std::string l; std::getline(s, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST(Cli, SpeOnFiveJobSample) {
  const CliRun r = run({"spe", "--order", "1,2,3,4,5", "--tie", "lowest", sample("thm1_eps001.txt")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "makespan=387/100 (3.87)")) << r.out;
  EXPECT_TRUE(has_line(r.out, "schedule=(M1,M2,M1,M2,M2)")) << r.out;
}

TEST(Cli, ReadsStdin) {
  const CliRun gen = run({"gen", "thm1", "--eps", "1/100"});
  ASSERT_EQ(gen.code, 0);
  const CliRun r = run({"opt", "-"}, gen.out);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "opt=1")) << r.out;
}

TEST(Cli, JsonLines) {
  const CliRun r = run({"--json", "spe-set", sample("thm1_eps001.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream s(r.out);
  int lines = 0;
  nlohmann::json last;
  for (std::string l; std::getline(s, l); ++lines) last = nlohmann::json::parse(l);
  EXPECT_EQ(lines, 4);
  EXPECT_EQ(last["count"], "3");
  EXPECT_EQ(last["max"], "387/100");
}

TEST(Cli, ScriptedRuleFamily) {
  const CliRun r = run({"spe", "--tie", "thm2:3", sample("thm2_k3.txt")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "makespan=5")) << r.out;
}

TEST(Cli, AdaptiveTreeAndProbe) {
  const CliRun r = run({"tree-thm4", "--probe-worst", sample("thm1_eps001.txt")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "makespan=1"));
  EXPECT_TRUE(has_line(r.out, "failed_nodes=0"));
  const CliRun s = run({"spe", "--tree", "thm4", "--tie", "recommended", sample("thm1_eps001.txt")});
  EXPECT_TRUE(has_line(s.out, "makespan=1")) << s.out << s.err;
}

TEST(Cli, Measures) {
  EXPECT_TRUE(has_line(run({"spoa", sample("thm1_eps001.txt")}).out, "value=387/100 (3.87)"));
  const CliRun w = run({"adaptive-spos", "--ties", "worst", sample("thm5_eps01.txt")});
  EXPECT_TRUE(has_line(w.out, "value=59/40 (1.475)")) << w.out;
  EXPECT_TRUE(has_line(run({"spos", "--threads", "2", sample("example1_l5.txt")}).out, "value=1"));
  const CliRun n = run({"nash", sample("example1_l5.txt")});
  EXPECT_TRUE(has_line(n.out, "poa=5"));
  EXPECT_TRUE(has_line(n.out, "pos=1"));
}

TEST(Cli, DeviationsAndCounts) {
  const CliRun d = run({"check-appendix-d"});
  EXPECT_EQ(d.code, 0);
  EXPECT_TRUE(has_line(d.out, "loads=(10,9,6)"));
  EXPECT_TRUE(has_line(d.out, "some_player_stays=no"));
  const CliRun c = run({"count-structures", "--n", "4"});
  EXPECT_TRUE(has_line(c.out, "obs1=2560"));
}

TEST(Cli, LpSearchStreamsOneLinePerImprovement) {
  const CliRun r = run({"lp-search", "--n", "3", "--threads", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("value=", 0), 0u);
  EXPECT_NE(r.out.find(" structure="), std::string::npos);
  EXPECT_NE(r.out.find(" optleaf="), std::string::npos);
  EXPECT_TRUE(has_line(r.out, "complete=yes"));
  EXPECT_TRUE(has_line(r.out, "round_trip=yes"));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"spe", "--tie", "sideways", sample("thm1_eps001.txt")}).code, 2);
  EXPECT_EQ(run({"spe", "/no/such/file"}).code, 2);
  EXPECT_EQ(run({"opt", "-"}, "2 2\n1 2\n").code, 2);
  EXPECT_EQ(run({"spe", "--order", "1,2", sample("thm1_eps001.txt")}).code, 2);
  EXPECT_EQ(run({"lp-search", "--n", "3", "--shard", "x"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
