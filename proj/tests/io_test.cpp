#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "seqsched/constructions.hpp"
#include "seqsched/instance_io.hpp"
#include "seqsched/tie_rules.hpp"
#include "seqsched/tree.hpp"

using namespace seqsched;

TEST(InstanceIo, RoundTrip) {
  for (const Instance& inst : {gen_thm1(Rational(1, 100)), gen_thm2(3), gen_thm5(Rational(1, 10)), gen_appendix_d()}) {
    EXPECT_EQ(parse_instance(format_instance(inst)), inst);
  }
}

TEST(InstanceIo, CommentsDecimalsAndInitialLoads) {
  const Instance inst = parse_instance("# two machines\n2 2\n1 0.5\n\n3/2 2\ninitial_loads 1 0\n");
  EXPECT_EQ(inst.time(0, 1), Rational(1, 2));
  EXPECT_EQ(inst.time(1, 0), Rational(3, 2));
  EXPECT_EQ(inst.initial_loads()[0], Rational(1));
}

TEST(InstanceIo, ErrorsCarryLineNumbers) {
  try {
    parse_instance("2 2\n1 2\n1 x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_instance(""), ParseError);
  EXPECT_THROW(parse_instance("2 2\n1 2\n"), ParseError);
  EXPECT_THROW(parse_instance("2 2\n1 2\n3 4\n5 6\n"), ParseError);
  EXPECT_THROW(parse_instance("1 1\n-1\n"), ParseError);
  EXPECT_THROW(parse_instance("2 1\n1\n1\ninitial_loads 1\n"), ParseError);
}

TEST(InstanceIo, SamplesParse) {
  for (const char* name : {"thm1_eps001.txt", "thm2_k2.txt", "thm2_k3.txt", "thm2_k4.txt", "thm5_eps01.txt",
                           "appendix_d.txt", "example1_l5.txt"}) {
    std::ifstream f(std::string(SEQSCHED_SAMPLES) + "/" + name);
    ASSERT_TRUE(f) << name;
    std::stringstream buf;
    buf << f.rdbuf();
    EXPECT_NO_THROW(parse_instance(buf.str())) << name;
  }
}

TEST(PlayerOrder, ParseIsOneBased) {
  const PlayerOrder o = PlayerOrder::parse("1,5,2,3,4");
  EXPECT_EQ(o.size(), 5);
  EXPECT_EQ(o.to_string(), "(J1,J5,J2,J3,J4)");
  EXPECT_THROW(PlayerOrder::parse("1,1"), std::invalid_argument);
  EXPECT_THROW(PlayerOrder::parse("0,1"), std::invalid_argument);
}

TEST(AdaptiveTree, PreorderRoundTrip) {
  const std::string text = "J2(J1(.,.),J3(J1(.,.),J1(.,.)))";
  EXPECT_THROW(AdaptiveTree::parse(text, 3, 2), std::invalid_argument);
  const std::string full = "J2(J1(J3(.,.),J3(.,.)),J3(J1(.,.),J1(.,.)))";
  EXPECT_EQ(AdaptiveTree::parse(full, 3, 2).to_string(), full);
  EXPECT_THROW(AdaptiveTree::parse("J1(J1(.,.),J2(.,.))", 2, 2), std::invalid_argument);
}

TEST(AdaptiveTree, FromOrderIsLevelOrder) {
  const AdaptiveTree t = AdaptiveTree::from_order(PlayerOrder::parse("2,1"), 2);
  EXPECT_EQ(t.player(t.root()), 1);
  EXPECT_EQ(t.child(0, 0), 1);
  EXPECT_EQ(t.child(0, 1), 2);
  EXPECT_EQ(t.player(1), 0);
  EXPECT_EQ(t.to_string(), "J2(J1(.,.),J1(.,.))");
}

TEST(ScriptedTable, ParseFormatRoundTrip) {
  const std::string text = "player 4 when 1=1,2=1,3=2 prefer 1\nplayer 5 when * prefer 2\ndefault prefer 2\n";
  const ScriptedTable t = parse_scripted_table(text);
  ASSERT_EQ(t.entries.size(), 2u);
  EXPECT_EQ(t.entries[0].player, 3);
  EXPECT_EQ(t.entries[0].when.size(), 3u);
  EXPECT_EQ(t.fallback, 1);
  EXPECT_EQ(format_scripted_table(t), text);
  EXPECT_THROW(parse_scripted_table("player x when * prefer 1\n"), ParseError);
  EXPECT_THROW(parse_scripted_table("player 1 prefer 1\n"), ParseError);
}
