#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "monopolar/cli.hpp"
#include "monopolar/graph.hpp"
#include "monopolar/patterns.hpp"

using monopolar::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

const char* kC4 = "4 4\n0 1\n1 2\n2 3\n3 0\n";
const char* kW5 = "6 10\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 5\n2 5\n3 5\n4 5\n";
const char* kChair = "5 4\n0 1\n1 2\n1 3\n3 4\n";
const char* kDiamond = "4 5\n0 2\n0 3\n1 2\n1 3\n2 3\n";

const std::vector<std::string> kStrategies{"exact", "fpt-vertex", "fpt-edge", "oracle", "mis"};

}  // namespace

TEST(Cli, RecognizeC4) {
  for (const auto& s : kStrategies) {
    const auto r = call({"recognize", "-", "--strategy", s, "--verify"}, kC4);
    EXPECT_EQ(r.code, 0) << s;
    EXPECT_TRUE(r.out == "YES\nC 0 2\nI 1 3\n" || r.out == "YES\nC 1 3\nI 0 2\n") << r.out;
  }
}

TEST(Cli, RecognizeW5) {
  for (const auto& s : kStrategies) {
    const auto r = call({"recognize", "-", "--strategy", s}, kW5);
    EXPECT_EQ(r.code, 1) << s;
    EXPECT_EQ(r.out, "NO\n");
  }
}

TEST(Cli, ExtendDiamond) {
  const auto c = temp_file("diamond.con", "0 C\n1 C\n");
  const auto r = call({"extend", "-", "--constraints", c}, kDiamond);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "NO\n");
  EXPECT_EQ(call({"extend", "-", "--constraints", c, "--strategy", "oracle"}, kDiamond).code, 1);
  EXPECT_EQ(call({"extend", "-", "--constraints", c, "--strategy", "mis"}, kDiamond).code, 2);
}

TEST(Cli, ListPartition) {
  const auto c = temp_file("p3.lists", "0 CI\n1 C\n");
  const auto r = call({"lmp", "-", "--constraints", c}, "3 2\n0 1\n1 2\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "YES\nC 1\nI 0 2\n");
  EXPECT_EQ(call({"extend", "-", "--constraints", c}, "3 2\n0 1\n1 2\n").code, 2);
}

TEST(Cli, Stats) {
  const auto r = call({"recognize", "-", "--stats"}, kChair);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("leaves "), std::string::npos);
  EXPECT_NE(r.err.find("bound 5\n"), std::string::npos);
}

TEST(Cli, Modulator) {
  const auto v = call({"modulator", "-", "--kind", "vertex"}, "4 3\n0 1\n0 2\n0 3\n");
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "SIZE 1\nV 0\n");
  const auto e = call({"modulator", "-", "--kind", "edge"}, "5 4\n0 1\n0 2\n0 3\n0 4\n");
  EXPECT_EQ(e.out.substr(0, 7), "SIZE 2\n");
  EXPECT_EQ(call({"modulator", "-", "--kind", "both"}, kC4).code, 2);
}

TEST(Cli, VerifyAcceptsSolverOutput) {
  const auto g = temp_file("chair.txt", kChair);
  for (const auto& s : kStrategies) {
    const auto r = call({"recognize", g, "--strategy", s});
    ASSERT_EQ(r.code, 0);
    const auto v = call({"verify", g, "-"}, r.out);
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.out, "valid\n");
  }
  EXPECT_EQ(call({"verify", g, "-"}, "YES\nC 0 1 2\nI 3 4\n").out, "invalid\n");
  EXPECT_EQ(call({"verify", g, "-"}, "NO\n").code, 1);
  const auto c = temp_file("chair.con", "0 C\n");
  EXPECT_EQ(call({"verify", g, "-", "--constraints", c}, "YES\nC 1 3\nI 0 2 4\n").code, 1);
}

TEST(Cli, Gen) {
  const auto a = call({"gen", "planted", "12", "3", "4", "0.5", "--seed", "7"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, call({"gen", "planted", "12", "3", "4", "0.5", "--seed", "7"}).out);
  EXPECT_EQ(monopolar::parse_graph(a.out).size(), 12);
  EXPECT_EQ(call({"recognize", "-"}, a.out).code, 0);

  const auto line = call({"gen", "linegraph", "8", "0.4", "--seed", "1"});
  EXPECT_FALSE(monopolar::find_induced_claw(monopolar::parse_graph(line.out)));

  const auto empty = call({"gen", "gnp", "5", "0.0", "--seed", "0"});
  EXPECT_EQ(empty.out, "5 0\n");
  EXPECT_EQ(call({"recognize", "-"}, empty.out).out, "YES\nC\nI 0 1 2 3 4\n");

  EXPECT_EQ(call({"gen", "chairpath", "2"}).out.substr(0, 5), "10 8\n");
  EXPECT_NE(call({"gen", "gnp", "6", "0.5", "--seed", "1"}).out, call({"gen", "gnp", "6", "0.5", "--seed", "2"}).out);
}

TEST(Cli, GenRejectsBadParameters) {
  EXPECT_EQ(call({"gen", "gnp", "5", "1.5"}).code, 2);
  EXPECT_EQ(call({"gen", "planted", "5", "2", "6", "0.5"}).code, 2);
  EXPECT_EQ(call({"gen", "gnp", "5"}).code, 2);
  EXPECT_EQ(call({"gen", "torus", "5"}).code, 2);
  EXPECT_EQ(call({"gen", "gnp", "five", "0.5"}).code, 2);
}

TEST(Cli, Bench) {
  const auto g = temp_file("bench_chair.txt", kChair);
  const auto w = temp_file("bench_w5.txt", kW5);
  const auto r = call({"bench", g, w, "--jobs", "2"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(header, "file\tn\tm\tmu0\tnodes\tleaves\tbound\ttime_ms\tanswer");
  EXPECT_EQ(first.substr(0, g.size() + 7), g + "\t5\t4\t5\t");
  EXPECT_NE(first.find("\tYES"), std::string::npos);
  EXPECT_EQ(second.substr(0, w.size()), w);
  EXPECT_NE(second.find("\tNO"), std::string::npos);
}

TEST(Cli, Errors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"recognize"}).code, 2);
  EXPECT_EQ(call({"recognize", "/nonexistent/graph"}).code, 2);
  EXPECT_EQ(call({"recognize", "-", "--strategy", "magic"}, kC4).code, 2);
  EXPECT_EQ(call({"recognize", "-", "--frobnicate"}, kC4).code, 2);
  const auto bad = call({"recognize", "-"}, "2 1\n0 0\n");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(call({"recognize", "-", "--strategy", "oracle"}, "25 0\n").code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}
