// Copyright 2026 The pmpspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pmp/cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pmp/edge_list.h"
#include "pmp/generators.h"

namespace pmp {
namespace {

using nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
};

CliRun Cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(args, in, out, err);
  r.out = out.str();
  return r;
}

TEST(CliTest, GenThenSpectrum) {
  const CliRun gen = Cli({"gen", "--cycle", "5"});
  ASSERT_EQ(gen.code, 0);
  EXPECT_EQ(gen.out, WriteEdgeList(Cycle(5)));
  const CliRun spectrum_run = Cli({"spectrum"}, gen.out);
  ASSERT_EQ(spectrum_run.code, 0) << spectrum_run.out;
  const json r = json::parse(spectrum_run.out);
  EXPECT_EQ(r["command"], "spectrum");
  const json& s = r["payload"]["spectrum_adj"];
  ASSERT_EQ(s.size(), 5u);
  const double expected[] = {-1.61803398875, -1.61803398875, 0.61803398875,
                             0.61803398875, 2.0};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(s[i].get<double>(), expected[i], 1e-11);
}

TEST(CliTest, PaleyFunctionColoring) {
  const CliRun gen = Cli({"gen", "--paley"});
  ASSERT_EQ(gen.code, 0);
  const CliRun color = Cli({"color", "--algorithm", "function"}, gen.out);
  ASSERT_EQ(color.code, 0) << color.out;
  const json p = json::parse(color.out)["payload"];
  EXPECT_EQ(p["palette"], 7);
  EXPECT_EQ(p["proper"], true);
  EXPECT_EQ(p["bound"], 7);
  EXPECT_EQ(p["algorithm"], "function");
}

TEST(CliTest, OtherGenerators) {
  EXPECT_EQ(Cli({"gen", "--complete-bipartite", "2,3"}).out,
            WriteEdgeList(CompleteBipartite(2, 3)));
  EXPECT_EQ(Cli({"gen", "--petersen", "--subdivide"}).out,
            WriteEdgeList(Subdivide(Petersen())));
  EXPECT_EQ(Cli({"gen", "--random-regular", "12,3", "--seed", "4"}).out,
            WriteEdgeList(RandomRegular(12, 3, 4)));
  EXPECT_EQ(Cli({"gen", "--gnp", "9,0.4", "--seed", "2"}).out,
            WriteEdgeList(RandomGnp(9, 0.4, 2)));
  EXPECT_EQ(Cli({"gen", "--maps", "1 2 0;0 0 1"}).out,
            WriteArcList(FunctionGraph({{1, 2, 0}, {0, 0, 1}})));
  EXPECT_EQ(Cli({"gen", "--path", "4"}).out, WriteEdgeList(Path(4)));
  EXPECT_EQ(Cli({"gen", "--complete", "4"}).out, WriteEdgeList(Complete(4)));
}

TEST(CliTest, RoundTripThroughFile) {
  const std::string path = ::testing::TempDir() + "/pmp_cli_roundtrip.txt";
  const CliRun gen = Cli({"gen", "--random-regular", "20,4", "--seed", "7"});
  {
    std::ofstream f(path);
    f << gen.out;
  }
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  EXPECT_EQ(ParseEdgeList(text.str()), RandomRegular(20, 4, 7));
  const CliRun a = Cli({"bounds", "--input", path});
  const CliRun b = Cli({"bounds"}, gen.out);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  std::remove(path.c_str());
}

TEST(CliTest, ReportsAreByteIdentical) {
  const std::string g = Cli({"gen", "--gnp", "12,0.4", "--seed", "3"}).out;
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{
           {"spectrum"}, {"bounds"}, {"color"}, {"tutte"},
           {"tutte", "--mode", "randomized", "--seed", "9"}}) {
    const CliRun a = Cli(args, g);
    const CliRun b = Cli(args, g);
    EXPECT_EQ(a.out, b.out);
  }
  const CliRun a = Cli({"limit", "--family", "cycle", "--max-n", "20"});
  EXPECT_EQ(a.out, Cli({"limit", "--family", "cycle", "--max-n", "20"}).out);
}

TEST(CliTest, BipartiteAndTutte) {
  const CliRun bip = Cli({"bipartite"}, WriteEdgeList(Cycle(4)));
  ASSERT_EQ(bip.code, 0) << bip.out;
  const json v = json::parse(bip.out)["payload"];
  EXPECT_EQ(v["symmetric_spectrum"], true);
  EXPECT_EQ(v["bipartition"]["A"], json({0, 2}));
  EXPECT_EQ(v["defect"], json::array());

  const CliRun tutte = Cli({"tutte"}, WriteEdgeList(CompleteBipartite(1, 3)));
  ASSERT_EQ(tutte.code, 0);
  const json t = json::parse(tutte.out)["payload"];
  EXPECT_EQ(t["c_star"], 3.0);
  EXPECT_EQ(t["classical_holds"], false);
  EXPECT_EQ(t["witness"], json({0}));
  EXPECT_TRUE(t["matching"].is_null());

  const json k4 = json::parse(Cli({"tutte"}, WriteEdgeList(Complete(4))).out);
  EXPECT_EQ(k4["payload"]["matching"].size(), 2u);
  EXPECT_EQ(k4["payload"]["bh_condition"], true);
}

TEST(CliTest, LimitReport) {
  const CliRun r = Cli({"limit", "--family", "cycle", "--max-n", "256",
                     "--interval", "-2,2"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json p = json::parse(r.out)["payload"];
  EXPECT_LT(p["max_gap"].get<double>(), 0.05);
  EXPECT_GT(p["points_count"].get<int>(), 256);
  EXPECT_EQ(p["per_index_gaps"].size(), 254u);
  EXPECT_EQ(p["trend"], "nonincreasing");
}

TEST(CliTest, VerifyPasses) {
  const CliRun r = Cli({"verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["payload"]["passed"], true);
}

TEST(CliTest, ErrorCodes) {
  auto code_of = [](const CliRun& r) {
    return json::parse(r.out)["error"]["code"].get<std::string>();
  };
  const CliRun bad_flag = Cli({"spectrum", "--bogus"});
  EXPECT_EQ(bad_flag.code, 2);
  EXPECT_EQ(code_of(bad_flag), "usage");
  const CliRun no_sub = Cli({});
  EXPECT_EQ(no_sub.code, 2);
  const CliRun malformed = Cli({"spectrum"}, "3 1\n0 0\n");
  EXPECT_EQ(malformed.code, 2);
  EXPECT_EQ(code_of(malformed), "malformed_edge_list");
  const CliRun cap = Cli({"tutte"}, WriteEdgeList(Cycle(30)));
  EXPECT_EQ(cap.code, 3);
  EXPECT_EQ(code_of(cap), "cap_exceeded");
  const CliRun pre = Cli({"bipartite"}, "4 2\n0 1\n2 3\n");
  EXPECT_EQ(pre.code, 2);
  EXPECT_EQ(code_of(pre), "precondition_failed");
  const CliRun invalid = Cli({"gen", "--cycle", "2"});
  EXPECT_EQ(invalid.code, 2);
  EXPECT_EQ(code_of(invalid), "invalid_argument");
  const CliRun undirected = Cli({"color", "--algorithm", "function"},
                             WriteEdgeList(Cycle(5)));
  EXPECT_EQ(undirected.code, 2);
  const CliRun missing = Cli({"spectrum", "--input", "/nonexistent/graph.txt"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(Cli({"bounds", "--tol", "-1"}, WriteEdgeList(Cycle(5))).code, 2);
}

TEST(CliTest, RandomizedTutteOnLargeGraph) {
  const CliRun r = Cli({"tutte", "--mode", "randomized", "--samples", "200"},
                    WriteEdgeList(Cycle(30)));
  ASSERT_EQ(r.code, 0) << r.out;
  const json p = json::parse(r.out)["payload"];
  EXPECT_EQ(p["mode"], "randomized");
  EXPECT_EQ(p["classical_holds"], true);
}

}  // namespace
}  // namespace pmp
