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

#include "pmp/report.h"

#include <gtest/gtest.h>

#include "pmp/generators.h"

namespace pmp {
namespace {

TEST(ReportTest, RealRounding) {
  EXPECT_EQ(Real(1.0 / 3).dump(), "0.333333333333");
  EXPECT_EQ(Real(2.0000000000000004).dump(), "2.0");
  EXPECT_EQ(Real(-3e-15).dump(), "0.0");
  EXPECT_TRUE(Real(NAN).is_null());
  EXPECT_EQ(Real(12345678.9012345).dump(), "12345678.9012");
}

TEST(ReportTest, DigestIsStable) {
  EXPECT_EQ(Digest(""), "cbf29ce484222325");
  EXPECT_EQ(Digest("a"), "af63dc4c8601ec8c");
  EXPECT_NE(Digest("3 2\n0 1\n1 2\n"), Digest("3 2\n0 1\n0 2\n"));
}

TEST(ReportTest, SpectralReportKeys) {
  const nlohmann::json r = SpectralReportJson(Cycle(5));
  for (const char* key :
       {"n", "d", "spectrum_adj", "spectrum_lap", "M", "m", "wilf", "hoffman",
        "gap", "mL", "ML"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
  EXPECT_EQ(r["n"], 5);
  EXPECT_EQ(r["spectrum_adj"].size(), 5u);
  EXPECT_TRUE(SpectralReportJson(Path(3))["gap"].is_null());
  EXPECT_TRUE(SpectralReportJson(Graph::FromEdges(2, {}))["hoffman"].is_null());
}

TEST(ReportTest, EnvelopeKeysAreSorted) {
  const std::string text =
      DumpReport(MakeReport("spectrum", "abc", {{"z", 1}, {"a", 2}}));
  EXPECT_LT(text.find("\"command\""), text.find("\"input_digest\""));
  EXPECT_LT(text.find("\"input_digest\""), text.find("\"payload\""));
  EXPECT_LT(text.find("\"payload\""), text.find("\"version\""));
  EXPECT_LT(text.find("\"a\""), text.find("\"z\""));
  EXPECT_EQ(text.back(), '\n');
}

}  // namespace
}  // namespace pmp
