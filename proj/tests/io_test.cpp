// Copyright 2026 The nihoperm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nihoperm/io.hpp"

#include <gtest/gtest.h>

namespace nihoperm {
namespace {

TEST(IoTest, WitnessShapes) {
  const Witness collision{WitnessKind::kCollision, 1, 2, 1};
  EXPECT_EQ(io::ToJson(collision).dump(), R"({"kind":"collision","x1":"0x1","x2":"0x2","image":"0x1"})");
  const Witness off{WitnessKind::kOffTarget, 0x1f, 0x1f, 0};
  EXPECT_EQ(io::ToJson(off).dump(), R"({"kind":"off-target","x":"0x1f","image":"0x0"})");
}

TEST(IoTest, VerifyReportJson) {
  VerifyReport r;
  r.method = VerifyMethod::kCriterion;
  r.verdict = true;
  r.domain_size = 9;
  r.elapsed = std::chrono::milliseconds(42);
  EXPECT_EQ(io::ToJson(r, false).dump(),
            R"({"method":"lemma1","verdict":true,"witness":null,"domain_size":9,"elapsed_ms":0})");
  EXPECT_EQ(io::ToJson(r).at("elapsed_ms"), 42);
  EXPECT_EQ(io::ToCsv(r, false), "lemma1,true,,9,0");
  EXPECT_EQ(io::VerifyReportCsvHeader(), "method,verdict,witness,domain_size,elapsed_ms");
}

TEST(IoTest, BruteforceReportRoundTrip) {
  const Field gf4 = Field::OfDegree(2);
  const auto r = IsPermutationBruteforce(gf4, [&](Word x) { return gf4.PowU(x, 3); });
  const auto j = nlohmann::json::parse(io::ToJson(r, false).dump());
  EXPECT_EQ(j["verdict"], false);
  EXPECT_EQ(j["witness"]["x1"], "0x1");
  EXPECT_EQ(j["witness"]["x2"], "0x2");
  EXPECT_EQ(io::ToCsv(r, false), "bruteforce,false,0x1;0x2->0x1,4,0");
}

TEST(IoTest, AnalysisRows) {
  const QuadFactorReport q{0x3, 0x5, 0x1, true, false, false, true, 0, false};
  EXPECT_EQ(io::ToJson(q).dump(),
            R"({"a":"0x3","b":"0x5","t":"0x1","divides":true,"cond1":false,"cond2":false,"cond3":true,)"
            R"("circle_roots":0,"relation_holds":false})");
  EXPECT_EQ(io::ToCsv(q), "0x3,0x5,0x1,true,false,false,true,0,false");
  EXPECT_EQ(io::QuadFactorCsvHeader(), "a,b,t,divides,cond1,cond2,cond3,circle_roots,relation_holds");
  const UVPair p{0xa, 0xb, 0};
  EXPECT_EQ(io::ToJson(p).dump(), R"({"u":"0xa","v":"0xb","residual":"0x0"})");
  EXPECT_EQ(io::ToCsv(p), "0xa,0xb,0x0");
}

}  // namespace
}  // namespace nihoperm
