// Copyright 2026 The SwissCheese Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swisscheese/io.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "swisscheese/constructions.h"
#include "swisscheese/error.h"
#include "swisscheese/transforms.h"
#include "test_util.h"

namespace swisscheese {
namespace {

using ::swisscheese::testing::RandomCheese;
using ::swisscheese::testing::Rng;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const CheeseError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

bool SameBits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool BitIdentical(const AbstractSwissCheese& a, const AbstractSwissCheese& b) {
  if (a.size() != b.size() || a.name() != b.name()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Disk& p = a.disk(i);
    const Disk& q = b.disk(i);
    if (!SameBits(p.cx, q.cx) || !SameBits(p.cy, q.cy) || !SameBits(p.r, q.r)) {
      return false;
    }
  }
  return true;
}

std::size_t CountOf(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos;
       pos = s.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

// Any finite double, including subnormals and signed zero.
double WildDouble(Rng& rng) {
  for (;;) {
    const double v = std::bit_cast<double>(rng.engine()());
    if (std::isfinite(v)) return v;
  }
}

TEST(CheeseJsonTest, Figure1Document) {
  const nlohmann::json doc = nlohmann::json::parse(SaveCheese(Figure1Cheese()));
  EXPECT_EQ(doc.at("format_version"), 1);
  EXPECT_EQ(doc.at("holes").size(), 9u);
  EXPECT_EQ(doc.at("outer").at("cx"), 0.0);
  EXPECT_EQ(doc.at("outer").at("r"), 1.0);
  EXPECT_EQ(LoadCheese(SaveCheese(Figure1Cheese())), Figure1Cheese());
}

TEST(CheeseJsonTest, SchemaErrors) {
  EXPECT_EQ(CodeOf([] { LoadCheese("{}"); }), ErrorCode::kSchemaViolation);
  try {
    LoadCheese("{}");
  } catch (const CheeseError& e) {
    EXPECT_NE(std::string(e.what()).find("outer"), std::string::npos);
  }
  EXPECT_EQ(CodeOf([] { LoadCheese("{"); }), ErrorCode::kMalformedJson);
  EXPECT_EQ(CodeOf([] { LoadCheese("[]"); }), ErrorCode::kSchemaViolation);
  EXPECT_EQ(CodeOf([] {
              LoadCheese(R"({"outer":{"cx":0,"cy":0,"r":1},"colour":"red"})");
            }),
            ErrorCode::kSchemaViolation);
  EXPECT_EQ(CodeOf([] {
              LoadCheese(R"({"outer":{"cx":0,"cy":0,"r":1,"z":0}})");
            }),
            ErrorCode::kSchemaViolation);
  EXPECT_EQ(CodeOf([] {
              LoadCheese(
                  R"({"outer":{"cx":0,"cy":0,"r":1},"holes":[{"cx":0,"cy":0,"r":-1}]})");
            }),
            ErrorCode::kNegativeRadius);
  EXPECT_EQ(CodeOf([] {
              LoadCheese(R"({"format_version":2,"outer":{"cx":0,"cy":0,"r":1}})");
            }),
            ErrorCode::kSchemaViolation);
  EXPECT_EQ(CodeOf([] { LoadCheese(R"({"outer":{"cx":"0","cy":0,"r":1}})"); }),
            ErrorCode::kSchemaViolation);
}

TEST(CheeseJsonTest, MinimalDocument) {
  const AbstractSwissCheese a = LoadCheese(R"({"outer":{"cx":1,"cy":2,"r":3}})");
  EXPECT_EQ(a.outer(), (Disk{1, 2, 3}));
  EXPECT_EQ(a.hole_count(), 0u);
}

TEST(CheeseJsonTest, RoundTripIsBitExact) {
  Rng rng(314);
  for (int i = 0; i < 1000; ++i) {
    const AbstractSwissCheese base = RandomCheese(rng, 0, 20);
    std::vector<Disk> holes(base.holes().begin(), base.holes().end());
    if (i % 3 == 0) {
      holes.push_back({WildDouble(rng), WildDouble(rng), std::abs(WildDouble(rng))});
      holes.push_back({-0.0, std::numeric_limits<double>::denorm_min(), 0.0});
    }
    const AbstractSwissCheese a(base.outer(), holes,
                                i % 2 ? "c" + std::to_string(i) : "");
    const AbstractSwissCheese b = LoadCheese(SaveCheese(a));
    ASSERT_TRUE(BitIdentical(a, b)) << i;
    EXPECT_EQ(SaveCheese(a), SaveCheese(b));
  }
}

TEST(RegionsJsonTest, RoundTrip) {
  const std::vector<RegionPair> r{{{0.5, -0.25}, 0.1, 0.2, 0.05},
                                  {{0, 0}, 0.6, 0.7, 0.01}};
  const std::vector<RegionPair> back = LoadRegions(SaveRegions(r));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].center, r[0].center);
  EXPECT_EQ(back[1].inner, 0.6);
  EXPECT_EQ(back[1].margin, 0.01);
  EXPECT_EQ(CodeOf([] { LoadRegions(R"({"regions":[{"cx":0}]})"); }),
            ErrorCode::kSchemaViolation);
}

TEST(TraceJsonTest, ValidatesTransformTraces) {
  const AbstractSwissCheese a({0, 0, 3}, {{0, 0, 1}, {1, 0, 1}, {2.5, 0, 0.8}});
  const TransformResult r = Classicalise(a);
  const nlohmann::json t = ToJson(r.trace);
  EXPECT_NO_THROW(ValidateTraceJson(t));
  EXPECT_EQ(t.at("steps").size(), r.trace.steps.size());
  nlohmann::json bad = t;
  bad["steps"][0]["delta_after"] = bad["steps"][0]["delta_before"].get<double>() - 1.0;
  EXPECT_EQ(CodeOf([&] { ValidateTraceJson(bad); }),
            ErrorCode::kControlContractFailed);
  nlohmann::json broken = t;
  broken["steps"][0].erase("kind");
  EXPECT_EQ(CodeOf([&] { ValidateTraceJson(broken); }),
            ErrorCode::kSchemaViolation);
}

TEST(ReportJsonTest, Fields) {
  const nlohmann::json j = ToJson(Report(Figure1Cheese(), 0.0));
  EXPECT_EQ(j.at("classical"), true);
  EXPECT_EQ(j.at("delta1"), 5.0 / 32.0);
  EXPECT_EQ(j.at("delta2"), 943.0 / 1024.0);
}

TEST(RenderSvgTest, CircleCounts) {
  EXPECT_EQ(CountOf(RenderSvg(Figure1Cheese()), "<circle"), 10u);
  EXPECT_EQ(CountOf(RenderSvg(AbstractSwissCheese({0, 0, 1})), "<circle"), 1u);
  const AbstractSwissCheese degenerate({0, 0, 1}, {{0.2, 0, 0}, {0, 0, 0.1}});
  EXPECT_EQ(CountOf(RenderSvg(degenerate), "<circle"), 2u);
  RenderOptions labels;
  labels.show_indices = true;
  EXPECT_EQ(CountOf(RenderSvg(Figure1Cheese(), labels), "<text"), 9u);
  EXPECT_EQ(RenderSvg(Figure1Cheese()), RenderSvg(Figure1Cheese()));
}

TEST(RenderSvgTest, InvalidOptions) {
  RenderOptions o;
  o.width_px = 8;
  EXPECT_EQ(CodeOf([&] { RenderSvg(Figure1Cheese(), o); }),
            ErrorCode::kInvalidParameter);
  o.width_px = 64;
  o.margin_fraction = 0.5;
  EXPECT_EQ(CodeOf([&] { o.Validate(); }), ErrorCode::kInvalidParameter);
}

TEST(FileIoTest, MissingFile) {
  EXPECT_EQ(CodeOf([] { ReadFile("/nonexistent/dir/file.json"); }),
            ErrorCode::kIo);
  EXPECT_EQ(CodeOf([] { WriteFile("/nonexistent/dir/file.json", "x"); }),
            ErrorCode::kIo);
}

}  // namespace
}  // namespace swisscheese
