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

#include "swisscheese/transforms.h"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "swisscheese/constructions.h"
#include "swisscheese/error.h"
#include "swisscheese/geometry.h"
#include "test_util.h"

namespace swisscheese {
namespace {

using ::swisscheese::testing::RandomAnnular;
using ::swisscheese::testing::RandomCheese;
using ::swisscheese::testing::RandomRedundantCheese;
using ::swisscheese::testing::Rng;

void ExpectDisk(const Disk& got, const Disk& want, double tol = 1e-15) {
  EXPECT_NEAR(got.cx, want.cx, tol);
  EXPECT_NEAR(got.cy, want.cy, tol);
  EXPECT_NEAR(got.r, want.r, tol);
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const CheeseError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

void ExpectMonotone(const TransformTrace& t) {
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TransformStep& s = t.steps[i];
    EXPECT_GE(s.delta_after, s.delta_before - 1e-12);
    EXPECT_NEAR(s.gain, s.delta_after - s.delta_before, 1e-9);
    if (i > 0) {
      EXPECT_NEAR(s.delta_before, t.steps[i - 1].delta_after, 1e-12);
    }
  }
}

TEST(ReduceRedundancyTest, Examples) {
  const AbstractSwissCheese far({0, 0, 1}, {{5, 0, 0.1}});
  EXPECT_EQ(ReduceRedundancy(far).cheese.hole_count(), 0u);

  const AbstractSwissCheese nested({0, 0, 1}, {{0, 0, 0.1}, {0, 0, 0.2}});
  const AbstractSwissCheese r = ReduceRedundancy(nested).cheese;
  ASSERT_EQ(r.hole_count(), 1u);
  EXPECT_EQ(r.disk(1), (Disk{0, 0, 0.2}));

  const AbstractSwissCheese f = Figure1Cheese();
  const AbstractSwissCheese fr = ReduceRedundancy(f).cheese;
  EXPECT_TRUE(std::ranges::equal(fr.disks(), f.disks()));
}

TEST(ReduceRedundancyTest, EqualDisksKeepLowestIndex) {
  const AbstractSwissCheese a({0, 0, 1}, {{0.3, 0, 0.1}, {-0.3, 0, 0.2},
                                          {0.3, 0, 0.1}});
  const TransformResult r = ReduceRedundancy(a);
  ASSERT_EQ(r.cheese.hole_count(), 2u);
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].indices, (std::vector<std::size_t>{3}));
  EXPECT_EQ(r.cheese.disk(1), (Disk{-0.3, 0, 0.2}));
}

TEST(SemiclassicaliseTest, CombineExample) {
  const AbstractSwissCheese a({0, 0, 3}, {{0, 0, 1}, {1, 0, 1}});
  const TransformResult r = Semiclassicalise(a);
  ASSERT_EQ(r.cheese.hole_count(), 1u);
  ExpectDisk(r.cheese.disk(1), {0.5, 0, 1.5});
  EXPECT_TRUE(IsSemiclassical(r.cheese, 1e-9));
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].kind, StepKind::kCombine);
  EXPECT_NEAR(r.trace.steps[0].gain, 0.5, 1e-15);
}

TEST(SemiclassicaliseTest, PullInExample) {
  const AbstractSwissCheese a({0, 0, 1}, {{1, 0, 0.5}});
  const TransformResult r = Semiclassicalise(a);
  EXPECT_EQ(r.cheese.hole_count(), 0u);
  ExpectDisk(r.cheese.outer(), {-0.25, 0, 0.75});
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].kind, StepKind::kPullIn);
}

TEST(SemiclassicaliseTest, Figure1Unchanged) {
  const TransformResult r = Semiclassicalise(Figure1Cheese());
  EXPECT_EQ(r.cheese, Figure1Cheese());
  EXPECT_TRUE(r.trace.steps.empty());
}

TEST(SemiclassicaliseTest, NonPositiveDiscrepancy) {
  const AbstractSwissCheese a({0, 0, 1}, {{0, 0, 0.5}, {0.5, 0, 0.5}});
  EXPECT_EQ(CodeOf([&] { Semiclassicalise(a); }),
            ErrorCode::kDiscrepancyNotPositive);
  EXPECT_EQ(CodeOf([&] { Classicalise(a); }),
            ErrorCode::kDiscrepancyNotPositive);
}

TEST(ClassicaliseTest, InternalTangency) {
  const AbstractSwissCheese a({0, 0, 1}, {{0.5, 0, 0.5}});
  const TransformResult r = Classicalise(a);
  EXPECT_EQ(r.cheese.hole_count(), 0u);
  ExpectDisk(r.cheese.outer(), {-0.5, 0, 0.5});
  EXPECT_NEAR(Delta(r.cheese, 1.0), 0.5, 1e-15);
  EXPECT_TRUE(IsClassical(r.cheese, 0.0));
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0].kind, StepKind::kPullIn);
  EXPECT_NEAR(r.trace.steps[0].gain, 0.0, 1e-15);
}

TEST(ClassicaliseTest, ClosedTangentPair) {
  const AbstractSwissCheese a({0, 0, 3}, {{0, 0, 1}, {2, 0, 1}});
  const TransformResult r = Classicalise(a);
  // The merged hole B(1, 2) touches the outer circle from inside, so a
  // zero-gain pull-in follows.
  ASSERT_EQ(r.trace.steps.size(), 2u);
  EXPECT_EQ(r.trace.steps[0].kind, StepKind::kCombine);
  EXPECT_NEAR(r.trace.steps[0].gain, 0.0, 1e-15);
  ExpectDisk(internal::CoverPair(a.disk(1), a.disk(2)), {1, 0, 2});
  EXPECT_EQ(r.trace.steps[1].kind, StepKind::kPullIn);
  EXPECT_EQ(r.cheese.hole_count(), 0u);
  ExpectDisk(r.cheese.outer(), {-2, 0, 1});
  EXPECT_NEAR(Delta(r.cheese, 1.0), 1.0, 1e-15);
  EXPECT_TRUE(IsClassical(r.cheese, 0.0));
}

TEST(ClassicaliseTest, Figure1Unchanged) {
  const TransformResult r = Classicalise(Figure1Cheese());
  EXPECT_EQ(r.cheese, Figure1Cheese());
  EXPECT_TRUE(r.trace.steps.empty());
}

TEST(ClassicaliseAnnularTest, GrowCentralHole) {
  const AbstractSwissCheese a({0, 0, 1}, {{0, 0, 0.3}, {0.5, 0, 0.21}});
  const TransformResult r = ClassicaliseAnnular(a);
  ASSERT_EQ(r.cheese.hole_count(), 1u);
  EXPECT_NEAR(r.cheese.disk(1).r, 0.71, 1e-15);
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_NEAR(r.trace.steps[0].gain, 0.01, 1e-15);
  EXPECT_EQ(r.trace.functional, "delta_ann");
}

TEST(ClassicaliseAnnularTest, ShrinkOuter) {
  const AbstractSwissCheese a({0, 0, 1}, {{0, 0, 0.3}, {0.9, 0, 0.2}});
  const TransformResult r = ClassicaliseAnnular(a);
  EXPECT_NEAR(r.cheese.outer().r, 0.7, 1e-15);
  EXPECT_EQ(r.cheese.hole_count(), 1u);
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_NEAR(r.trace.steps[0].gain, 0.1, 1e-15);
  EXPECT_TRUE(IsAnnular(r.cheese, 0.0));
  EXPECT_TRUE(IsClassical(r.cheese, 0.0));
}

TEST(ClassicaliseAnnularTest, ClassicalUnchangedAndErrors) {
  const AbstractSwissCheese ok = RingFiller(1.0, 0.5, 0.1, 8);
  const TransformResult r = ClassicaliseAnnular(ok);
  EXPECT_EQ(r.cheese, ok);
  EXPECT_TRUE(r.trace.steps.empty());
  EXPECT_EQ(CodeOf([] {
              ClassicaliseAnnular(
                  AbstractSwissCheese({0, 0, 1}, {{0.1, 0, 0.3}}));
            }),
            ErrorCode::kInvalidParameter);
  EXPECT_EQ(CodeOf([] {
              ClassicaliseAnnular(AbstractSwissCheese(
                  {0, 0, 1}, {{0, 0, 0.5}, {0.7, 0, 0.3}}));
            }),
            ErrorCode::kDiscrepancyNotPositive);
}

RegionPair Band(double inner, double outer, double margin) {
  return {{0, 0}, inner, outer, margin};
}

TEST(ClassicaliseControlledTest, ClassicalInputPasses) {
  const AbstractSwissCheese f = Figure1Cheese();
  const std::vector<RegionPair> regions{Band(0.8, 0.85, 0.05)};
  const ControlledResult r = ClassicaliseControlled(f, regions);
  EXPECT_EQ(r.cheese, f);
  EXPECT_TRUE(r.admissibility.admissible);
  EXPECT_TRUE(r.control.passed);
}

TEST(ClassicaliseControlledTest, OverlappingRegionsAreInadmissible) {
  const std::vector<RegionPair> regions{Band(0.8, 0.85, 0.05),
                                        Band(0.82, 0.84, 0.05)};
  EXPECT_EQ(CodeOf([&] { ClassicaliseControlled(Figure1Cheese(), regions); }),
            ErrorCode::kInadmissibleRegions);
  const AdmissibilityReport adm = CheckAdmissibility(Figure1Cheese(), regions);
  EXPECT_FALSE(adm.admissible);
  ASSERT_EQ(adm.overlapping.size(), 1u);
  EXPECT_EQ(adm.overlapping[0], (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(ClassicaliseControlledTest, BudgetAndCoverage) {
  // The neighbourhood meets the eight off-centre holes.
  const std::vector<RegionPair> heavy{Band(0.2, 0.3, 0.05)};
  EXPECT_EQ(CodeOf([&] { ClassicaliseControlled(Figure1Cheese(), heavy); }),
            ErrorCode::kInadmissibleRegions);
  // An uncovered error witness.
  const AbstractSwissCheese a({0, 0, 1}, {{0.5, 0, 0.1}, {0.6, 0, 0.1}});
  const std::vector<RegionPair> away{Band(0.05, 0.1, 0.02)};
  const AdmissibilityReport adm = CheckAdmissibility(a, away);
  EXPECT_FALSE(adm.error_set_covered);
  EXPECT_EQ(CodeOf([&] { ClassicaliseControlled(a, away); }),
            ErrorCode::kInadmissibleRegions);
  // Covered and within budget: merge stays inside the band.
  const AbstractSwissCheese small({0, 0, 1}, {{0.5, 0, 0.04}, {0.55, 0, 0.04}});
  const std::vector<RegionPair> good{Band(0.4, 0.7, 0.2)};
  const ControlledResult r = ClassicaliseControlled(small, good);
  EXPECT_TRUE(r.control.passed);
  EXPECT_TRUE(IsClassical(r.cheese, 0.0));
}

TEST(ClassicaliseControlledTest, RequiresRegionsAndRedundancyFree) {
  EXPECT_EQ(CodeOf([] { ClassicaliseControlled(Figure1Cheese(), {}); }),
            ErrorCode::kInvalidParameter);
  const AbstractSwissCheese dup({0, 0, 1}, {{0.3, 0, 0.1}, {0.3, 0, 0.1}});
  const std::vector<RegionPair> regions{Band(0.8, 0.85, 0.05)};
  EXPECT_EQ(CodeOf([&] { ClassicaliseControlled(dup, regions); }),
            ErrorCode::kInvalidParameter);
}

// Replays a semiclassicalisation trace with the geometry primitives and
// checks each step's gain against half the overlap or extrusion length.
void ReplayGains(const AbstractSwissCheese& a, const TransformTrace& t) {
  std::vector<Disk> w(a.disks().begin(), a.disks().end());
  for (const TransformStep& s : t.steps) {
    if (s.kind == StepKind::kCombine) {
      const Disk& p = w[s.indices[0]];
      const Disk& q = w[s.indices[1]];
      EXPECT_NEAR(s.gain, OverlapLength(p, q) / 2.0, 1e-9);
      w[s.indices[0]] = MinimalCoveringDisk(p, q);
      w[s.indices[1]] = {};
    } else if (s.kind == StepKind::kPullIn) {
      const Disk& h = w[s.indices[0]];
      EXPECT_NEAR(s.gain, ExtrusionLength(w[0], h) / 2.0, 1e-9);
      w[0] = MaximalAvoidingSubdisk(w[0], h);
      w[s.indices[0]] = {};
    } else {
      w[s.indices[0]] = {};
    }
  }
}

// Quadratic reference for the rewriting loop: rescans every pair each
// iteration.
std::vector<TransformStep> NaiveSteps(const AbstractSwissCheese& a,
                                      bool closed) {
  std::vector<Disk> w(a.disks().begin(), a.disks().end());
  std::vector<TransformStep> steps;
  auto score = [](const Disk& p, const Disk& q) {
    const double d = Distance(p.center(), q.center());
    return std::max(0.0, std::min({p.r + q.r - d, 2.0 * p.r, 2.0 * q.r}));
  };
  for (;;) {
    double best = -1.0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (!(w[i].r > 0.0) || !(w[j].r > 0.0)) continue;
        const double s = score(w[i], w[j]);
        const double reach = w[i].r + w[j].r;
        const bool touch =
            closed ? SquaredDistance(w[i].center(), w[j].center()) <=
                         reach * reach
                   : s > 0.0;
        if (touch && s > best) {
          best = s;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi != 0) {
      steps.push_back({0, StepKind::kCombine, {bi, bj}});
      w[bi] = internal::CoverPair(w[bi], w[bj]);
      w[bj] = {};
      continue;
    }
    best = -1.0;
    std::size_t bk = 0;
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (!(w[k].r > 0.0)) continue;
      const double d = Distance(w[0].center(), w[k].center());
      const double s =
          std::max(0.0, std::min(d + w[k].r - w[0].r, 2.0 * w[k].r));
      const double bound = w[0].r - w[k].r;
      const bool out =
          closed ? bound <= 0.0 || SquaredDistance(w[0].center(),
                                                   w[k].center()) >=
                                       bound * bound
                 : s > 0.0;
      if (out && s > best) {
        best = s;
        bk = k;
      }
    }
    if (bk == 0) break;
    steps.push_back({0, StepKind::kPullIn, {bk}});
    w[0] = internal::PullIn(w[0], w[bk]);
    w[bk] = {};
  }
  return steps;
}

TEST(RewritingLoopTest, MatchesQuadraticReference) {
  Rng rng(8080);
  for (int i = 0; i < 60; ++i) {
    const AbstractSwissCheese a = RandomCheese(rng, 5, 150);
    for (bool closed : {false, true}) {
      const TransformResult r = closed ? Classicalise(a) : Semiclassicalise(a);
      const std::vector<TransformStep> ref = NaiveSteps(a, closed);
      ASSERT_EQ(r.trace.steps.size(), ref.size()) << i;
      for (std::size_t k = 0; k < ref.size(); ++k) {
        EXPECT_EQ(r.trace.steps[k].indices, ref[k].indices) << i << " " << k;
      }
    }
  }
}

class TransformProperties : public ::testing::TestWithParam<int> {};

TEST_P(TransformProperties, Semiclassicalise) {
  Rng rng(2000 + GetParam());
  const AbstractSwissCheese a = RandomCheese(rng, 5, 60);
  const TransformResult r = Semiclassicalise(a);
  const std::size_t significant = SignificantIndices(a).size();
  EXPECT_TRUE(IsSemiclassical(r.cheese, 1e-9));
  EXPECT_GE(Delta(r.cheese, 1.0), Delta(a, 1.0) - 1e-9);
  EXPECT_LE(r.trace.steps.size(), significant);
  EXPECT_LE(static_cast<std::size_t>(r.trace.iterations), 2 * significant + 2);
  ExpectMonotone(r.trace);
  ReplayGains(a, r.trace);
  EXPECT_EQ(SampledInclusionViolations(r.cheese, a), 0u);
  EXPECT_TRUE(Semiclassicalise(r.cheese).trace.steps.empty());
}

TEST_P(TransformProperties, Classicalise) {
  Rng rng(3000 + GetParam());
  const AbstractSwissCheese a = RandomCheese(rng, 5, 60);
  const TransformResult r = Classicalise(a);
  EXPECT_TRUE(IsClassical(r.cheese, 1e-9));
  EXPECT_GE(Delta(r.cheese, 1.0), Delta(a, 1.0) - 1e-9);
  EXPECT_LE(r.trace.steps.size(), SignificantIndices(a).size());
  ExpectMonotone(r.trace);
  EXPECT_EQ(SampledInclusionViolations(r.cheese, a), 0u);
  EXPECT_TRUE(Classicalise(r.cheese).trace.steps.empty());
  EXPECT_TRUE(Semiclassicalise(r.cheese).trace.steps.empty());
}

TEST_P(TransformProperties, ClassicaliseAnnular) {
  Rng rng(4000 + GetParam());
  const AbstractSwissCheese a = RandomAnnular(rng);
  const TransformResult r = ClassicaliseAnnular(a);
  EXPECT_TRUE(IsAnnular(r.cheese, 0.0));
  EXPECT_TRUE(IsClassical(r.cheese, 1e-9));
  EXPECT_EQ(r.cheese.outer().center(), a.outer().center());
  EXPECT_GE(DeltaAnnular(r.cheese), DeltaAnnular(a) - 1e-9);
  ExpectMonotone(r.trace);
  EXPECT_EQ(SampledInclusionViolations(r.cheese, a), 0u);
}

TEST_P(TransformProperties, ReduceRedundancy) {
  Rng rng(5000 + GetParam());
  const AbstractSwissCheese a = RandomRedundantCheese(rng);
  const AbstractSwissCheese b = ReduceRedundancy(a).cheese;
  EXPECT_TRUE(IsRedundancyFree(b, 0.0));
  EXPECT_EQ(b.outer(), a.outer());
  EXPECT_TRUE(std::ranges::is_sorted(b.holes(), std::greater<>{},
                                     [](const Disk& d) { return d.r; }));
  // Sorting reorders the sums, so allow rounding-level slack.
  EXPECT_LE(RadiusSum(b), RadiusSum(a) + 1e-12);
  EXPECT_EQ(SampledSetMismatches(a, b), 0u);
  for (int i = 0; i < 10; ++i) {
    const OpenRegion u = OpenRegion::Disk(rng.InDisk(a.outer().center(), 1.5),
                                          rng.Uniform(0.05, 1.0));
    EXPECT_LE(RegionRadiusSum(b, u), RegionRadiusSum(a, u) + 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Random, TransformProperties, ::testing::Range(0, 40));

}  // namespace
}  // namespace swisscheese
