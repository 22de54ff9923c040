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

#ifndef SWISSCHEESE_TRANSFORMS_H_
#define SWISSCHEESE_TRANSFORMS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "swisscheese/cheese.h"

namespace swisscheese {

enum class StepKind { kCombine, kPullIn, kDiscard, kNone };

std::string_view StepKindName(StepKind kind);

// One move of a rewriting loop. `delta_before` / `delta_after` hold the
// functional the trace tracks (delta1, or delta_ann for annular traces).
struct TransformStep {
  int iteration = 0;
  StepKind kind = StepKind::kNone;
  // Two entries for kCombine, one otherwise. Indices refer to the input.
  std::vector<std::size_t> indices;
  double gain = 0.0;
  double delta_before = 0.0;
  double delta_after = 0.0;
};

struct TransformTrace {
  // "delta1" or "delta_ann".
  std::string functional = "delta1";
  std::vector<TransformStep> steps;
  // Loop iterations including the final non-productive one.
  int iterations = 0;
  CheeseReport input_report;
  CheeseReport output_report;
};

struct TransformResult {
  AbstractSwissCheese cheese;
  TransformTrace trace;
};

// Drops degenerate holes, holes missing the closed outer disk and holes
// contained in another surviving hole, then sorts holes by radius
// (non-increasing, stable). The associated set is unchanged.
TransformResult ReduceRedundancy(const AbstractSwissCheese& a);

// Repeatedly combines the pair of holes with maximal overlap, otherwise pulls
// the outer disk away from the hole with maximal extrusion, until the open
// holes are pairwise disjoint and inside the outer disk. Requires delta1 > 0.
TransformResult Semiclassicalise(const AbstractSwissCheese& a);

// As Semiclassicalise but triggered by closed-disk contact, so the output is
// classical.
TransformResult Classicalise(const AbstractSwissCheese& a);

// Concentric-preserving classicalisation of an annular cheese; tracks
// delta_ann. Requires IsAnnular(a, tol) and DeltaAnnular(a) > 0.
TransformResult ClassicaliseAnnular(const AbstractSwissCheese& a,
                                    double tol = kDefaultTolerance);

struct RegionAdmissibility {
  double rho_u = 0.0;
  double half_margin = 0.0;
  bool budget_ok = false;
  bool closure_inside = false;
};

struct AdmissibilityReport {
  std::vector<RegionAdmissibility> regions;
  // Pairs (m, n), m < n, of regions whose neighbourhoods may intersect.
  std::vector<std::pair<std::size_t, std::size_t>> overlapping;
  bool error_set_covered = false;
  bool admissible = false;
};

AdmissibilityReport CheckAdmissibility(const AbstractSwissCheese& a,
                                       std::span<const RegionPair> regions,
                                       double tol = kDefaultTolerance);

struct RegionControl {
  double rho_before = 0.0;
  double rho_after = 0.0;
  bool ok = false;
};

struct ControlReport {
  // Significant input holes outside every hit set that did not survive.
  std::vector<std::size_t> lost_holes;
  std::vector<RegionControl> regions;
  bool survivors_ok = false;
  bool regions_ok = false;
  bool passed = false;
};

ControlReport VerifyControl(const AbstractSwissCheese& a,
                            const AbstractSwissCheese& b,
                            std::span<const RegionPair> regions);

struct ControlledResult {
  AbstractSwissCheese cheese;
  TransformTrace trace;
  AdmissibilityReport admissibility;
  ControlReport control;
};

// Classicalise with admissibility checked up front and the region controls
// verified afterwards. Throws kInadmissibleRegions or kControlContractFailed.
ControlledResult ClassicaliseControlled(const AbstractSwissCheese& a,
                                        std::span<const RegionPair> regions,
                                        double tol = kDefaultTolerance);

inline constexpr std::uint64_t kSubsetSeed = 0x5eed'c4ee'5e00'0001ULL;
inline constexpr int kSubsetSamples = 10000;

// Number of points, sampled uniformly in the bounding square of a's outer
// disk, that lie in X_b but not in X_a.
std::size_t SampledInclusionViolations(const AbstractSwissCheese& b,
                                       const AbstractSwissCheese& a,
                                       int sample_count = kSubsetSamples,
                                       std::uint64_t seed = kSubsetSeed);

// Number of sampled points where membership in X_a and X_b differ.
std::size_t SampledSetMismatches(const AbstractSwissCheese& a,
                                 const AbstractSwissCheese& b,
                                 int sample_count = kSubsetSamples,
                                 std::uint64_t seed = kSubsetSeed);

}  // namespace swisscheese

#endif  // SWISSCHEESE_TRANSFORMS_H_
