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

#ifndef SWISSCHEESE_CONSTRUCTIONS_H_
#define SWISSCHEESE_CONSTRUCTIONS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "swisscheese/cheese.h"
#include "swisscheese/transforms.h"

namespace swisscheese {

// Closed unit disk minus nine open disks of radius 3/32 centred on the
// points with coordinates in {-1/4, 0, 1/4}, row-major from the bottom left.
AbstractSwissCheese Figure1Cheese();

// Annular cheese centred at the origin: outer radius r_out, central hole
// r_in, and `count` equal ring disks spaced on the middle circle with total
// radius at most budget / 2. Throws kPlacementInfeasible when the ring disks
// cannot be placed with disjoint closures.
AbstractSwissCheese RingFiller(double r_out, double r_in, double budget,
                               int count);

struct WermerParams {
  // Grid disks at level N have radius epsilon / N^2.
  double epsilon = 0.1;
  // Target lower bound for the inverse-square sum.
  double M = 1.0;
  std::int64_t n_max = std::int64_t{1} << 14;
  int sample_count = 10000;
  std::uint64_t seed = 0x3e7e'0001ULL;

  void Validate() const;
};

// Upper bound accepted for the inverse-distance sum.
inline constexpr double kWermerSum2Bound = 50.0;
// Relative slack demanded on both sums to absorb rounding and the
// truncation of the closed-form row sums.
inline constexpr double kWermerSafety = 1e-9;

struct WermerResult {
  std::int64_t n = 0;
  std::vector<Disk> grid_disks;
  // Observed extrema over the evaluated samples.
  double min_sum1 = 0.0;
  double max_sum2 = 0.0;
  int samples_evaluated = 0;
  // |S| * epsilon / N^2 and its a-priori bound epsilon * pi (r0 + 1/(sqrt2 N))^2.
  double radius_sum = 0.0;
  double area_bound = 0.0;
};

// Searches N = 1, 2, 4, ... <= n_max for a grid satisfying both sum bounds on
// the sampled points of X' = X0 minus the grid disks. X0 must be classical.
// Throws kSearchExhausted with the best candidate's extrema.
WermerResult WermerRefine(const AbstractSwissCheese& x0,
                          const WermerParams& params);

namespace internal {

// f1(z) and f2(z) for the level-n lattice of X0, as evaluated by the
// refinement search.
std::pair<double, double> WermerSums(const AbstractSwissCheese& x0,
                                     std::int64_t n, double epsilon, Point z);

}  // namespace internal

struct WermerFillResult {
  AbstractSwissCheese cheese;
  // Set when the radius budget stopped the schedule early.
  bool budget_exceeded = false;
  int iterations_done = 0;
  std::vector<std::int64_t> grid_sizes;
};

// Repeated Wermer refinement of the annulus (r_out, r_in), one step per
// schedule entry, with per-step epsilon chosen so that the added radius stays
// below `budget`.
WermerFillResult WermerFillerRun(double r_out, double r_in, double budget,
                                 std::span<const double> m_schedule,
                                 const WermerParams& params_base);

// Produces a classical annular cheese centred at 0 with the given radii and
// annular radius sum below `budget`.
using Filler = std::function<AbstractSwissCheese(double r_out, double r_in,
                                                 double budget)>;

Filler MakeRingFiller(int count = 8);
Filler MakeWermerFiller(std::vector<double> m_schedule,
                        WermerParams params_base);

struct MorrisLevel {
  int n = 0;
  double ring_budget = 0.0;
  double ar_a = 0.0;
  double ar_b = 0.0;
  // rho_{U_n} of the reduced and the raw assembled cheese.
  double rho_u = 0.0;
  double rho_u_raw = 0.0;
  double rho_u_after = 0.0;
  double m_n = 0.0;
  bool admissible = false;
  bool inequality_holds = false;
  // The A^(n+1) term is missing at the top level.
  bool top_level = false;
};

struct MorrisReport {
  double C = 0.0;
  int level_count = 0;
  std::vector<MorrisLevel> per_level;
  double weighted_sum = 0.0;
  double weighted_sum_compensated = 0.0;
  bool within_bound = false;
  bool circle_in_set = false;
  bool final_classical = false;
  bool regions_disjoint = false;
};

struct MorrisResult {
  AbstractSwissCheese cheese;
  std::vector<RegionPair> regions;
  TransformTrace trace;
  MorrisReport report;
};

double MorrisRingBudget(double C, int n);

// Assembles the nested annular families, reduces, checks admissibility,
// classicalises under region control and verifies the weighted sum.
MorrisResult MorrisAssemble(double C, int levels, const Filler& filler);

// d_n = 1 - (|b_n| + s_n) per significant hole. Throws kCircleViolated when a
// hole closure meets the unit circle.
MorrisReport MorrisVerify(const AbstractSwissCheese& b, double C,
                          double tol = kDefaultTolerance);

}  // namespace swisscheese

#endif  // SWISSCHEESE_CONSTRUCTIONS_H_
