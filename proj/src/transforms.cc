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
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

#include "pair_index.h"
#include "swisscheese/error.h"
#include "swisscheese/geometry.h"

namespace swisscheese {
namespace {

constexpr Disk kZeroed{0.0, 0.0, 0.0};

enum class Contact { kOpen, kClosed };

double Delta1Of(const std::vector<Disk>& w) {
  double sum = 0.0;
  for (std::size_t n = 1; n < w.size(); ++n) sum += w[n].r;
  return w[0].r - sum;
}

double DeltaAnnOf(const std::vector<Disk>& w) {
  double sum = 0.0;
  for (std::size_t n = 2; n < w.size(); ++n) sum += w[n].r;
  return w[0].r - w[1].r - 2.0 * sum;
}

AbstractSwissCheese Pruned(const std::vector<Disk>& w, const std::string& name) {
  std::vector<Disk> holes;
  for (std::size_t n = 1; n < w.size(); ++n) {
    if (w[n].r > 0.0) holes.push_back(w[n]);
  }
  return AbstractSwissCheese(w[0], std::move(holes), name);
}

// Centre-line overlap of two disks, clamped at zero so that closed tangency
// scores 0 rather than a rounding-sized negative.
double PairScore(const Disk& a, const Disk& b) {
  const double d = Distance(a.center(), b.center());
  return std::max(0.0, std::min({a.r + b.r - d, 2.0 * a.r, 2.0 * b.r}));
}

bool ClosedDisksMeet(const Disk& a, const Disk& b) {
  const double s = a.r + b.r;
  return SquaredDistance(a.center(), b.center()) <= s * s;
}

// Closed disk `d` is not strictly inside the open disk `outer`.
bool ClosedProtrudes(const Disk& outer, const Disk& d) {
  const double bound = outer.r - d.r;
  if (bound <= 0.0) return true;
  return SquaredDistance(outer.center(), d.center()) >= bound * bound;
}

TransformResult RunClassicalisationLoop(const AbstractSwissCheese& a,
                                        Contact contact) {
  if (!(Delta(a, 1.0) > 0.0)) {
    throw CheeseError(ErrorCode::kDiscrepancyNotPositive,
                      "classicalisation needs delta1 > 0");
  }
  std::vector<Disk> w(a.disks().begin(), a.disks().end());
  TransformTrace trace;
  trace.input_report = Report(a);

  auto touching = [&](std::size_t i, std::size_t j) {
    return contact == Contact::kOpen ? PairScore(w[i], w[j]) > 0.0
                                     : ClosedDisksMeet(w[i], w[j]);
  };
  // Touching pairs keyed by score, ties to the lexicographically smallest
  // pair. Entries go stale when either disk changes.
  struct Candidate {
    double score;
    std::size_t i, j;
    std::uint32_t vi, vj;
  };
  auto lower = [](const Candidate& x, const Candidate& y) {
    if (x.score != y.score) return x.score < y.score;
    return std::pair{x.i, x.j} > std::pair{y.i, y.j};
  };
  std::priority_queue<Candidate, std::vector<Candidate>, decltype(lower)> heap(
      lower);
  std::vector<std::uint32_t> version(w.size(), 0);
  auto push = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    heap.push({PairScore(w[i], w[j]), i, j, version[i], version[j]});
  };
  {
    std::vector<std::size_t> live;
    for (std::size_t n = 1; n < w.size(); ++n) {
      if (w[n].r > 0.0) live.push_back(n);
    }
    internal::ForEachCandidatePair(w, live, 0.0,
                                   [&](std::size_t x, std::size_t y) {
                                     if (touching(live[x], live[y])) {
                                       push(live[x], live[y]);
                                     }
                                     return true;
                                   });
  }

  int iteration = 0;
  for (;; ++iteration) {
    // Combine phase.
    while (!heap.empty() && (heap.top().vi != version[heap.top().i] ||
                             heap.top().vj != version[heap.top().j] ||
                             !(w[heap.top().i].r > 0.0) ||
                             !(w[heap.top().j].r > 0.0))) {
      heap.pop();
    }
    if (!heap.empty()) {
      const std::size_t bi = heap.top().i;
      const std::size_t bj = heap.top().j;
      heap.pop();
      TransformStep step{iteration, StepKind::kCombine, {bi, bj}};
      step.delta_before = Delta1Of(w);
      w[bi] = internal::CoverPair(w[bi], w[bj]);
      w[bj] = kZeroed;
      ++version[bi];
      ++version[bj];
      step.delta_after = Delta1Of(w);
      step.gain = step.delta_after - step.delta_before;
      trace.steps.push_back(std::move(step));
      for (std::size_t k = 1; k < w.size(); ++k) {
        if (k != bi && w[k].r > 0.0 && touching(bi, k)) push(bi, k);
      }
      continue;
    }

    // Pull-in phase.
    double best = -1.0;
    std::size_t bk = 0;
    const Disk& outer = w[0];
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (!(w[k].r > 0.0)) continue;
      const double d = Distance(outer.center(), w[k].center());
      const double score =
          std::max(0.0, std::min(d + w[k].r - outer.r, 2.0 * w[k].r));
      const bool protrudes = contact == Contact::kOpen
                                 ? score > 0.0
                                 : ClosedProtrudes(outer, w[k]);
      if (protrudes && score > best) {
        best = score;
        bk = k;
      }
    }
    if (bk == 0) break;
    TransformStep step{iteration, StepKind::kPullIn, {bk}};
    step.delta_before = Delta1Of(w);
    const double d = Distance(w[0].center(), w[bk].center());
    if (d >= w[0].r + w[bk].r) {
      step.kind = StepKind::kDiscard;
    } else {
      w[0] = internal::PullIn(w[0], w[bk]);
    }
    w[bk] = kZeroed;
    step.delta_after = Delta1Of(w);
    step.gain = step.delta_after - step.delta_before;
    trace.steps.push_back(std::move(step));
  }
  trace.iterations = iteration + 1;
  AbstractSwissCheese out = Pruned(w, a.name());
  trace.output_report = Report(out);
  return {std::move(out), std::move(trace)};
}

bool NeighborhoodsMayMeet(const OpenRegion& u, const OpenRegion& v) {
  const auto& p = u.annulus();
  const auto& q = v.annulus();
  const double d = Distance(p.center, q.center);
  if (d >= p.outer + q.outer) return false;
  if (d + q.outer <= p.inner) return false;
  if (d + p.outer <= q.inner) return false;
  return true;
}

}  // namespace

std::string_view StepKindName(StepKind kind) {
  switch (kind) {
    case StepKind::kCombine:
      return "COMBINE";
    case StepKind::kPullIn:
      return "PULL_IN";
    case StepKind::kDiscard:
      return "DISCARD";
    case StepKind::kNone:
      return "NONE";
  }
  return "NONE";
}

TransformResult ReduceRedundancy(const AbstractSwissCheese& a) {
  std::vector<Disk> w(a.disks().begin(), a.disks().end());
  TransformTrace trace;
  trace.input_report = Report(a);
  const Disk outer = w[0];
  int iteration = 0;

  auto discard = [&](std::size_t n) {
    TransformStep step{iteration++, StepKind::kDiscard, {n}};
    step.delta_before = Delta1Of(w);
    w[n] = kZeroed;
    step.delta_after = Delta1Of(w);
    step.gain = step.delta_after - step.delta_before;
    trace.steps.push_back(std::move(step));
  };

  std::vector<std::size_t> candidates;
  for (std::size_t n = 1; n < w.size(); ++n) {
    if (!(w[n].r > 0.0)) continue;
    const double reach = outer.r + w[n].r;
    if (SquaredDistance(w[n].center(), outer.center()) >= reach * reach) {
      discard(n);
    } else {
      candidates.push_back(n);
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t x, std::size_t y) { return w[x].r > w[y].r; });
  std::vector<std::size_t> kept;
  for (std::size_t n : candidates) {
    const bool contained =
        std::any_of(kept.begin(), kept.end(), [&](std::size_t l) {
          const double slack = w[l].r - w[n].r;
          return slack >= 0.0 &&
                 SquaredDistance(w[n].center(), w[l].center()) <= slack * slack;
        });
    if (contained) {
      discard(n);
    } else {
      kept.push_back(n);
    }
  }
  std::vector<Disk> holes;
  holes.reserve(kept.size());
  for (std::size_t n : kept) holes.push_back(w[n]);
  AbstractSwissCheese out(outer, std::move(holes), a.name());
  trace.iterations = iteration + 1;
  trace.output_report = Report(out);
  return {std::move(out), std::move(trace)};
}

TransformResult Semiclassicalise(const AbstractSwissCheese& a) {
  return RunClassicalisationLoop(a, Contact::kOpen);
}

TransformResult Classicalise(const AbstractSwissCheese& a) {
  return RunClassicalisationLoop(a, Contact::kClosed);
}

TransformResult ClassicaliseAnnular(const AbstractSwissCheese& a, double tol) {
  if (!IsAnnular(a, tol)) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "annular classicalisation needs an annular cheese");
  }
  if (!(DeltaAnnular(a) > 0.0)) {
    throw CheeseError(ErrorCode::kDiscrepancyNotPositive,
                      "annular classicalisation needs delta_ann > 0");
  }
  std::vector<Disk> w(a.disks().begin(), a.disks().end());
  TransformTrace trace;
  trace.functional = "delta_ann";
  trace.input_report = Report(a, tol);
  int iteration = 0;

  auto record = [&](TransformStep step, auto&& mutate) {
    step.iteration = iteration;
    step.delta_before = DeltaAnnOf(w);
    mutate();
    step.delta_after = DeltaAnnOf(w);
    step.gain = step.delta_after - step.delta_before;
    trace.steps.push_back(std::move(step));
  };

  for (;; ++iteration) {
    // (i) ring disks with touching closures.
    double best = -1.0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 2; i < w.size(); ++i) {
      if (!(w[i].r > 0.0)) continue;
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (!(w[j].r > 0.0) || !ClosedDisksMeet(w[i], w[j])) continue;
        const double score = PairScore(w[i], w[j]);
        if (score > best) {
          best = score;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi != 0) {
      record(TransformStep{0, StepKind::kCombine, {bi, bj}}, [&] {
        w[bi] = internal::CoverPair(w[bi], w[bj]);
        w[bj] = kZeroed;
      });
      continue;
    }

    // (ii) ring disks touching the central hole.
    best = -1.0;
    std::size_t bk = 0;
    for (std::size_t k = 2; k < w.size(); ++k) {
      if (!(w[k].r > 0.0) || !ClosedDisksMeet(w[1], w[k])) continue;
      const double score =
          w[1].r + w[k].r - Distance(w[1].center(), w[k].center());
      if (score > best) {
        best = score;
        bk = k;
      }
    }
    if (bk != 0) {
      const double reach = Distance(w[1].center(), w[bk].center()) + w[bk].r;
      const bool inside = reach <= w[1].r;
      record(TransformStep{0, inside ? StepKind::kDiscard : StepKind::kCombine,
                           inside ? std::vector<std::size_t>{bk}
                                  : std::vector<std::size_t>{1, bk}},
             [&] {
               if (!inside) w[1].r = reach;
               w[bk] = kZeroed;
             });
      if (!(w[1].r < w[0].r)) {
        throw CheeseError(ErrorCode::kAnnularStructureLost,
                          "central hole reached the outer disk");
      }
      continue;
    }

    // (iii) ring disks protruding from the open outer disk.
    best = -1.0;
    bk = 0;
    for (std::size_t k = 2; k < w.size(); ++k) {
      if (!(w[k].r > 0.0) || !ClosedProtrudes(w[0], w[k])) continue;
      const double score =
          Distance(w[0].center(), w[k].center()) + w[k].r - w[0].r;
      if (score > best) {
        best = score;
        bk = k;
      }
    }
    if (bk == 0) break;
    const double d = Distance(w[0].center(), w[bk].center());
    if (d >= w[0].r + w[bk].r) {
      record(TransformStep{0, StepKind::kDiscard, {bk}},
             [&] { w[bk] = kZeroed; });
      continue;
    }
    if (d <= w[bk].r || d - w[bk].r <= w[1].r) {
      throw CheeseError(ErrorCode::kAnnularStructureLost,
                        "shrinking the outer disk would swallow the centre");
    }
    record(TransformStep{0, StepKind::kPullIn, {bk}}, [&] {
      w[0].r = d - w[bk].r;
      w[bk] = kZeroed;
    });
  }
  trace.iterations = iteration + 1;

  // Keep the central hole at index 1 even if later code prunes ring disks.
  std::vector<Disk> holes{w[1]};
  for (std::size_t n = 2; n < w.size(); ++n) {
    if (w[n].r > 0.0) holes.push_back(w[n]);
  }
  AbstractSwissCheese out(w[0], std::move(holes), a.name());
  trace.output_report = Report(out, tol);
  return {std::move(out), std::move(trace)};
}

AdmissibilityReport CheckAdmissibility(const AbstractSwissCheese& a,
                                       std::span<const RegionPair> regions,
                                       double tol) {
  AdmissibilityReport report;
  const Disk& outer = a.outer();
  std::vector<OpenRegion> hoods;
  hoods.reserve(regions.size());
  for (const RegionPair& k : regions) {
    hoods.push_back(k.Neighborhood());
    RegionAdmissibility r;
    r.rho_u = RegionRadiusSum(a, hoods.back());
    r.half_margin = k.margin / 2.0;
    r.budget_ok = r.rho_u < r.half_margin;
    const double reach =
        Distance(k.center, outer.center()) + hoods.back().annulus().outer;
    r.closure_inside = reach < outer.r;
    report.regions.push_back(r);
  }
  for (std::size_t m = 0; m < hoods.size(); ++m) {
    for (std::size_t n = m + 1; n < hoods.size(); ++n) {
      if (NeighborhoodsMayMeet(hoods[m], hoods[n])) {
        report.overlapping.emplace_back(m, n);
      }
    }
  }
  report.error_set_covered = ErrorSetCovered(a, regions, tol);
  report.admissible =
      report.overlapping.empty() && report.error_set_covered &&
      std::all_of(report.regions.begin(), report.regions.end(),
                  [](const RegionAdmissibility& r) {
                    return r.budget_ok && r.closure_inside;
                  });
  return report;
}

ControlReport VerifyControl(const AbstractSwissCheese& a,
                            const AbstractSwissCheese& b,
                            std::span<const RegionPair> regions) {
  ControlReport report;
  std::vector<OpenRegion> hoods;
  for (const RegionPair& k : regions) hoods.push_back(k.Neighborhood());

  std::vector<bool> hit(a.size(), false);
  for (const OpenRegion& u : hoods) {
    for (std::size_t n : RegionHitSet(a, u)) hit[n] = true;
  }
  const auto b_holes = b.holes();
  for (std::size_t k : SignificantIndices(a)) {
    if (hit[k]) continue;
    const Disk& dk = a.disk(k);
    const bool survives = std::any_of(b_holes.begin(), b_holes.end(),
                                      [&](const Disk& h) { return h == dk; });
    if (!survives) report.lost_holes.push_back(k);
  }
  report.survivors_ok = report.lost_holes.empty();

  report.regions_ok = true;
  for (const OpenRegion& u : hoods) {
    RegionControl rc;
    rc.rho_before = RegionRadiusSum(a, u);
    rc.rho_after = RegionRadiusSum(b, u);
    rc.ok = rc.rho_after <= rc.rho_before;
    report.regions_ok = report.regions_ok && rc.ok;
    report.regions.push_back(rc);
  }
  report.passed = report.survivors_ok && report.regions_ok;
  return report;
}

ControlledResult ClassicaliseControlled(const AbstractSwissCheese& a,
                                        std::span<const RegionPair> regions,
                                        double tol) {
  if (regions.empty()) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "controlled classicalisation needs at least one region");
  }
  if (!IsRedundancyFree(a, 0.0)) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "controlled classicalisation needs a redundancy-free "
                      "cheese");
  }
  AdmissibilityReport adm = CheckAdmissibility(a, regions, tol);
  if (!adm.admissible) {
    std::ostringstream msg;
    msg.precision(17);
    if (!adm.overlapping.empty()) {
      msg << "neighbourhoods " << adm.overlapping.front().first << " and "
          << adm.overlapping.front().second << " intersect";
    } else if (!adm.error_set_covered) {
      msg << "error set not covered by the region annuli";
    } else {
      for (std::size_t n = 0; n < adm.regions.size(); ++n) {
        const auto& r = adm.regions[n];
        if (!r.budget_ok) {
          msg << "region " << n << ": rho_U = " << r.rho_u
              << " not < M/2 = " << r.half_margin;
          break;
        }
        if (!r.closure_inside) {
          msg << "region " << n << ": closure leaves the outer open disk";
          break;
        }
      }
    }
    throw CheeseError(ErrorCode::kInadmissibleRegions, msg.str());
  }
  TransformResult result = Classicalise(a);
  ControlReport control = VerifyControl(a, result.cheese, regions);
  if (!control.passed) {
    std::ostringstream msg;
    if (!control.survivors_ok) {
      msg << "hole " << control.lost_holes.front()
          << " lies outside every region but did not survive";
    } else {
      for (std::size_t n = 0; n < control.regions.size(); ++n) {
        if (!control.regions[n].ok) {
          msg.precision(17);
          msg << "region " << n << ": rho_U grew from "
              << control.regions[n].rho_before << " to "
              << control.regions[n].rho_after;
          break;
        }
      }
    }
    throw CheeseError(ErrorCode::kControlContractFailed, msg.str());
  }
  return {std::move(result.cheese), std::move(result.trace), std::move(adm),
          std::move(control)};
}

std::size_t SampledInclusionViolations(const AbstractSwissCheese& b,
                                       const AbstractSwissCheese& a,
                                       int sample_count, std::uint64_t seed) {
  const MembershipIndex in_a(a, 0.0);
  const MembershipIndex in_b(b, 0.0);
  const Disk& o = a.outer();
  std::mt19937_64 rng(seed);
  std::size_t violations = 0;
  for (int i = 0; i < sample_count; ++i) {
    const Point z{o.cx - o.r + 2.0 * o.r * UnitInterval(rng()),
                  o.cy - o.r + 2.0 * o.r * UnitInterval(rng())};
    if (in_b.Contains(z) && !in_a.Contains(z)) ++violations;
  }
  return violations;
}

std::size_t SampledSetMismatches(const AbstractSwissCheese& a,
                                 const AbstractSwissCheese& b,
                                 int sample_count, std::uint64_t seed) {
  return SampledInclusionViolations(a, b, sample_count, seed) +
         SampledInclusionViolations(b, a, sample_count, seed);
}

}  // namespace swisscheese
