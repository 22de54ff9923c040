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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "swisscheese/constructions.h"
#include "swisscheese/error.h"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define SWISSCHEESE_MULTIVERSION \
  __attribute__((target_clones("avx512f", "avx2", "default")))
#else
#define SWISSCHEESE_MULTIVERSION
#endif

namespace swisscheese {
namespace {

// Lattice points (j, k) with j in [ja, jb] on row k.
struct Run {
  std::int64_t k;
  std::int64_t ja;
  std::int64_t jb;
};

struct Lattice {
  std::int64_t n = 0;
  double inv_n = 0.0;
  double rad = 0.0;
  std::vector<Run> runs;
  // prefix[i] = number of lattice points in runs[0, i).
  std::vector<std::size_t> prefix;
  std::size_t count = 0;

  Point Center(std::int64_t j, std::int64_t k) const {
    return {static_cast<double>(j) * inv_n, static_cast<double>(k) * inv_n};
  }

  bool Contains(std::int64_t j, std::int64_t k) const {
    auto it = std::lower_bound(
        runs.begin(), runs.end(), std::pair{k, j}, [](const Run& r, auto key) {
          return r.k < key.first || (r.k == key.first && r.jb < key.second);
        });
    return it != runs.end() && it->k == k && it->ja <= j && j <= it->jb;
  }

  Point Nth(std::size_t index) const {
    const auto it = std::upper_bound(prefix.begin(), prefix.end(), index);
    const std::size_t r = static_cast<std::size_t>(it - prefix.begin()) - 1;
    return Center(runs[r].ja + static_cast<std::int64_t>(index - prefix[r]),
                  runs[r].k);
  }
};

// Integer interval [lo, hi] of j on which pred(j) holds, seeded from the
// approximate real interval [a, b] and corrected with the exact predicate.
// Returns lo > hi when empty.
template <typename Pred>
std::pair<std::int64_t, std::int64_t> IntervalOf(double a, double b,
                                                 Pred&& pred) {
  auto lo = static_cast<std::int64_t>(std::ceil(a));
  auto hi = static_cast<std::int64_t>(std::floor(b));
  while (pred(lo - 1)) --lo;
  while (lo <= hi && !pred(lo)) ++lo;
  while (pred(hi + 1)) ++hi;
  while (hi >= lo && !pred(hi)) --hi;
  return {lo, hi};
}

Lattice BuildLattice(const AbstractSwissCheese& x0, std::int64_t n,
                     double epsilon) {
  Lattice lat;
  lat.n = n;
  lat.inv_n = 1.0 / static_cast<double>(n);
  lat.rad = epsilon / (static_cast<double>(n) * static_cast<double>(n));
  const Disk& o = x0.outer();
  const double nd = static_cast<double>(n);
  const double reach = o.r - lat.rad;
  if (!(reach > 0.0)) return lat;

  // Holes sorted by the first row their dilated disk can touch.
  std::vector<Disk> holes;
  for (std::size_t m : SignificantIndices(x0)) holes.push_back(x0.disk(m));
  std::ranges::sort(holes, {}, [&](const Disk& h) { return h.cy - h.r; });
  std::size_t next = 0;
  std::vector<Disk> active;

  const auto k_lo = static_cast<std::int64_t>(std::floor((o.cy - reach) * nd));
  const auto k_hi = static_cast<std::int64_t>(std::ceil((o.cy + reach) * nd));
  std::vector<std::pair<std::int64_t, std::int64_t>> cuts;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const double y = static_cast<double>(k) * lat.inv_n;
    const double dy = y - o.cy;
    if (std::abs(dy) >= reach) continue;
    auto in_outer = [&](std::int64_t j) {
      return SquaredDistance(lat.Center(j, k), o.center()) < reach * reach;
    };
    const double w = std::sqrt(reach * reach - dy * dy);
    const auto [ja, jb] = IntervalOf((o.cx - w) * nd, (o.cx + w) * nd, in_outer);
    if (ja > jb) continue;

    while (next < holes.size() && holes[next].cy - holes[next].r - lat.rad <= y) {
      active.push_back(holes[next++]);
    }
    std::erase_if(active,
                  [&](const Disk& h) { return h.cy + h.r + lat.rad < y; });
    cuts.clear();
    for (const Disk& h : active) {
      const double s = h.r + lat.rad;
      const double hy = y - h.cy;
      if (std::abs(hy) > s) continue;
      auto hits = [&](std::int64_t j) {
        return SquaredDistance(lat.Center(j, k), h.center()) <= s * s;
      };
      const double hw = std::sqrt(std::max(0.0, s * s - hy * hy));
      const auto cut = IntervalOf((h.cx - hw) * nd, (h.cx + hw) * nd, hits);
      if (cut.first <= cut.second) cuts.push_back(cut);
    }
    std::ranges::sort(cuts);
    std::int64_t from = ja;
    for (const auto& [ca, cb] : cuts) {
      if (ca > from) lat.runs.push_back({k, from, std::min(ca - 1, jb)});
      from = std::max(from, cb + 1);
      if (from > jb) break;
    }
    if (from <= jb) lat.runs.push_back({k, from, jb});
  }
  std::erase_if(lat.runs, [](const Run& r) { return r.ja > r.jb; });
  lat.prefix.reserve(lat.runs.size() + 1);
  for (const Run& r : lat.runs) {
    lat.prefix.push_back(lat.count);
    lat.count += static_cast<std::size_t>(r.jb - r.ja + 1);
  }
  lat.prefix.push_back(lat.count);
  return lat;
}

// Rows at least this many lattice spacings from z are summed in closed form.
constexpr double kFarRows = 32.0;

// Direct double-precision sums of 1/|z-c|^2 and 1/|z-c| over one run.
SWISSCHEESE_MULTIVERSION
void RowDirect(std::int64_t ja, std::int64_t jb, double inv_n, double zx,
               double dy2, double* out1, double* out2) {
  double row1 = 0.0;
  double row2 = 0.0;
#pragma omp simd reduction(+ : row1, row2)
  for (std::int64_t j = ja; j <= jb; ++j) {
    const double dx = zx - static_cast<double>(j) * inv_n;
    const double inv = 1.0 / (dx * dx + dy2);
    row1 += inv;
    row2 += std::sqrt(inv);
  }
  *out1 += row1;
  *out2 += row2;
}

// Euler-Maclaurin sums over integers j in [a, b] of (u^2 + c^2)^-1 and
// (u^2 + c^2)^-1/2 with u = j - x0, truncated after the B4 term. For
// c >= kFarRows the remainder is below 1e-12 relative.
void RowClosedForm(double a, double b, double x0, double c, double* out1,
                   double* out2) {
  const double c2 = c * c;
  auto ends = [&](double u, double* g, double* g1, double* g3, double* h,
                  double* h1, double* h3) {
    const double q = u * u + c2;
    const double iq = 1.0 / q;
    const double rq = std::sqrt(iq);
    *g = iq;
    *g1 = -2.0 * u * iq * iq;
    *g3 = 24.0 * u * iq * iq * iq - 48.0 * u * u * u * iq * iq * iq * iq;
    *h = rq;
    *h1 = -u * rq * iq;
    *h3 = 9.0 * u * rq * iq * iq - 15.0 * u * u * u * rq * iq * iq * iq;
  };
  const double ua = a - x0;
  const double ub = b - x0;
  double ga, ga1, ga3, ha, ha1, ha3, gb, gb1, gb3, hb, hb1, hb3;
  ends(ua, &ga, &ga1, &ga3, &ha, &ha1, &ha3);
  ends(ub, &gb, &gb1, &gb3, &hb, &hb1, &hb3);
  const double int_g = (std::atan(ub / c) - std::atan(ua / c)) / c;
  const double int_h = std::asinh(ub / c) - std::asinh(ua / c);
  *out1 += int_g + 0.5 * (ga + gb) + (gb1 - ga1) / 12.0 - (gb3 - ga3) / 720.0;
  *out2 += int_h + 0.5 * (ha + hb) + (hb1 - ha1) / 12.0 - (hb3 - ha3) / 720.0;
}

// Sums of 1/|z-c|^2 and 1/|z-c| over the lattice centres. Rows near z are
// summed directly; distant rows use the closed form in lattice units.
void LatticeSums(const Lattice& lat, Point z, double* out1, double* out2) {
  const double nd = static_cast<double>(lat.n);
  const double x0 = z.x * nd;
  const double y0 = z.y * nd;
  double near1 = 0.0, near2 = 0.0;
  double far1 = 0.0, far2 = 0.0;
  for (const Run& r : lat.runs) {
    const double c = std::abs(static_cast<double>(r.k) - y0);
    if (c >= kFarRows) {
      RowClosedForm(static_cast<double>(r.ja), static_cast<double>(r.jb), x0, c,
                    &far1, &far2);
    } else {
      const double dy = z.y - static_cast<double>(r.k) * lat.inv_n;
      RowDirect(r.ja, r.jb, lat.inv_n, z.x, dy * dy, &near1, &near2);
    }
  }
  *out1 = near1 + far1 * nd * nd;
  *out2 = near2 + far2 * nd;
}

std::vector<Point> SamplePoints(const AbstractSwissCheese& x0,
                                const Lattice& lat, int count,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return UnitInterval(rng()); };
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));

  // Boundary of X0 first: the inverse-square sum is smallest there.
  std::vector<Disk> circles{x0.outer()};
  for (std::size_t n : SignificantIndices(x0)) circles.push_back(x0.disk(n));
  std::vector<double> cumulative;
  double total = 0.0;
  for (const Disk& c : circles) cumulative.push_back(total += c.r);
  const int boundary = count / 4;
  for (int i = 0; i < boundary && total > 0.0; ++i) {
    const double pick = unit() * total;
    const auto idx = std::min<std::size_t>(
        static_cast<std::size_t>(
            std::upper_bound(cumulative.begin(), cumulative.end(), pick) -
            cumulative.begin()),
        circles.size() - 1);
    const double t = kTwoPi * unit();
    const Disk& c = circles[idx];
    out.push_back({c.cx + c.r * std::cos(t), c.cy + c.r * std::sin(t)});
  }

  // Grid-disk boundaries, where both sums peak.
  const int grid = lat.count > 0 ? count / 4 : 0;
  for (int i = 0; i < grid; ++i) {
    const auto idx = static_cast<std::size_t>(unit() * lat.count);
    const Point c = lat.Nth(std::min(idx, lat.count - 1));
    const double t = kTwoPi * unit();
    out.push_back({c.x + lat.rad * std::cos(t), c.y + lat.rad * std::sin(t)});
  }

  const MembershipIndex in_x0(x0, 0.0);
  const Disk& o = x0.outer();
  const double nd = static_cast<double>(lat.n);
  std::int64_t attempts = 0;
  const std::int64_t max_attempts = 1000 * static_cast<std::int64_t>(count);
  while (static_cast<int>(out.size()) < count && attempts++ < max_attempts) {
    const Point z{o.cx - o.r + 2.0 * o.r * unit(),
                  o.cy - o.r + 2.0 * o.r * unit()};
    if (!in_x0.Contains(z)) continue;
    const auto j = static_cast<std::int64_t>(std::llround(z.x * nd));
    const auto k = static_cast<std::int64_t>(std::llround(z.y * nd));
    if (lat.Contains(j, k) &&
        SquaredDistance(z, lat.Center(j, k)) < lat.rad * lat.rad) {
      continue;
    }
    out.push_back(z);
  }
  return out;
}

struct Evaluation {
  double min1 = std::numeric_limits<double>::infinity();
  double max2 = 0.0;
  int evaluated = 0;
  bool passed = false;
};

Evaluation Evaluate(const Lattice& lat, std::span<const Point> samples,
                    double m) {
  Evaluation ev;
  if (lat.count == 0) {
    ev.min1 = 0.0;
    return ev;
  }
  const double need1 = m * (1.0 + kWermerSafety);
  const double cap2 = kWermerSum2Bound * (1.0 - kWermerSafety);
  for (const Point& z : samples) {
    double s1 = 0.0, s2 = 0.0;
    LatticeSums(lat, z, &s1, &s2);
    const double f1 = lat.rad * s1;
    const double f2 = lat.rad * s2;
    ev.min1 = std::min(ev.min1, f1);
    ev.max2 = std::max(ev.max2, f2);
    ++ev.evaluated;
    if (!(f1 > need1) || !(f2 <= cap2)) return ev;
  }
  ev.passed = ev.evaluated > 0;
  return ev;
}

}  // namespace

void WermerParams::Validate() const {
  if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "epsilon must lie in (0, 1/2)");
  }
  if (!(M > 0.0) || !std::isfinite(M)) {
    throw CheeseError(ErrorCode::kInvalidParameter, "M must be positive");
  }
  if (n_max < 1 || sample_count < 1) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "n_max and sample_count must be positive");
  }
}

WermerResult WermerRefine(const AbstractSwissCheese& x0,
                          const WermerParams& params) {
  params.Validate();
  if (!IsClassical(x0, 0.0)) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "Wermer refinement needs a classical X0");
  }
  Evaluation best;
  best.min1 = -1.0;
  std::int64_t best_n = 0;
  for (std::int64_t n = 1; n <= params.n_max; n *= 2) {
    const Lattice lat = BuildLattice(x0, n, params.epsilon);
    const std::vector<Point> samples = SamplePoints(
        x0, lat, params.sample_count, params.seed ^ static_cast<std::uint64_t>(n));
    const Evaluation ev = Evaluate(lat, samples, params.M);
    if (ev.min1 > best.min1) {
      best = ev;
      best_n = n;
    }
    if (!ev.passed) continue;

    WermerResult result;
    result.n = n;
    result.min_sum1 = ev.min1;
    result.max_sum2 = ev.max2;
    result.samples_evaluated = ev.evaluated;
    result.grid_disks.reserve(lat.count);
    for (const Run& r : lat.runs) {
      for (std::int64_t j = r.ja; j <= r.jb; ++j) {
        result.grid_disks.push_back(MakeDisk(lat.Center(j, r.k), lat.rad));
      }
    }
    result.radius_sum = static_cast<double>(lat.count) * lat.rad;
    const double grown = x0.outer().r + lat.inv_n / std::numbers::sqrt2;
    result.area_bound = params.epsilon * std::numbers::pi * grown * grown;
    return result;
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "no N <= " << params.n_max << " passed; best N = " << best_n
      << " with min_sum1 = " << best.min1 << ", max_sum2 = " << best.max2;
  throw CheeseError(ErrorCode::kSearchExhausted, msg.str());
}

namespace internal {

std::pair<double, double> WermerSums(const AbstractSwissCheese& x0,
                                     std::int64_t n, double epsilon, Point z) {
  const Lattice lat = BuildLattice(x0, n, epsilon);
  double s1 = 0.0, s2 = 0.0;
  LatticeSums(lat, z, &s1, &s2);
  return {lat.rad * s1, lat.rad * s2};
}

}  // namespace internal

WermerFillResult WermerFillerRun(double r_out, double r_in, double budget,
                                 std::span<const double> m_schedule,
                                 const WermerParams& params_base) {
  if (!(r_out > r_in) || !(r_in > 0.0) || !(budget > 0.0)) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "filler needs r_out > r_in > 0 and budget > 0");
  }
  if (m_schedule.empty()) {
    throw CheeseError(ErrorCode::kInvalidParameter, "empty M schedule");
  }
  for (std::size_t i = 1; i < m_schedule.size(); ++i) {
    if (!(m_schedule[i] > m_schedule[i - 1])) {
      throw CheeseError(ErrorCode::kInvalidParameter,
                        "M schedule must be increasing");
    }
  }
  const double area = std::numbers::pi * (r_out * r_out - r_in * r_in);
  std::vector<Disk> holes{{0.0, 0.0, r_in}};
  WermerFillResult out{AbstractSwissCheese({0.0, 0.0, r_out}, holes), false, 0,
                      {}};
  double used = 0.0;
  for (std::size_t i = 0; i < m_schedule.size(); ++i) {
    const double allot = budget / std::ldexp(1.0, static_cast<int>(i) + 1);
    WermerParams params = params_base;
    params.M = m_schedule[i];
    params.epsilon = std::min(0.49, allot / (2.0 * area));
    params.seed = params_base.seed + i;
    const AbstractSwissCheese current({0.0, 0.0, r_out}, holes);
    WermerResult step = WermerRefine(current, params);
    if (used + step.radius_sum >= budget) {
      out.budget_exceeded = true;
      break;
    }
    used += step.radius_sum;
    holes.insert(holes.end(), step.grid_disks.begin(), step.grid_disks.end());
    out.grid_sizes.push_back(step.n);
    ++out.iterations_done;
  }
  AbstractSwissCheese result({0.0, 0.0, r_out}, std::move(holes));
  if (!IsClassical(result, 0.0)) {
    result = ClassicaliseAnnular(result).cheese;
  }
  out.cheese = std::move(result);
  return out;
}

}  // namespace swisscheese
