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

#include "swisscheese/constructions.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "swisscheese/error.h"

namespace swisscheese {
namespace {

void CheckFillerOutput(const AbstractSwissCheese& c, double r_out, double r_in,
                       double budget, const std::string& label) {
  auto fail = [&](const std::string& why) {
    throw CheeseError(ErrorCode::kFillerFailed, label + ": " + why);
  };
  constexpr double kRadiusTol = 1e-12;
  if (c.hole_count() < 1) fail("no central hole");
  const Disk& o = c.outer();
  const Disk& h = c.disk(1);
  if (o.cx != 0.0 || o.cy != 0.0 || h.cx != 0.0 || h.cy != 0.0) {
    fail("not centred at the origin");
  }
  if (std::abs(o.r - r_out) > kRadiusTol || std::abs(h.r - r_in) > kRadiusTol) {
    fail("radii differ from the request");
  }
  if (!IsAnnular(c, 0.0) || !IsClassical(c, 0.0)) fail("not classical annular");
  if (!(AnnularRadiusSum(c) < budget)) fail("ring sum exceeds the budget");
}

double NeumaierSum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  double carry = 0.0;
  for (double t : terms) {
    const double next = sum + t;
    if (std::abs(sum) >= std::abs(t)) {
      carry += (sum - next) + t;
    } else {
      carry += (t - next) + sum;
    }
    sum = next;
  }
  return sum + carry;
}

}  // namespace

AbstractSwissCheese Figure1Cheese() {
  constexpr double kQuarter = 0.25;
  constexpr double kRadius = 3.0 / 32.0;
  std::vector<Disk> holes;
  for (int row = -1; row <= 1; ++row) {
    for (int col = -1; col <= 1; ++col) {
      holes.push_back({col * kQuarter, row * kQuarter, kRadius});
    }
  }
  return AbstractSwissCheese({0.0, 0.0, 1.0}, std::move(holes), "figure1");
}

AbstractSwissCheese RingFiller(double r_out, double r_in, double budget,
                               int count) {
  if (!(r_out > r_in) || !(r_in > 0.0) || !(budget > 0.0) || count < 1 ||
      !std::isfinite(r_out) || !std::isfinite(budget)) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "ring filler needs r_out > r_in > 0, budget > 0, "
                      "count >= 1");
  }
  const double t = std::min(budget / (2.0 * count), (r_out - r_in) / 8.0);
  const double mid = (r_out + r_in) / 2.0;
  if (2.0 * count * std::asin(t / mid) >= 2.0 * std::numbers::pi) {
    throw CheeseError(ErrorCode::kPlacementInfeasible,
                      "ring disks cannot be placed disjointly");
  }
  std::vector<Disk> holes{{0.0, 0.0, r_in}};
  for (int i = 0; i < count; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / count;
    holes.push_back({mid * std::cos(angle), mid * std::sin(angle), t});
  }
  return AbstractSwissCheese({0.0, 0.0, r_out}, std::move(holes), "rings");
}

Filler MakeRingFiller(int count) {
  return [count](double r_out, double r_in, double budget) {
    return RingFiller(r_out, r_in, budget, count);
  };
}

Filler MakeWermerFiller(std::vector<double> m_schedule,
                        WermerParams params_base) {
  return [schedule = std::move(m_schedule), params_base](
             double r_out, double r_in, double budget) {
    return WermerFillerRun(r_out, r_in, budget, schedule, params_base).cheese;
  };
}

double MorrisRingBudget(double C, int n) {
  const double s = (n + 3.0) * (n + 3.0);
  return std::min(C / (std::ldexp(1.0, n + 3) * s), 1.0 / (24.0 * s));
}

MorrisResult MorrisAssemble(double C, int levels, const Filler& filler) {
  if (!(C > 0.0) || !std::isfinite(C) || levels < 1) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "Morris assembly needs C > 0 and levels >= 1");
  }
  std::vector<AbstractSwissCheese> fam_a, fam_b;
  std::vector<Disk> holes;
  for (int n = 1; n <= levels; ++n) {
    const double budget = MorrisRingBudget(C, n);
    const double r0 = (n + 1.0) / (n + 2.0);
    const double r1 = n / (n + 1.0);
    const double band = 1.0 / (4.0 * (n + 3.0) * (n + 3.0));
    fam_a.push_back(filler(r0, r1, budget));
    CheckFillerOutput(fam_a.back(), r0, r1, budget,
                      "family A level " + std::to_string(n));
    fam_b.push_back(filler(r0 + band, r0 - band, budget));
    CheckFillerOutput(fam_b.back(), r0 + band, r0 - band, budget,
                      "family B level " + std::to_string(n));
    for (const auto* fam : {&fam_a.back(), &fam_b.back()}) {
      for (std::size_t m = 2; m < fam->size(); ++m) holes.push_back(fam->disk(m));
    }
  }
  const AbstractSwissCheese assembled({0.0, 0.0, 1.0}, std::move(holes),
                                      "morris");
  const AbstractSwissCheese reduced = ReduceRedundancy(assembled).cheese;

  std::vector<RegionPair> regions;
  for (int n = 1; n <= levels; ++n) {
    const double r0 = (n + 1.0) / (n + 2.0);
    const double m_n = 1.0 / (4.0 * (n + 3.0) * (n + 3.0));
    regions.push_back({{0.0, 0.0}, r0 - m_n, r0 + m_n, m_n});
  }

  MorrisReport report;
  report.C = C;
  report.level_count = levels;
  report.regions_disjoint = true;
  for (int n = 1; n <= levels; ++n) {
    const RegionPair& k = regions[n - 1];
    const OpenRegion u = k.Neighborhood();
    MorrisLevel lv;
    lv.n = n;
    lv.ring_budget = MorrisRingBudget(C, n);
    lv.ar_a = AnnularRadiusSum(fam_a[n - 1]);
    lv.ar_b = AnnularRadiusSum(fam_b[n - 1]);
    lv.rho_u = RegionRadiusSum(reduced, u);
    lv.rho_u_raw = RegionRadiusSum(assembled, u);
    lv.m_n = k.margin;
    lv.top_level = n == levels;
    const double next = lv.top_level ? 0.0 : AnnularRadiusSum(fam_a[n]);
    // Slack covers summation-order rounding when every family disk is hit.
    const double bound = (lv.ar_a + next + lv.ar_b) * (1.0 + 1e-12);
    lv.inequality_holds = lv.rho_u <= lv.rho_u_raw && lv.rho_u_raw <= bound;
    const double reach = u.annulus().outer;
    lv.admissible = lv.rho_u < lv.m_n / 2.0 && reach < 1.0;
    if (n < levels) {
      const double next_inner = regions[n].Neighborhood().annulus().inner;
      if (!(reach < next_inner)) {
        report.regions_disjoint = false;
        lv.admissible = false;
      }
    }
    report.per_level.push_back(lv);
  }
  for (const MorrisLevel& lv : report.per_level) {
    if (!lv.admissible) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "level " << lv.n << ": rho_U = " << lv.rho_u
          << ", M_n/2 = " << lv.m_n / 2.0;
      throw CheeseError(ErrorCode::kInadmissibleRegions, msg.str());
    }
  }

  ControlledResult controlled = ClassicaliseControlled(reduced, regions);
  const MorrisReport verified = MorrisVerify(controlled.cheese, C);
  report.weighted_sum = verified.weighted_sum;
  report.weighted_sum_compensated = verified.weighted_sum_compensated;
  report.within_bound = verified.within_bound;
  report.circle_in_set = verified.circle_in_set;
  report.final_classical = verified.final_classical;
  for (std::size_t i = 0; i < report.per_level.size(); ++i) {
    report.per_level[i].rho_u_after = controlled.control.regions[i].rho_after;
  }
  return {std::move(controlled.cheese), std::move(regions),
          std::move(controlled.trace), std::move(report)};
}

MorrisReport MorrisVerify(const AbstractSwissCheese& b, double C, double tol) {
  const Disk& o = b.outer();
  if (std::abs(o.cx) > tol || std::abs(o.cy) > tol || std::abs(o.r - 1.0) > tol) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "Morris verification needs the closed unit disk as "
                      "outer disk");
  }
  MorrisReport report;
  report.C = C;
  std::vector<double> terms;
  double streaming = 0.0;
  for (std::size_t n = 1; n < b.size(); ++n) {
    const Disk& h = b.disk(n);
    if (!(h.r > 0.0)) continue;
    const double d = 1.0 - (std::hypot(h.cx, h.cy) + h.r);
    if (!(d > 0.0)) {
      throw CheeseError(ErrorCode::kCircleViolated,
                        "hole " + std::to_string(n) + " meets the unit circle");
    }
    const double term = h.r / (d * d);
    streaming += term;
    terms.push_back(term);
  }
  report.weighted_sum = streaming;
  report.weighted_sum_compensated = NeumaierSum(std::move(terms));
  report.within_bound = report.weighted_sum <= C;
  report.circle_in_set = true;
  report.final_classical = IsClassical(b, 0.0);
  report.regions_disjoint = true;
  return report;
}

}  // namespace swisscheese
