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

#include "swisscheese/cheese.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "pair_index.h"
#include "swisscheese/error.h"

namespace swisscheese {
namespace {

// Two-sided z-score for 99% confidence.
constexpr double kZ99 = 2.5758293035489004;

void ValidateDisk(const Disk& d, std::size_t index) {
  if (!std::isfinite(d.cx) || !std::isfinite(d.cy) || !std::isfinite(d.r)) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "non-finite value in disk " + std::to_string(index));
  }
  if (d.r < 0.0) {
    throw CheeseError(ErrorCode::kNegativeRadius,
                      "negative radius at index " + std::to_string(index));
  }
}

// |p - q| <= bound, compared in squares. A negative bound never holds.
bool WithinDistance(Point p, Point q, double bound) {
  if (bound < 0.0) return false;
  return SquaredDistance(p, q) <= bound * bound;
}

bool StrictlyWithinDistance(Point p, Point q, double bound) {
  if (bound <= 0.0) return false;
  return SquaredDistance(p, q) < bound * bound;
}

}  // namespace

double SquaredDistance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double Distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

AbstractSwissCheese::AbstractSwissCheese(Disk outer, std::vector<Disk> holes,
                                         std::string name)
    : name_(std::move(name)) {
  disks_.reserve(holes.size() + 1);
  disks_.push_back(outer);
  disks_.insert(disks_.end(), holes.begin(), holes.end());
  for (std::size_t i = 0; i < disks_.size(); ++i) ValidateDisk(disks_[i], i);
}

OpenRegion OpenRegion::Disk(Point center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "open disk region needs a positive radius");
  }
  return OpenRegion(OpenDiskRegion{center, radius});
}

OpenRegion OpenRegion::Annulus(Point center, double inner, double outer) {
  if (!(inner >= 0.0) || !(outer > inner) || !std::isfinite(outer)) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "open annulus region needs 0 <= inner < outer");
  }
  return OpenRegion(OpenAnnulusRegion{center, inner, outer});
}

bool OpenRegion::MeetsClosedDisk(const swisscheese::Disk& d) const {
  if (is_disk()) {
    const auto& u = disk();
    return StrictlyWithinDistance(d.center(), u.center, d.r + u.radius);
  }
  const auto& u = annulus();
  const double dist = Distance(d.center(), u.center);
  return std::max(0.0, dist - d.r) < u.outer && dist + d.r > u.inner;
}

bool OpenRegion::Contains(Point z) const {
  if (is_disk()) {
    const auto& u = disk();
    return StrictlyWithinDistance(z, u.center, u.radius);
  }
  const auto& u = annulus();
  const double d2 = SquaredDistance(z, u.center);
  return d2 > u.inner * u.inner && d2 < u.outer * u.outer;
}

void RegionPair::Validate() const {
  if (!std::isfinite(center.x) || !std::isfinite(center.y) ||
      !std::isfinite(outer) || !std::isfinite(margin) || !(inner >= 0.0) ||
      !(inner < outer) || !(margin > 0.0)) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "region pair needs 0 <= inner < outer and margin > 0");
  }
}

OpenRegion RegionPair::Neighborhood() const {
  Validate();
  return OpenRegion::Annulus(center, std::max(0.0, inner - margin),
                             outer + margin);
}

std::vector<std::size_t> SignificantIndices(const AbstractSwissCheese& a) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n < a.size(); ++n) {
    if (a.disk(n).r > 0.0) out.push_back(n);
  }
  return out;
}

double Delta(const AbstractSwissCheese& a, double alpha) {
  if (!(alpha >= 1.0)) {
    throw CheeseError(ErrorCode::kInvalidParameter, "alpha must be >= 1");
  }
  if (alpha == 1.0) return a.outer().r - RadiusSum(a);
  double sum = 0.0;
  for (const Disk& h : a.holes()) sum += std::pow(h.r, alpha);
  return std::pow(a.outer().r, alpha) - sum;
}

double DeltaAnnular(const AbstractSwissCheese& a) {
  const double r1 = a.hole_count() >= 1 ? a.disk(1).r : 0.0;
  return a.outer().r - r1 - 2.0 * AnnularRadiusSum(a);
}

double RadiusSum(const AbstractSwissCheese& a) {
  double sum = 0.0;
  for (const Disk& h : a.holes()) sum += h.r;
  return sum;
}

double CentreBound(const AbstractSwissCheese& a) {
  double mu = 0.0;
  for (const Disk& h : a.holes()) {
    if (h.r > 0.0) mu = std::max(mu, std::hypot(h.cx, h.cy));
  }
  return mu;
}

double AnnularRadiusSum(const AbstractSwissCheese& a) {
  double sum = 0.0;
  for (std::size_t n = 2; n < a.size(); ++n) sum += a.disk(n).r;
  return sum;
}

std::vector<std::size_t> RegionHitSet(const AbstractSwissCheese& a,
                                      const OpenRegion& u) {
  std::vector<std::size_t> out;
  for (std::size_t n : SignificantIndices(a)) {
    if (u.MeetsClosedDisk(a.disk(n))) out.push_back(n);
  }
  return out;
}

double RegionRadiusSum(const AbstractSwissCheese& a, const OpenRegion& u) {
  double sum = 0.0;
  for (std::size_t n : RegionHitSet(a, u)) sum += a.disk(n).r;
  return sum;
}

bool IsSemiclassical(const AbstractSwissCheese& a, double tol) {
  const Disk& o = a.outer();
  if (!(o.r > 0.0)) return false;
  const auto sig = SignificantIndices(a);
  for (std::size_t k : sig) {
    const Disk& d = a.disk(k);
    if (!WithinDistance(d.center(), o.center(), o.r + tol - d.r)) return false;
  }
  const auto disks = a.disks();
  return internal::ForEachCandidatePair(
      disks, sig, 0.0, [&](std::size_t i, std::size_t j) {
        const Disk& k = disks[sig[i]];
        const Disk& l = disks[sig[j]];
        const double bound = k.r + l.r - tol;
        return !(bound > 0.0 &&
                 SquaredDistance(k.center(), l.center()) < bound * bound);
      });
}

bool IsClassical(const AbstractSwissCheese& a, double tol) {
  const Disk& o = a.outer();
  if (!(o.r > 0.0)) return false;
  const auto sig = SignificantIndices(a);
  for (std::size_t k : sig) {
    const Disk& d = a.disk(k);
    if (!StrictlyWithinDistance(d.center(), o.center(), o.r - tol - d.r)) {
      return false;
    }
  }
  const auto disks = a.disks();
  return internal::ForEachCandidatePair(
      disks, sig, tol, [&](std::size_t i, std::size_t j) {
        const Disk& k = disks[sig[i]];
        const Disk& l = disks[sig[j]];
        const double bound = k.r + l.r + tol;
        return SquaredDistance(k.center(), l.center()) > bound * bound;
      });
}

bool IsAnnular(const AbstractSwissCheese& a, double tol) {
  if (a.hole_count() < 1) return false;
  const Disk& o = a.outer();
  const Disk& c = a.disk(1);
  return WithinDistance(o.center(), c.center(), tol) && o.r > c.r && c.r > 0.0;
}

// Containment between holes is tested exactly so that equal disks always
// count as contained; tol only widens the "meets the outer disk" test.
bool IsRedundancyFree(const AbstractSwissCheese& a, double tol) {
  const Disk& o = a.outer();
  const auto sig = SignificantIndices(a);
  for (std::size_t k : sig) {
    const Disk& dk = a.disk(k);
    if (!StrictlyWithinDistance(dk.center(), o.center(), o.r + dk.r + tol)) {
      return false;
    }
  }
  const auto disks = a.disks();
  return internal::ForEachCandidatePair(
      disks, sig, 0.0, [&](std::size_t i, std::size_t j) {
        const Disk& p = disks[sig[i]];
        const Disk& q = disks[sig[j]];
        return !WithinDistance(p.center(), q.center(), q.r - p.r) &&
               !WithinDistance(q.center(), p.center(), p.r - q.r);
      });
}

std::vector<ErrorWitness> ErrorPairs(const AbstractSwissCheese& a) {
  std::vector<ErrorWitness> out;
  const Disk& o = a.outer();
  const auto sig = SignificantIndices(a);
  const auto disks = a.disks();
  internal::ForEachCandidatePair(
      disks, sig, 0.0, [&](std::size_t i, std::size_t j) {
        const Disk& m = disks[sig[i]];
        const Disk& n = disks[sig[j]];
        if (WithinDistance(m.center(), n.center(), m.r + n.r)) {
          out.push_back({ErrorWitness::Kind::kPair, sig[i], sig[j]});
        }
        return true;
      });
  std::ranges::sort(out, {}, [](const ErrorWitness& w) {
    return std::pair{w.first, w.second};
  });
  for (std::size_t n : sig) {
    const Disk& h = a.disk(n);
    if (!StrictlyWithinDistance(h.center(), o.center(), o.r - h.r)) {
      out.push_back({ErrorWitness::Kind::kOuter, n, n});
    }
  }
  return out;
}

bool ErrorSetCovered(const AbstractSwissCheese& a,
                     std::span<const RegionPair> regions, double tol) {
  const Disk& o = a.outer();
  auto radial = [](const Disk& d, Point c) {
    const double dist = Distance(d.center(), c);
    return std::pair{std::max(0.0, dist - d.r), dist + d.r};
  };
  for (const ErrorWitness& w : ErrorPairs(a)) {
    bool covered = false;
    for (const RegionPair& k : regions) {
      double lo, hi;
      if (w.kind == ErrorWitness::Kind::kPair) {
        const auto [lo1, hi1] = radial(a.disk(w.first), k.center);
        const auto [lo2, hi2] = radial(a.disk(w.second), k.center);
        lo = std::max(lo1, lo2);
        hi = std::min(hi1, hi2);
      } else {
        const auto [lo1, hi1] = radial(a.disk(w.first), k.center);
        lo = std::max(lo1, o.r - Distance(o.center(), k.center));
        hi = hi1;
      }
      if (lo >= k.inner - tol && hi <= k.outer + tol) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool ContainsPoint(const AbstractSwissCheese& a, Point z, double tol) {
  const Disk& o = a.outer();
  if (!WithinDistance(z, o.center(), o.r + tol)) return false;
  for (const Disk& h : a.holes()) {
    if (h.r > 0.0 && StrictlyWithinDistance(z, h.center(), h.r - tol)) {
      return false;
    }
  }
  return true;
}

MembershipIndex::MembershipIndex(const AbstractSwissCheese& a, double tol)
    : outer_(a.outer()), tol_(tol) {
  const double half = outer_.r + tol;
  x0_ = outer_.cx - half;
  y0_ = outer_.cy - half;
  for (const Disk& h : a.holes()) {
    if (h.r - tol > 0.0) holes_.push_back(h);
  }
  cells_ = std::clamp(
      static_cast<int>(std::ceil(std::sqrt(static_cast<double>(holes_.size())))),
      1, 512);
  cell_ = half > 0.0 ? 2.0 * half / cells_ : 1.0;
  buckets_.resize(static_cast<std::size_t>(cells_) * cells_);
  auto clamp_cell = [this](double v) {
    return std::clamp(static_cast<int>(std::floor(v / cell_)), 0, cells_ - 1);
  };
  for (std::uint32_t i = 0; i < holes_.size(); ++i) {
    const Disk& h = holes_[i];
    const double r = h.r - tol;
    if (h.cx + r < x0_ || h.cy + r < y0_ || h.cx - r > x0_ + 2 * half ||
        h.cy - r > y0_ + 2 * half) {
      continue;
    }
    const int ix0 = clamp_cell(h.cx - r - x0_);
    const int ix1 = clamp_cell(h.cx + r - x0_);
    const int iy0 = clamp_cell(h.cy - r - y0_);
    const int iy1 = clamp_cell(h.cy + r - y0_);
    for (int iy = iy0; iy <= iy1; ++iy) {
      for (int ix = ix0; ix <= ix1; ++ix) {
        buckets_[static_cast<std::size_t>(iy) * cells_ + ix].push_back(i);
      }
    }
  }
}

bool MembershipIndex::Contains(Point z) const {
  if (!WithinDistance(z, outer_.center(), outer_.r + tol_)) return false;
  const int ix = std::clamp(static_cast<int>(std::floor((z.x - x0_) / cell_)),
                            0, cells_ - 1);
  const int iy = std::clamp(static_cast<int>(std::floor((z.y - y0_) / cell_)),
                            0, cells_ - 1);
  for (std::uint32_t i : buckets_[static_cast<std::size_t>(iy) * cells_ + ix]) {
    const Disk& h = holes_[i];
    if (StrictlyWithinDistance(z, h.center(), h.r - tol_)) return false;
  }
  return true;
}

AreaEstimate EstimateArea(const AbstractSwissCheese& a,
                          std::int64_t sample_count, std::uint64_t seed) {
  if (sample_count < 1) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      "sample_count must be at least 1");
  }
  const Disk& o = a.outer();
  if (o.r == 0.0) return {0.0, 0.0};
  const MembershipIndex index(a, 0.0);
  std::mt19937_64 rng(seed);
  const double side = 2.0 * o.r;
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < sample_count; ++i) {
    const Point z{o.cx - o.r + side * UnitInterval(rng()),
                  o.cy - o.r + side * UnitInterval(rng())};
    if (index.Contains(z)) ++hits;
  }
  const double n = static_cast<double>(sample_count);
  const double p = static_cast<double>(hits) / n;
  const double square = side * side;
  return {p * square, kZ99 * std::sqrt(p * (1.0 - p) / n) * square};
}

CheeseReport Report(const AbstractSwissCheese& a, double tol) {
  CheeseReport r;
  r.delta1 = Delta(a, 1.0);
  r.delta2 = Delta(a, 2.0);
  r.delta_ann = DeltaAnnular(a);
  r.rho = RadiusSum(a);
  r.mu = CentreBound(a);
  r.rho_ann = AnnularRadiusSum(a);
  for (const Disk& h : a.holes()) {
    if (h.r > 0.0) r.radius_log_sum += h.r * std::log(1.0 / h.r);
  }
  r.classical = IsClassical(a, tol);
  r.semiclassical = IsSemiclassical(a, tol);
  r.annular = IsAnnular(a, tol);
  r.redundancy_free = IsRedundancyFree(a, tol);
  r.error_pair_count = ErrorPairs(a).size();
  r.hole_count = a.hole_count();
  return r;
}

}  // namespace swisscheese
