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

#include "swisscheese/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swisscheese/error.h"

namespace swisscheese {
namespace {

void RequirePositive(const Disk& d, const char* what) {
  if (!(d.r > 0.0)) {
    throw CheeseError(ErrorCode::kInvalidParameter,
                      std::string(what) + " must have a positive radius");
  }
}

}  // namespace

double OverlapLength(const Disk& d1, const Disk& d2) {
  RequirePositive(d1, "first disk");
  RequirePositive(d2, "second disk");
  const double d = Distance(d1.center(), d2.center());
  return std::max(0.0, std::min({d1.r + d2.r - d, 2.0 * d1.r, 2.0 * d2.r}));
}

double ExtrusionLength(const Disk& outer, const Disk& d) {
  RequirePositive(outer, "outer disk");
  RequirePositive(d, "disk");
  const double dist = Distance(outer.center(), d.center());
  return std::max(0.0, std::min(dist + d.r - outer.r, 2.0 * d.r));
}

Disk MinimalCoveringDisk(const Disk& d1, const Disk& d2) {
  if (!(OverlapLength(d1, d2) > 0.0)) {
    throw CheeseError(ErrorCode::kPreconditionViolation,
                      "minimal covering disk needs intersecting disks");
  }
  return internal::CoverPair(d1, d2);
}

Disk MaximalAvoidingSubdisk(const Disk& outer, const Disk& d) {
  RequirePositive(outer, "outer disk");
  RequirePositive(d, "disk");
  const double dist = Distance(outer.center(), d.center());
  // Internal tangency of a smaller hole is allowed: the formula still gives
  // the subdisk diametrically opposite the contact point.
  const double gap = std::abs(outer.r - d.r);
  if (dist < gap || (dist == gap && !(d.r < outer.r)) || dist == 0.0) {
    throw CheeseError(ErrorCode::kPreconditionViolation,
                      "maximal avoiding subdisk needs non-nested disks");
  }
  if (dist >= outer.r + d.r) return outer;
  return internal::PullIn(outer, d);
}

namespace internal {

constexpr int kMaxNudges = 64;

Disk PullIn(const Disk& outer, const Disk& d) {
  const double dist = Distance(outer.center(), d.center());
  if (dist >= outer.r + d.r) return outer;
  double r = (dist + outer.r - d.r) / 2.0;
  const Point c =
      outer.center() + ((outer.r - r) / dist) * (outer.center() - d.center());
  // Shrink in doubling steps from one ulp until containment and avoidance
  // hold as evaluated; rounding in the centre can cost many ulps of r.
  double step = std::nextafter(r, 0.0) - r;
  for (int i = 0; i < kMaxNudges && r > 0.0; ++i, step *= 2.0) {
    if (Distance(c, outer.center()) + r <= outer.r &&
        Distance(c, d.center()) >= r + d.r) {
      break;
    }
    r = std::max(0.0, r + step);
  }
  return MakeDisk(c, r);
}

Disk CoverPair(const Disk& d1, const Disk& d2) {
  const double d = Distance(d1.center(), d2.center());
  if (d <= std::abs(d1.r - d2.r)) return d1.r >= d2.r ? d1 : d2;
  double r = (d + d1.r + d2.r) / 2.0;
  const Point c = d1.center() + ((r - d1.r) / d) * (d2.center() - d1.center());
  // Grow in doubling steps from one ulp until both disks are contained as
  // evaluated.
  double step = std::nextafter(r, std::numeric_limits<double>::infinity()) - r;
  for (int i = 0; i < kMaxNudges; ++i, step *= 2.0) {
    if (Distance(c, d1.center()) + d1.r <= r &&
        Distance(c, d2.center()) + d2.r <= r) {
      break;
    }
    r += step;
  }
  return MakeDisk(c, r);
}

}  // namespace internal
}  // namespace swisscheese
