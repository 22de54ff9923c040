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

#ifndef SWISSCHEESE_GEOMETRY_H_
#define SWISSCHEESE_GEOMETRY_H_

#include "swisscheese/cheese.h"

namespace swisscheese {

// Length of the centre-line segment inside the intersection of two open
// disks. Zero iff the open disks are disjoint.
double OverlapLength(const Disk& d1, const Disk& d2);

// Length of the centre-line segment of the open disk `d` lying outside the
// closed disk `outer`. Zero iff `d` is contained in `outer`.
double ExtrusionLength(const Disk& outer, const Disk& d);

// Smallest open disk containing the union of two intersecting open disks.
// Nested inputs return the larger disk (the first one for identical disks).
// Throws kPreconditionViolation when the open disks are disjoint.
Disk MinimalCoveringDisk(const Disk& d1, const Disk& d2);

// Largest closed disk inside the closed disk `outer` that misses the open
// disk `d`. Returns `outer` unchanged when the two are already disjoint.
// Throws kPreconditionViolation when either disk contains the other; a
// smaller disk touching `outer` from inside is accepted.
Disk MaximalAvoidingSubdisk(const Disk& outer, const Disk& d);

namespace internal {

// Closed-form pull-in without the non-nesting check. Valid whenever the
// centres differ and d.r < outer.r; used for internal tangency.
Disk PullIn(const Disk& outer, const Disk& d);

// Covering disk of two disks whose closures meet (tangency allowed).
Disk CoverPair(const Disk& d1, const Disk& d2);

}  // namespace internal
}  // namespace swisscheese

#endif  // SWISSCHEESE_GEOMETRY_H_
