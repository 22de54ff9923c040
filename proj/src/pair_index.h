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

#ifndef SWISSCHEESE_SRC_PAIR_INDEX_H_
#define SWISSCHEESE_SRC_PAIR_INDEX_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "swisscheese/cheese.h"

namespace swisscheese::internal {

// Calls fn(a, b) with a < b, positions in `ids`, for every pair of disks whose
// bounding boxes grown by `pad` overlap (touching counts). Each pair is
// reported at most once. fn returns false to stop early; the function then
// returns false as well.
template <typename Fn>
bool ForEachCandidatePair(std::span<const Disk> disks,
                          std::span<const std::size_t> ids, double pad,
                          Fn&& fn) {
  const std::size_t m = ids.size();
  auto boxes_meet = [&](std::size_t a, std::size_t b) {
    const Disk& p = disks[ids[a]];
    const Disk& q = disks[ids[b]];
    // Slightly generous so exact tangency survives rounding.
    const double s = (p.r + q.r + 2.0 * pad) * (1.0 + 1e-12) + 1e-300;
    return std::abs(p.cx - q.cx) <= s && std::abs(p.cy - q.cy) <= s;
  };
  if (m < 64) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        if (boxes_meet(a, b) && !fn(a, b)) return false;
      }
    }
    return true;
  }

  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
  std::vector<double> radii(m);
  for (std::size_t a = 0; a < m; ++a) {
    const Disk& d = disks[ids[a]];
    const double r = d.r + pad;
    x0 = std::min(x0, d.cx - r);
    y0 = std::min(y0, d.cy - r);
    x1 = std::max(x1, d.cx + r);
    y1 = std::max(y1, d.cy + r);
    radii[a] = r;
  }
  auto q = radii.begin() + static_cast<std::ptrdiff_t>(3 * m / 4);
  std::nth_element(radii.begin(), q, radii.end());
  const double extent = std::max({x1 - x0, y1 - y0, 1e-300});
  const int grid = static_cast<int>(std::clamp(
      extent / std::max(2.0 * *q, 1e-300), 1.0,
      std::min(2048.0, 2.0 * std::sqrt(static_cast<double>(m)) + 1.0)));
  const double cell = extent / grid;
  auto cell_of = [&](double v, double origin) {
    return std::clamp(static_cast<int>(std::floor((v - origin) / cell)), 0,
                      grid - 1);
  };

  struct Span {
    int ix0, iy0, ix1, iy1;
  };
  std::vector<Span> spans(m);
  std::vector<std::size_t> large;
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(grid) * grid + 1, 0);
  std::vector<char> is_large(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    const Disk& d = disks[ids[a]];
    const double r = d.r + pad + 1e-6 * cell;
    Span s{cell_of(d.cx - r, x0), cell_of(d.cy - r, y0), cell_of(d.cx + r, x0),
           cell_of(d.cy + r, y0)};
    spans[a] = s;
    if (s.ix1 - s.ix0 > 4 || s.iy1 - s.iy0 > 4) {
      large.push_back(a);
      is_large[a] = 1;
      continue;
    }
    for (int iy = s.iy0; iy <= s.iy1; ++iy) {
      for (int ix = s.ix0; ix <= s.ix1; ++ix) {
        ++counts[static_cast<std::size_t>(iy) * grid + ix + 1];
      }
    }
  }
  for (std::size_t c = 1; c < counts.size(); ++c) counts[c] += counts[c - 1];
  std::vector<std::uint32_t> items(counts.back());
  std::vector<std::uint32_t> fill(counts.begin(), counts.end() - 1);
  for (std::size_t a = 0; a < m; ++a) {
    if (is_large[a]) continue;
    const Span& s = spans[a];
    for (int iy = s.iy0; iy <= s.iy1; ++iy) {
      for (int ix = s.ix0; ix <= s.ix1; ++ix) {
        items[fill[static_cast<std::size_t>(iy) * grid + ix]++] =
            static_cast<std::uint32_t>(a);
      }
    }
  }

  // Small-small pairs, reported from the first cell the two spans share.
  for (int iy = 0; iy < grid; ++iy) {
    for (int ix = 0; ix < grid; ++ix) {
      const std::size_t c = static_cast<std::size_t>(iy) * grid + ix;
      for (std::uint32_t u = counts[c]; u < counts[c + 1]; ++u) {
        for (std::uint32_t v = u + 1; v < counts[c + 1]; ++v) {
          std::size_t a = items[u], b = items[v];
          if (a > b) std::swap(a, b);
          const Span& sa = spans[a];
          const Span& sb = spans[b];
          if (std::max(sa.ix0, sb.ix0) != ix || std::max(sa.iy0, sb.iy0) != iy) {
            continue;
          }
          if (boxes_meet(a, b) && !fn(a, b)) return false;
        }
      }
    }
  }
  // Pairs involving a large disk.
  for (std::size_t l = 0; l < large.size(); ++l) {
    const std::size_t a = large[l];
    for (std::size_t b = 0; b < m; ++b) {
      if (b == a || (is_large[b] && b < a)) continue;
      if (boxes_meet(a, b) && !fn(std::min(a, b), std::max(a, b))) return false;
    }
  }
  return true;
}

}  // namespace swisscheese::internal

#endif  // SWISSCHEESE_SRC_PAIR_INDEX_H_
