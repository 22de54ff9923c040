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

#ifndef SWISSCHEESE_CHEESE_H_
#define SWISSCHEESE_CHEESE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace swisscheese {

inline constexpr double kDefaultTolerance = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

double SquaredDistance(Point a, Point b);
double Distance(Point a, Point b);

// A centre and a non-negative radius. Whether the disk is open or closed is
// decided by how it is used: the outer disk of a cheese is closed, holes are
// open. A zero radius is the degenerate pair (empty open disk).
struct Disk {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;

  Point center() const { return {cx, cy}; }
  bool degenerate() const { return r == 0.0; }

  friend bool operator==(const Disk&, const Disk&) = default;
};

inline Disk MakeDisk(Point c, double r) { return {c.x, c.y, r}; }

// A closed outer disk (index 0) minus finitely many open holes (indices >= 1).
// Every index past the stored sequence is implicitly the degenerate pair.
// Immutable once constructed.
class AbstractSwissCheese {
 public:
  // Throws CheeseError on negative radii or non-finite values.
  explicit AbstractSwissCheese(Disk outer, std::vector<Disk> holes = {},
                               std::string name = {});

  const Disk& outer() const { return disks_.front(); }
  // All disks; element 0 is the outer disk.
  std::span<const Disk> disks() const { return disks_; }
  // Holes only, so holes()[i] is disk index i + 1.
  std::span<const Disk> holes() const {
    return std::span<const Disk>(disks_).subspan(1);
  }
  const Disk& disk(std::size_t index) const { return disks_.at(index); }
  std::size_t size() const { return disks_.size(); }
  std::size_t hole_count() const { return disks_.size() - 1; }
  const std::string& name() const { return name_; }

  friend bool operator==(const AbstractSwissCheese&,
                         const AbstractSwissCheese&) = default;

 private:
  std::vector<Disk> disks_;
  std::string name_;
};

struct OpenDiskRegion {
  Point center;
  double radius = 0.0;
};

struct OpenAnnulusRegion {
  Point center;
  double inner = 0.0;
  double outer = 0.0;
};

// Test region U for hit sets and region radius sums.
class OpenRegion {
 public:
  static OpenRegion Disk(Point center, double radius);
  static OpenRegion Annulus(Point center, double inner, double outer);

  bool is_disk() const {
    return std::holds_alternative<OpenDiskRegion>(shape_);
  }
  const OpenDiskRegion& disk() const { return std::get<OpenDiskRegion>(shape_); }
  const OpenAnnulusRegion& annulus() const {
    return std::get<OpenAnnulusRegion>(shape_);
  }

  // True iff the closed disk meets this open region.
  bool MeetsClosedDisk(const swisscheese::Disk& d) const;
  bool Contains(Point z) const;

 private:
  explicit OpenRegion(std::variant<OpenDiskRegion, OpenAnnulusRegion> shape)
      : shape_(shape) {}
  std::variant<OpenDiskRegion, OpenAnnulusRegion> shape_;
};

// A closed annulus K together with a margin M; the induced open region is
// the M-neighbourhood of K.
struct RegionPair {
  Point center;
  double inner = 0.0;
  double outer = 0.0;
  double margin = 0.0;

  // Throws CheeseError(kInvalidParameter) when the fields are inconsistent.
  void Validate() const;
  OpenRegion Neighborhood() const;
};

struct ErrorWitness {
  enum class Kind { kPair, kOuter };
  Kind kind = Kind::kPair;
  // For kPair, first < second. For kOuter only `first` is meaningful.
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const ErrorWitness&, const ErrorWitness&) = default;
};

struct CheeseReport {
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta_ann = 0.0;
  double rho = 0.0;
  double mu = 0.0;
  double rho_ann = 0.0;
  // Sum of r log(1/r) over significant holes.
  double radius_log_sum = 0.0;
  bool classical = false;
  bool semiclassical = false;
  bool annular = false;
  bool redundancy_free = false;
  std::size_t error_pair_count = 0;
  std::size_t hole_count = 0;
};

struct AreaEstimate {
  double estimate = 0.0;
  double half_width = 0.0;
};

std::vector<std::size_t> SignificantIndices(const AbstractSwissCheese& a);

// r0^alpha - sum r_n^alpha. Requires alpha >= 1.
double Delta(const AbstractSwissCheese& a, double alpha);
double DeltaAnnular(const AbstractSwissCheese& a);

double RadiusSum(const AbstractSwissCheese& a);
double CentreBound(const AbstractSwissCheese& a);
double AnnularRadiusSum(const AbstractSwissCheese& a);

std::vector<std::size_t> RegionHitSet(const AbstractSwissCheese& a,
                                      const OpenRegion& u);
double RegionRadiusSum(const AbstractSwissCheese& a, const OpenRegion& u);

bool IsSemiclassical(const AbstractSwissCheese& a,
                     double tol = kDefaultTolerance);
bool IsClassical(const AbstractSwissCheese& a, double tol = kDefaultTolerance);
bool IsAnnular(const AbstractSwissCheese& a, double tol = kDefaultTolerance);
bool IsRedundancyFree(const AbstractSwissCheese& a,
                      double tol = kDefaultTolerance);

std::vector<ErrorWitness> ErrorPairs(const AbstractSwissCheese& a);

// Witness-wise check that the error set lies in the union of the closed
// annuli of `regions`. Conservative: each witness region is bounded by the
// radial extent of its generating disks.
bool ErrorSetCovered(const AbstractSwissCheese& a,
                     std::span<const RegionPair> regions,
                     double tol = kDefaultTolerance);

bool ContainsPoint(const AbstractSwissCheese& a, Point z,
                   double tol = kDefaultTolerance);

// Monte-Carlo area of the associated set, sampling the bounding square of the
// outer disk. half_width is a 99% binomial confidence half-width.
AreaEstimate EstimateArea(const AbstractSwissCheese& a,
                          std::int64_t sample_count, std::uint64_t seed);

CheeseReport Report(const AbstractSwissCheese& a,
                    double tol = kDefaultTolerance);

// Bucketed membership queries for repeated ContainsPoint calls on one cheese.
class MembershipIndex {
 public:
  explicit MembershipIndex(const AbstractSwissCheese& a,
                           double tol = kDefaultTolerance);

  bool Contains(Point z) const;

 private:
  Disk outer_;
  double tol_;
  double x0_ = 0.0;
  double y0_ = 0.0;
  double cell_ = 1.0;
  int cells_ = 0;
  std::vector<Disk> holes_;
  std::vector<std::vector<std::uint32_t>> buckets_;
};

// Uniform double in [0, 1) from a 64-bit engine output.
inline double UnitInterval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace swisscheese

#endif  // SWISSCHEESE_CHEESE_H_
