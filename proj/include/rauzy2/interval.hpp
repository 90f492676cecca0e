#pragma once

#include <string>
#include <vector>

#include "rauzy2/quad.hpp"

namespace rauzy2 {

// Closed interval [lo, hi] of line coordinates. A zero error bound marks
// exact endpoints; otherwise the true set lies within `error` of [lo, hi]
// in Hausdorff distance.
struct Interval {
  QuadNum lo, hi;
  QuadNum error;

  Interval() = default;
  Interval(QuadNum lo_, QuadNum hi_);
  Interval(QuadNum lo_, QuadNum hi_, QuadNum error_);

  bool exact() const { return error.is_zero(); }
  QuadNum length() const { return hi - lo; }
  bool contains(const QuadNum& x) const { return lo <= x && x <= hi; }
  Interval translated(const QuadNum& t) const;
  // Multiply by a nonzero scalar; endpoints are re-sorted for negative factors.
  Interval scaled(const QuadNum& factor) const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Sorted union of disjoint closed intervals; touching parts are merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  bool single() const { return parts_.size() == 1; }
  Interval hull() const;
  QuadNum measure() const;
  IntervalSet translated(const QuadNum& t) const;
  IntervalSet scaled(const QuadNum& factor) const;
  IntervalSet with_error(const QuadNum& error) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet unite(const IntervalSet& x, const IntervalSet& y);
// Exact Hausdorff distance between two nonempty finite unions of intervals.
QuadNum hausdorff(const IntervalSet& x, const IntervalSet& y);
// Length of the intersection of two intervals (zero when disjoint).
QuadNum overlap(const Interval& x, const Interval& y);

}  // namespace rauzy2
