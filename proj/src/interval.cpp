#include "rauzy2/interval.hpp"

#include <algorithm>

namespace rauzy2 {

Interval::Interval(QuadNum lo_, QuadNum hi_) : Interval(std::move(lo_), std::move(hi_), QuadNum()) {}

Interval::Interval(QuadNum lo_, QuadNum hi_, QuadNum error_)
    : lo(std::move(lo_)), hi(std::move(hi_)), error(std::move(error_)) {
  if (error.is_zero()) error = QuadNum(lo.root(), 0);
  if (hi < lo) throw InconsistencyError("interval with lo > hi");
}

Interval Interval::translated(const QuadNum& t) const { return Interval(lo + t, hi + t, error); }

Interval Interval::scaled(const QuadNum& factor) const {
  QuadNum a = lo * factor, b = hi * factor;
  QuadNum e = error * factor.abs();
  return factor.sign() < 0 ? Interval(b, a, e) : Interval(a, b, e);
}

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (Interval& p : parts) {
    if (!parts_.empty() && p.lo <= parts_.back().hi) {
      Interval& b = parts_.back();
      if (b.hi < p.hi) b.hi = p.hi;
      if (b.error < p.error) b.error = p.error;
    } else {
      parts_.push_back(std::move(p));
    }
  }
}

Interval IntervalSet::hull() const {
  if (parts_.empty()) throw InconsistencyError("hull of an empty interval set");
  QuadNum err = parts_.front().error;
  for (const auto& p : parts_) err = qmax(err, p.error);
  return Interval(parts_.front().lo, parts_.back().hi, err);
}

QuadNum IntervalSet::measure() const {
  if (parts_.empty()) return QuadNum();
  QuadNum m(parts_.front().lo.root(), 0);
  for (const auto& p : parts_) m += p.length();
  return m;
}

IntervalSet IntervalSet::translated(const QuadNum& t) const {
  std::vector<Interval> v;
  for (const auto& p : parts_) v.push_back(p.translated(t));
  return IntervalSet(std::move(v));
}

IntervalSet IntervalSet::scaled(const QuadNum& factor) const {
  std::vector<Interval> v;
  for (const auto& p : parts_) v.push_back(p.scaled(factor));
  return IntervalSet(std::move(v));
}

IntervalSet IntervalSet::with_error(const QuadNum& error) const {
  std::vector<Interval> v;
  for (const auto& p : parts_) v.emplace_back(p.lo, p.hi, error);
  return IntervalSet(std::move(v));
}

IntervalSet unite(const IntervalSet& x, const IntervalSet& y) {
  std::vector<Interval> v(x.parts());
  v.insert(v.end(), y.parts().begin(), y.parts().end());
  return IntervalSet(std::move(v));
}

namespace {

QuadNum distance(const QuadNum& t, const IntervalSet& s) {
  QuadNum best;
  bool first = true;
  for (const auto& p : s.parts()) {
    QuadNum d = t < p.lo ? p.lo - t : (p.hi < t ? t - p.hi : QuadNum(t.root(), 0));
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

QuadNum directed(const IntervalSet& x, const IntervalSet& y) {
  QuadNum best(x.parts().front().lo.root(), 0);
  const auto& yp = y.parts();
  for (const auto& p : x.parts()) {
    std::vector<QuadNum> candidates{p.lo, p.hi};
    for (std::size_t k = 0; k + 1 < yp.size(); ++k) {
      QuadNum m = (yp[k].hi + yp[k + 1].lo) * Rational(1, 2);
      if (p.lo < m && m < p.hi) candidates.push_back(m);
    }
    for (const auto& c : candidates) best = qmax(best, distance(c, y));
  }
  return best;
}

}  // namespace

QuadNum hausdorff(const IntervalSet& x, const IntervalSet& y) {
  if (x.empty() || y.empty()) throw InconsistencyError("Hausdorff distance of an empty set");
  return qmax(directed(x, y), directed(y, x));
}

QuadNum overlap(const Interval& x, const Interval& y) {
  QuadNum d = qmin(x.hi, y.hi) - qmax(x.lo, y.lo);
  return d.sign() > 0 ? d : QuadNum(x.lo.root(), 0);
}

}  // namespace rauzy2
