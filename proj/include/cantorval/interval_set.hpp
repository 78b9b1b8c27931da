#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cantorval/rational.hpp"

namespace cantorval {

/// Closed interval [lo, hi]; lo == hi (a single point) is allowed.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw std::invalid_argument("Interval: lo > hi (" + lo.str() + ", " + hi.str() + ")");
  }

  Rational length() const { return hi - lo; }
  bool degenerate() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of pairwise disjoint closed intervals kept in canonical form:
/// parts are sorted and strictly separated (part[i].hi < part[i+1].lo).
/// Touching or overlapping inputs are merged on construction.
///
/// Degenerate parts are retained; interior_measure() and interior() ignore
/// them, since a degenerate part contributes nothing to the topological
/// interior of the union.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(std::initializer_list<Interval> parts)
      : IntervalSet(normalize(std::vector<Interval>(parts))) {}

  static IntervalSet normalize(std::vector<Interval> parts) {
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      return a.hi < b.hi;
    });
    return from_sorted(std::move(parts));
  }

  /// Canonicalizes input already sorted by lower endpoint. Linear time.
  static IntervalSet from_sorted(std::vector<Interval> sorted) {
    IntervalSet out;
    out.parts_.reserve(sorted.size());
    for (auto& iv : sorted) {
      if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi) {
        if (out.parts_.back().hi < iv.hi) out.parts_.back().hi = std::move(iv.hi);
      } else {
        out.parts_.push_back(std::move(iv));
      }
    }
    return out;
  }

  const std::vector<Interval>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  const Interval& operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  Rational measure() const {
    Rational total;
    for (const auto& p : parts_) total += p.length();
    return total;
  }

  Rational interior_measure() const { return measure(); }

  /// Same set with degenerate parts dropped.
  IntervalSet interior() const {
    IntervalSet out;
    for (const auto& p : parts_)
      if (!p.degenerate()) out.parts_.push_back(p);
    return out;
  }

  std::optional<Interval> hull() const {
    if (parts_.empty()) return std::nullopt;
    return Interval(parts_.front().lo, parts_.back().hi);
  }

  /// First longest part (ties broken to the left).
  std::optional<Interval> longest_component() const {
    if (parts_.empty()) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[best].length() < parts_[i].length()) best = i;
    return parts_[best];
  }

  bool contains(const Rational& x) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](const Rational& v, const Interval& p) { return v < p.lo; });
    if (it == parts_.begin()) return false;
    return std::prev(it)->contains(x);
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

inline Rational measure(const IntervalSet& s) { return s.measure(); }

inline IntervalSet normalize(std::vector<Interval> parts) { return IntervalSet::normalize(std::move(parts)); }

inline IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all;
  all.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all),
             [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  return IntervalSet::from_sorted(std::move(all));
}

inline IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Rational& lo = max(a[i].lo, b[j].lo);
    const Rational& hi = min(a[i].hi, b[j].hi);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (a[i].hi < b[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalSet::from_sorted(std::move(out));
}

/// Closure of a \ b.
inline IntervalSet subtract(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  std::size_t j = 0;
  for (const auto& part : a) {
    while (j < b.size() && b[j].hi < part.lo) ++j;
    if (part.degenerate()) {
      if (!(j < b.size() && b[j].contains(part.lo))) out.push_back(part);
      continue;
    }
    Rational cur = part.lo;
    std::size_t k = j;
    while (k < b.size() && b[k].lo <= part.hi) {
      if (cur < b[k].lo) out.emplace_back(cur, b[k].lo);
      if (cur < b[k].hi) cur = b[k].hi;
      ++k;
    }
    if (cur < part.hi) out.emplace_back(cur, part.hi);
  }
  return IntervalSet::from_sorted(std::move(out));
}

/// { scale * x + shift : x in s }.
inline IntervalSet affine(const IntervalSet& s, const Rational& scale, const Rational& shift) {
  if (!scale.is_positive()) throw std::invalid_argument("affine: scale must be positive");
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const auto& p : s) out.emplace_back(scale * p.lo + shift, scale * p.hi + shift);
  return IntervalSet::from_sorted(std::move(out));
}

/// Linear sweep: every part of a must sit inside a single part of b.
inline bool is_subset(const IntervalSet& a, const IntervalSet& b) {
  std::size_t j = 0;
  for (const auto& part : a) {
    while (j < b.size() && b[j].hi < part.lo) ++j;
    if (j == b.size() || !b[j].contains(part)) return false;
  }
  return true;
}

/// Closures of the bounded components of ambient \ s.
inline IntervalSet gaps_within(const IntervalSet& s, const Interval& ambient) {
  IntervalSet amb{ambient};
  if (!is_subset(s, amb)) throw std::invalid_argument("gaps_within: set is not inside the ambient interval");
  return subtract(amb, s);
}

struct RatioBounds {
  Rational lo;
  Rational hi;
  Rational ratio;
};

/// (min a_i/b_i, max a_i/b_i, sum a / sum b); the weighted-mean identity
/// forces lo <= ratio <= hi and the function checks that it does.
inline RatioBounds tail_ratio_bounds(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.empty() || a.size() != b.size())
    throw std::invalid_argument("tail_ratio_bounds: lists must be nonempty and of equal length");
  Rational sa, sb;
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_positive() || !b[i].is_positive())
      throw std::invalid_argument("tail_ratio_bounds: entries must be positive");
    Rational r = a[i] / b[i];
    if (!lo || r < *lo) lo = r;
    if (!hi || *hi < r) hi = r;
    sa += a[i];
    sb += b[i];
  }
  RatioBounds out{*lo, *hi, sa / sb};
  if (out.ratio < out.lo || out.hi < out.ratio) throw std::logic_error("tail_ratio_bounds: weighted mean outside range");
  return out;
}

}  // namespace cantorval
