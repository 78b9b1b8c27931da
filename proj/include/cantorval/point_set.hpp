#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cantorval/rational.hpp"

namespace cantorval {

/// Sorted set of distinct rationals, optionally carrying a multiplicity per
/// value (the number of index subsets that realize it).
class PointSet {
 public:
  PointSet() = default;

  /// Values must already be strictly increasing; counts empty or parallel.
  PointSet(std::vector<Rational> values, std::vector<Integer> counts = {})
      : values_(std::move(values)), counts_(std::move(counts)) {
    for (std::size_t i = 1; i < values_.size(); ++i)
      if (!(values_[i - 1] < values_[i])) throw std::invalid_argument("PointSet: values must be strictly increasing");
    if (!counts_.empty() && counts_.size() != values_.size())
      throw std::invalid_argument("PointSet: counts must parallel values");
    for (const auto& c : counts_)
      if (c <= 0) throw std::invalid_argument("PointSet: multiplicities must be positive");
  }

  /// Sorts and deduplicates arbitrary input; multiplicities count repeats.
  static PointSet from_unsorted(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    std::vector<Rational> out;
    std::vector<Integer> counts;
    for (auto& v : values) {
      if (!out.empty() && out.back() == v) {
        counts.back() += 1;
      } else {
        out.push_back(std::move(v));
        counts.emplace_back(1);
      }
    }
    PointSet ps;
    ps.values_ = std::move(out);
    ps.counts_ = std::move(counts);
    return ps;
  }

  const std::vector<Rational>& values() const noexcept { return values_; }
  const std::vector<Integer>& counts() const noexcept { return counts_; }
  bool has_counts() const noexcept { return !counts_.empty() || values_.empty(); }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const Rational& min() const { return values_.front(); }
  const Rational& max() const { return values_.back(); }
  Rational diameter() const { return empty() ? Rational() : max() - min(); }

  /// Multiplicity of the i-th value; 1 when no counts are carried.
  Integer count(std::size_t i) const { return counts_.empty() ? Integer(1) : counts_[i]; }

  Integer total_count() const {
    if (counts_.empty()) return Integer(static_cast<unsigned long>(values_.size()));
    Integer t = 0;
    for (const auto& c : counts_) t += c;
    return t;
  }

  bool contains(const Rational& x) const { return std::binary_search(values_.begin(), values_.end(), x); }

  /// Multiplicity of x, or 0 if absent.
  Integer count_of(const Rational& x) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), x);
    if (it == values_.end() || *it != x) return 0;
    return count(static_cast<std::size_t>(it - values_.begin()));
  }

  bool is_subset_of(const PointSet& other) const {
    return std::includes(other.values_.begin(), other.values_.end(), values_.begin(), values_.end());
  }

  /// Equality of the underlying value sets, ignoring multiplicities.
  bool same_values(const PointSet& other) const { return values_ == other.values_; }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    if (a.values_ != b.values_) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.count(i) != b.count(i)) return false;
    return true;
  }

 private:
  std::vector<Rational> values_;
  std::vector<Integer> counts_;
};

/// { scale * v : v in points }, multiplicities kept.
inline PointSet scaled(const PointSet& p, const Rational& scale) {
  if (!scale.is_positive()) throw std::invalid_argument("scaled: scale must be positive");
  std::vector<Rational> vals;
  vals.reserve(p.size());
  for (const auto& v : p.values()) vals.push_back(v * scale);
  return PointSet(std::move(vals), p.counts());
}

}  // namespace cantorval
