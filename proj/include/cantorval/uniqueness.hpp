#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/families.hpp"
#include "cantorval/interval_set.hpp"
#include "cantorval/point_set.hpp"
#include "cantorval/subsums.hpp"
#include "cantorval/term_stream.hpp"

namespace cantorval {

/// A value of F_k reached by at least two distinct index sets.
struct Collision {
  Rational value;
  Integer multiplicity;
  std::vector<std::size_t> first;   // sorted 1-based indices
  std::vector<std::size_t> second;
};

struct RepetitionReport {
  std::size_t k = 0;
  std::vector<Collision> collisions;
  IntervalSet sk_outer;
};

namespace detail {
inline std::vector<std::size_t> mask_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (mask >> i & 1U) out.push_back(i + 1);
  return out;
}
}  // namespace detail

/// Values of F_k with multiplicity >= 2, each with two witness subsets.
/// Every value is a certified point of U^c. Witness masks limit k to 64.
inline std::vector<Collision> collisions(const TermStream& s, std::size_t k, std::size_t cap = kDefaultCap) {
  if (k == 0) return {};
  auto terms = s.terms(k);
  auto table = subsums_with_witnesses(terms, cap);
  std::vector<Collision> out;
  for (std::size_t i = 0; i < table.points.size(); ++i) {
    if (table.points.count(i) < 2) continue;
    out.push_back({table.points[i], table.points.count(i), detail::mask_indices(table.first[i]),
                   detail::mask_indices(*table.second[i])});
  }
  return out;
}

/// Outer approximation of S_k: union over distinct index sets A != B of
/// [f_A, f_A + r_k] n [f_B, f_B + r_k]. Values with multiplicity >= 2 give
/// their whole brick; for distinct values only consecutive overlaps matter,
/// since [f_i, f_i + r] n [f_j, f_j + r] lies in [f_j, f_{j-1} + r] for i < j.
inline IntervalSet sk_outer(const TermStream& s, std::size_t k, std::size_t cap = kDefaultCap) {
  if (k == 0) throw std::invalid_argument("sk_outer: k must be >= 1");
  PointSet F = finite_subsums(s, k, cap);
  const Rational r = s.tail(k);
  std::vector<Interval> parts;
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (i > 0 && F[i] - F[i - 1] <= r) parts.emplace_back(F[i], F[i - 1] + r);
    if (F.count(i) >= 2) parts.emplace_back(F[i], F[i] + r);
  }
  return IntervalSet::normalize(std::move(parts));
}

inline RepetitionReport repetition_report(const TermStream& s, std::size_t k, std::size_t cap = kDefaultCap) {
  RepetitionReport rep;
  rep.k = k;
  rep.collisions = collisions(s, k, cap);
  if (k > 0) rep.sk_outer = sk_outer(s, k, cap);
  return rep;
}

struct SemifastResult {
  bool semifast = false;
  std::optional<std::size_t> first_violation;
};

/// y_k > sum_{i>k} K_i y_i for every k. Both sides scale by the period ratio
/// past the transient, so indices 1..P0+L decide all k.
inline SemifastResult semifast_check(const RepeatedTermSpec& spec) {
  spec.validate();
  SemifastResult out;
  const std::size_t last = spec.transient() + spec.joint_period();
  for (std::size_t k = 1; k <= last; ++k) {
    if (!(spec.tail(k) < spec.y.at(k))) {
      out.first_violation = k;
      return out;
    }
  }
  out.semifast = true;
  return out;
}

/// True iff the sums sum n_i y_i over n_i in {0..K_i}, i <= depth, are
/// pairwise more than r_depth apart.
inline bool representation_uniqueness_oracle(const RepeatedTermSpec& spec, std::size_t depth,
                                             std::size_t cap = kDefaultCap) {
  spec.validate();
  if (depth == 0) return true;
  std::vector<Rational> sums{Rational(0)};
  for (std::size_t i = 1; i <= depth; ++i) {
    const long Ki = spec.K.at(i);
    if (sums.size() * static_cast<std::size_t>(Ki + 1) > cap)
      throw CapacityError("representation_uniqueness_oracle", cap);
    std::vector<Rational> next;
    next.reserve(sums.size() * static_cast<std::size_t>(Ki + 1));
    const Rational y = spec.y.at(i);
    for (const auto& v : sums)
      for (long n = 0; n <= Ki; ++n) next.push_back(v + Rational(n) * y);
    sums = std::move(next);
  }
  std::sort(sums.begin(), sums.end());
  const Rational r = spec.tail(depth);
  for (std::size_t i = 1; i < sums.size(); ++i)
    if (!(r < sums[i] - sums[i - 1])) return false;
  return true;
}

/// r_k < x_k certifies that r_k has a unique representation.
inline bool tail_uniqueness_point(const TermStream& s, std::size_t k) {
  if (k == 0) throw std::invalid_argument("tail_uniqueness_point: k must be >= 1");
  return s.tail(k) < s.term(k);
}

struct DensityPoint {
  std::size_t k = 0;
  bool nonempty = false;  // true: certified U^c point inside E_k
};

/// For each k: does the k-th tail series have a collision within its first
/// `inner_depth` terms? True values are certificates; false means none found.
inline std::vector<DensityPoint> u_density_evidence(const TermStream& s, const std::vector<std::size_t>& depths,
                                                    std::size_t inner_depth, std::size_t horizon,
                                                    std::size_t cap = kDefaultCap) {
  std::vector<DensityPoint> out;
  for (auto k : depths) {
    if (k > horizon)
      throw std::out_of_range("u_density_evidence: k = " + std::to_string(k) + " beyond horizon " +
                              std::to_string(horizon));
    out.push_back({k, !collisions(s.suffix(k), inner_depth, cap).empty()});
  }
  return out;
}

}  // namespace cantorval
