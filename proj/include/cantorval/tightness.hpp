#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/point_set.hpp"
#include "cantorval/subsums.hpp"
#include "cantorval/term_stream.hpp"

namespace cantorval {

/// Maximal eps-tight blocks of a sorted point set. Block i covers the index
/// range [blocks[i].first, blocks[i].second] (inclusive).
struct TightDecomposition {
  Rational epsilon;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::vector<Rational> diameters;
};

inline TightDecomposition tight_decompose(const PointSet& points, const Rational& eps) {
  if (points.empty()) throw std::invalid_argument("tight_decompose: empty point set");
  if (eps.sign() < 0) throw std::invalid_argument("tight_decompose: eps must be >= 0");
  TightDecomposition out;
  out.epsilon = eps;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= points.size(); ++i) {
    if (i == points.size() || points[i] - points[i - 1] > eps) {
      out.blocks.emplace_back(start, i - 1);
      out.diameters.push_back(points[i - 1] - points[start]);
      start = i;
    }
  }
  return out;
}

/// Delta_eps: the largest diameter among maximal eps-tight blocks.
inline Rational delta(const PointSet& points, const Rational& eps) {
  auto d = tight_decompose(points, eps);
  Rational best;
  for (const auto& x : d.diameters)
    if (best < x) best = x;
  return best;
}

enum class TrendVerdict { IntervalEvidence, NullEvidence, Inconclusive };

inline std::string to_string(TrendVerdict v) {
  switch (v) {
    case TrendVerdict::IntervalEvidence: return "interval-evidence";
    case TrendVerdict::NullEvidence: return "null-evidence";
    case TrendVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

struct DeltaPoint {
  std::size_t n = 0;
  Rational delta;
};

/// Exact Delta_{r_n} F_n for n = 1..depth, with a heuristic verdict. The
/// verdict is evidence only: the interval criterion is a limit statement.
struct DeltaTrend {
  std::vector<DeltaPoint> values;
  TrendVerdict verdict = TrendVerdict::Inconclusive;
  std::optional<Rational> last_third_minimum;
};

inline DeltaTrend delta_trend(const TermStream& s, std::size_t depth, std::size_t cap = kDefaultCap) {
  if (depth == 0) throw std::invalid_argument("delta_trend: depth must be >= 1");
  SubsumBuilder builder(s.terms(depth), cap, "delta_trend");
  DeltaTrend out;
  for (std::size_t n = 1; n <= depth; ++n) {
    builder.step();
    out.values.push_back({n, delta(builder.points(), s.tail(n))});
  }
  const std::size_t from = depth - (depth + 2) / 3;  // last third, at least one value
  Rational lo = out.values[from].delta;
  for (std::size_t i = from; i < depth; ++i)
    if (out.values[i].delta < lo) lo = out.values[i].delta;
  out.last_third_minimum = lo;
  const Rational& last = out.values.back().delta;
  if (last.is_positive() && lo.is_positive())
    out.verdict = TrendVerdict::IntervalEvidence;
  else if (last.is_zero())
    out.verdict = TrendVerdict::NullEvidence;
  return out;
}

}  // namespace cantorval
