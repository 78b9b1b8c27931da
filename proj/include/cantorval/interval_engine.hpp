#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/families.hpp"
#include "cantorval/interval_set.hpp"
#include "cantorval/point_set.hpp"
#include "cantorval/subsums.hpp"
#include "cantorval/term_stream.hpp"

namespace cantorval {

/// Union of bricks [f, f + r] over sorted points f. Linear time.
inline IntervalSet bricks_union(const PointSet& points, const Rational& r) {
  std::vector<Interval> parts;
  parts.reserve(points.size());
  for (const auto& f : points.values()) parts.emplace_back(f, f + r);
  return IntervalSet::from_sorted(std::move(parts));
}

struct IterationReport {
  std::size_t n = 0;
  IntervalSet iteration;
  std::size_t brick_count = 0;
  Rational measure;
  IntervalSet gaps;  // closures of the gaps between consecutive parts
  std::size_t gap_count = 0;
  Interval longest_component;
};

namespace detail {
inline IterationReport make_iteration_report(std::size_t n, const PointSet& F, const Rational& r) {
  IterationReport rep;
  rep.n = n;
  rep.iteration = bricks_union(F, r);
  rep.brick_count = F.size();
  rep.measure = rep.iteration.measure();
  rep.gaps = gaps_within(rep.iteration, *rep.iteration.hull());
  rep.gap_count = rep.gaps.size();
  rep.longest_component = *rep.iteration.longest_component();
  return rep;
}
}  // namespace detail

/// I_n = union of [f, f + r_n] over f in F_n. I_0 = [0, r_0].
inline IterationReport iterate(const TermStream& s, std::size_t n, std::size_t cap = kDefaultCap) {
  return detail::make_iteration_report(n, finite_subsums(s, n, cap), s.tail(n));
}

/// Reports for n = 0..depth, sharing one incremental subsum enumeration.
inline std::vector<IterationReport> iterations(const TermStream& s, std::size_t depth,
                                               std::size_t cap = kDefaultCap) {
  SubsumBuilder builder(s.terms(depth), cap, "iterate");
  std::vector<IterationReport> out;
  out.push_back(detail::make_iteration_report(0, builder.points(), s.tail(0)));
  for (std::size_t n = 1; n <= depth; ++n) {
    builder.step();
    out.push_back(detail::make_iteration_report(n, builder.points(), s.tail(n)));
  }
  return out;
}

/// Phi(S) = union over sigma in K of q * (sigma + S). Phi(I_{mn}) = I_{m(n+1)}
/// and E is its unique nonempty compact fixed point.
inline IntervalSet phi(const MultigeometricSpec& spec, const IntervalSet& s) {
  spec.validate();
  const Rational r0 = spec.r0();
  if (!is_subset(s, IntervalSet{Interval(Rational(0), r0)}))
    throw std::invalid_argument("phi: set is not inside [0, r_0]");
  if (s.empty()) return {};
  const PointSet K = mg_block(spec);
  std::vector<Interval> parts;
  parts.reserve(K.size() * s.size());
  for (const auto& sigma : K.values()) {
    Rational shift = spec.q * sigma;
    for (const auto& p : s) parts.emplace_back(spec.q * p.lo + shift, spec.q * p.hi + shift);
  }
  return IntervalSet::normalize(std::move(parts));
}

// ---------------------------------------------------------------------------
// Coinductive interior certificates
// ---------------------------------------------------------------------------

struct CertifyOptions {
  std::size_t part_limit = 20'000;
  std::optional<Rational> min_part_length;        // prune parts shorter than this each round
  std::optional<unsigned long> snap_denominator;  // shrink endpoints to denominators <= this
  std::size_t cap = kDefaultCap;
};

/// S with S subset of Phi(S) (checked exactly) proves S subset of E: Phi is
/// monotone and Phi^j([0, r_0]) decreases to E.
struct InteriorCertificate {
  MultigeometricSpec spec;
  IntervalSet s;
  bool verified = false;
  Rational interior_measure;
  std::size_t seed_depth = 0;
  std::size_t rounds = 0;
  std::string stop_reason;
  IntervalSet uncovered;  // closure of S \ Phi(S) when not verified
};

inline IntervalSet snap_inward(const IntervalSet& s, unsigned long max_den) {
  std::vector<Interval> parts;
  for (const auto& p : s) {
    Rational lo = ceil_with_denominator(p.lo, max_den);
    Rational hi = floor_with_denominator(p.hi, max_den);
    if (lo < hi) parts.emplace_back(std::move(lo), std::move(hi));
  }
  return IntervalSet::from_sorted(std::move(parts));
}

inline IntervalSet prune_short(const IntervalSet& s, const Rational& min_len) {
  std::vector<Interval> parts;
  for (const auto& p : s)
    if (!(p.length() < min_len)) parts.push_back(p);
  return IntervalSet::from_sorted(std::move(parts));
}

/// Seeds S = I_{mn} and refines S <- S n Phi(S) for up to `budget` rounds,
/// then rechecks S subset of Phi(S) from scratch. Sound, not complete.
inline InteriorCertificate certify_interior(const MultigeometricSpec& spec, std::size_t seed_depth,
                                            std::size_t budget, const CertifyOptions& opt = {}) {
  if (seed_depth == 0) throw std::invalid_argument("certify_interior: seed depth must be >= 1");
  if (budget == 0) throw std::invalid_argument("certify_interior: budget must be >= 1");
  InteriorCertificate cert;
  cert.spec = spec;
  cert.seed_depth = seed_depth;
  const TermStream stream = mg_stream(spec);
  IntervalSet S = iterate(stream, spec.m() * seed_depth, opt.cap).iteration.interior();
  if (opt.min_part_length) S = prune_short(S, *opt.min_part_length);
  cert.stop_reason = "budget";
  for (std::size_t round = 1; round <= budget; ++round) {
    if (S.empty()) {
      cert.stop_reason = "empty";
      break;
    }
    IntervalSet T = intersect(S, phi(spec, S)).interior();
    if (opt.min_part_length) T = prune_short(T, *opt.min_part_length);
    cert.rounds = round;
    if (T == S) {
      cert.stop_reason = "fixed-point";
      break;
    }
    if (T.size() > opt.part_limit) {
      cert.stop_reason = "part-limit";
      break;
    }
    S = std::move(T);
  }
  if (opt.snap_denominator) S = snap_inward(S, *opt.snap_denominator);
  cert.s = S;
  if (S.empty()) {
    cert.verified = false;
    if (cert.stop_reason != "empty") cert.stop_reason += "; empty after refinement";
    return cert;
  }
  IntervalSet image = phi(spec, S);
  cert.verified = is_subset(S, image);
  if (cert.verified) {
    cert.interior_measure = S.measure();
  } else {
    cert.uncovered = subtract(S, image);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Tight-run certificates (q = 1/p)
// ---------------------------------------------------------------------------

/// Interval witness for a multigeometric spec with q = 1/p.
///
/// With D the common denominator of the coefficients and K' = D*K, the
/// scaled sets G_j = D p^j F_{mj} satisfy G_{j+1} = K' + p G_j. If K' meets
/// every residue class mod p, a run of consecutive integers [x, x+L] in G_j
/// with L >= T1 yields the run
///   [p x + max_r min K'_r - (p-1), p(x+L) + min_r max K'_r + (p-1)]
/// in G_{j+1}, of length pL + growth, where growth = min max - max min +
/// 2(p-1) and T1 = max over classes of ceil(gap/p) - 1. If (p-1)L + growth > 0
/// the runs grow forever, their real diameters tend to
///   (L + growth/(p-1)) / (D p^j) > 0,
/// and their spacing tends to 0. Every point of F_n lies within r_n of E, so
/// a limit of these hulls is an interval inside E of at least that length.
struct TightRunCertificate {
  bool found = false;
  std::string reason;
  long base = 0;  // p
  Integer scale;  // D
  std::size_t level = 0;
  long run_start = 0;
  long run_length = 0;  // L
  long growth = 0;
  long threshold = 0;   // T1
  Rational interval_length;
};

inline TightRunCertificate find_tight_run(const MultigeometricSpec& spec, std::size_t max_level = 8,
                                          std::size_t cap = kDefaultCap) {
  spec.validate();
  TightRunCertificate cert;
  if (spec.q.numerator() != 1 || !spec.q.denominator().fits_slong_p()) {
    cert.reason = "ratio is not of the form 1/p";
    return cert;
  }
  const long p = spec.q.denominator().get_si();
  cert.base = p;
  Integer D = 1;
  for (const auto& c : spec.k) D = lcm(D, c.denominator());
  cert.scale = D;
  const PointSet K = mg_block(spec, cap);
  std::vector<long> Kp;
  for (const auto& v : K.values()) {
    Integer n = v.numerator() * (D / v.denominator());
    if (!n.fits_slong_p()) {
      cert.reason = "scaled block too large";
      return cert;
    }
    Kp.push_back(n.get_si());
  }
  if (static_cast<std::size_t>(p) > Kp.size()) {
    cert.reason = "block misses a residue class mod p";
    return cert;
  }
  std::vector<long> cls_min(static_cast<std::size_t>(p), -1), cls_max(static_cast<std::size_t>(p), -1);
  long T1 = 0;
  for (long v : Kp) {  // ascending
    auto r = static_cast<std::size_t>(v % p);
    if (cls_max[r] >= 0) T1 = std::max(T1, (v - cls_max[r] + p - 1) / p - 1);
    if (cls_min[r] < 0) cls_min[r] = v;
    cls_max[r] = v;
  }
  long max_min = 0, min_max = std::numeric_limits<long>::max();
  for (std::size_t r = 0; r < cls_min.size(); ++r) {
    if (cls_min[r] < 0) {
      cert.reason = "block misses a residue class mod p";
      return cert;
    }
    max_min = std::max(max_min, cls_min[r]);
    min_max = std::min(min_max, cls_max[r]);
  }
  const long growth = min_max - max_min + 2 * (p - 1);
  cert.growth = growth;
  cert.threshold = T1;

  std::vector<long> G{0};
  Integer unit = D;  // real unit of G_j is 1/unit
  for (std::size_t j = 0; j <= max_level; ++j) {
    long best_start = G.front(), best_len = 0, start = G.front();
    for (std::size_t i = 1; i <= G.size(); ++i) {
      if (i == G.size() || G[i] != G[i - 1] + 1) {
        long len = G[i - 1] - start;
        if (len > best_len) best_len = len, best_start = start;
        if (i < G.size()) start = G[i];
      }
    }
    if (best_len >= T1 && (p - 1) * best_len + growth > 0) {
      cert.found = true;
      cert.level = j;
      cert.run_start = best_start;
      cert.run_length = best_len;
      cert.interval_length =
          (Rational(best_len) + Rational(growth, p - 1)) / Rational(unit);
      cert.reason = "run grows at every level";
      return cert;
    }
    if (j == max_level) break;
    if (G.size() * Kp.size() > cap) throw CapacityError("find_tight_run", cap);
    const long hi = G.back();
    if (hi > (std::numeric_limits<long>::max() - Kp.back()) / p) {
      cert.reason = "scaled values overflow";
      return cert;
    }
    std::vector<long> next;
    next.reserve(G.size() * Kp.size());
    for (long g : G)
      for (long s : Kp) next.push_back(p * g + s);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    G = std::move(next);
    unit *= p;
  }
  cert.reason = "no qualifying run up to level " + std::to_string(max_level);
  return cert;
}

// ---------------------------------------------------------------------------
// Measure bounds and component trends
// ---------------------------------------------------------------------------

struct MeasureBounds {
  Rational upper_lambda_E;  // lambda(I_depth)
  Rational lower_interior;  // certified interior measure
  Rational boundary_gap;    // upper - lower >= lambda(Fr E)
  std::string lower_source;
};

/// Upper bound lambda(I_depth); lower bound from the coinductive certificate
/// (seeded at `depth` groups, `budget` rounds) or a tight-run interval,
/// whichever is larger.
inline MeasureBounds measure_bounds(const MultigeometricSpec& spec, std::size_t depth, std::size_t budget,
                                    const CertifyOptions& opt = {}) {
  if (depth == 0) throw std::invalid_argument("measure_bounds: depth must be >= 1");
  MeasureBounds out;
  out.upper_lambda_E = iterate(mg_stream(spec), depth, opt.cap).measure;
  out.lower_source = "none";
  auto seed = std::max<std::size_t>(1, depth / spec.m());
  auto cert = certify_interior(spec, seed, budget, opt);
  if (cert.verified) {
    out.lower_interior = cert.interior_measure;
    out.lower_source = "coinductive";
  }
  auto run = find_tight_run(spec, 8, opt.cap);
  if (run.found && out.lower_interior < run.interval_length) {
    out.lower_interior = run.interval_length;
    out.lower_source = "tight-run";
  }
  out.boundary_gap = out.upper_lambda_E - out.lower_interior;
  return out;
}

/// Upper bound only: no exact self-similar operator for general streams.
inline MeasureBounds measure_bounds(const TermStream& s, std::size_t depth, std::size_t cap = kDefaultCap) {
  if (depth == 0) throw std::invalid_argument("measure_bounds: depth must be >= 1");
  MeasureBounds out;
  out.upper_lambda_E = iterate(s, depth, cap).measure;
  out.boundary_gap = out.upper_lambda_E;
  out.lower_source = "none";
  return out;
}

struct ComponentPoint {
  std::size_t n = 0;
  Rational longest;  // longest component of the inner iteration of the n-th suffix
  Rational r;        // r_n
  Rational ratio;
};

/// Longest component of iterate(suffix(n), inner_depth), an upper bound on
/// the longest component of E_n, against r_n.
inline std::vector<ComponentPoint> longest_component_trend(const TermStream& s, const std::vector<std::size_t>& depths,
                                                           std::size_t inner_depth, std::size_t cap = kDefaultCap) {
  std::vector<ComponentPoint> out;
  for (auto n : depths) {
    auto rep = iterate(s.suffix(n), inner_depth, cap);
    ComponentPoint c;
    c.n = n;
    c.longest = rep.longest_component.length();
    c.r = s.tail(n);
    c.ratio = c.longest / c.r;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cantorval
