#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/families.hpp"
#include "cantorval/interval_engine.hpp"
#include "cantorval/kakeya.hpp"
#include "cantorval/subsums.hpp"
#include "cantorval/term_stream.hpp"
#include "cantorval/tightness.hpp"

namespace cantorval {

enum class Verdict { Finite, MultiInterval, Cantor, Cantorval, Unknown };
enum class Tier { Proved, Certified, Heuristic };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Finite: return "Finite";
    case Verdict::MultiInterval: return "MultiInterval";
    case Verdict::Cantor: return "Cantor";
    case Verdict::Cantorval: return "Cantorval";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

inline std::string to_string(Tier t) {
  switch (t) {
    case Tier::Proved: return "Proved";
    case Tier::Certified: return "Certified";
    case Tier::Heuristic: return "Heuristic";
  }
  return "Heuristic";
}

/// Gaps of I_n at a concrete n.
struct GapWitness {
  std::size_t n = 0;
  IntervalSet gaps;
};

/// Every gap of F_n exceeds r_n at n = m * level of the multigeometric spec.
/// Then I_n is a disjoint union of bricks of length r_n, and the same holds
/// at every multiple of n (F_{a+b} = F_a + q^a F_b), so E has no interval.
struct NullWitness {
  std::size_t level = 0;
  std::size_t n = 0;
  Rational min_gap;
  Rational r;
};

struct ClassificationWitnesses {
  KakeyaPattern kakeya;
  std::optional<MultigeometricSpec> reduced_spec;  // periodic part read as a multigeometric series
  std::optional<GapWitness> gaps;
  std::optional<InteriorCertificate> certificate;
  std::optional<TightRunCertificate> tight_run;
  std::optional<NullWitness> null_level;
  std::optional<DeltaTrend> trend;
  std::vector<std::string> notes;
};

struct Classification {
  Verdict verdict = Verdict::Unknown;
  Tier tier = Tier::Heuristic;
  std::size_t horizon = 0;
  std::string rule;
  ClassificationWitnesses witnesses;
};

struct ClassifyOptions {
  std::size_t cap = kDefaultCap;
  std::size_t budget = 20;      // refinement rounds for the coinductive certificate
  std::size_t seed_depth = 3;   // groups
  std::size_t search_levels = 8;
};

namespace detail {

/// First n <= limit (within the size cap) whose iteration I_n has a gap.
inline std::optional<GapWitness> find_gap(const TermStream& s, std::size_t limit, std::size_t cap) {
  SubsumBuilder builder(s.terms(limit), cap, "classify.gaps");
  for (std::size_t n = 1; n <= limit; ++n) {
    try {
      builder.step();
    } catch (const CapacityError&) {
      return std::nullopt;
    }
    auto I = bricks_union(builder.points(), s.tail(n));
    if (I.size() > 1) return GapWitness{n, gaps_within(I, *I.hull())};
  }
  return std::nullopt;
}

inline std::optional<NullWitness> find_null_level(const MultigeometricSpec& spec, std::size_t levels,
                                                  std::size_t cap) {
  const TermStream s = mg_stream(spec);
  SubsumBuilder builder(s.terms(spec.m() * levels), cap, "classify.null");
  for (std::size_t j = 1; j <= levels; ++j) {
    try {
      builder.advance_to(spec.m() * j);
    } catch (const CapacityError&) {
      return std::nullopt;
    }
    PointSet F = builder.points();
    Rational r = s.tail(spec.m() * j);
    Rational min_gap = F[1] - F[0];
    for (std::size_t i = 2; i < F.size(); ++i) min_gap = min(min_gap, F[i] - F[i - 1]);
    if (r < min_gap) return NullWitness{j, spec.m() * j, min_gap, r};
  }
  return std::nullopt;
}

inline std::size_t gap_search_limit(const TermStream& s) {
  return std::min<std::size_t>(s.prefix_length() + 4 * s.period() + 2, 40);
}

}  // namespace detail

/// Decision procedure, strongest tier first:
///  - K finite: multi-interval; K^c finite: Cantor (exact periodic pattern);
///  - on the multigeometric reading of the periodic part: a null level gives
///    Cantor, an interval witness with K infinite gives Cantorval;
///  - otherwise the Delta trend at `horizon` decides heuristically.
/// `exact_spec` marks a stream that is itself multigeometric.
inline Classification classify(const TermStream& s, std::size_t horizon, const ClassifyOptions& opt = {},
                               const std::optional<MultigeometricSpec>& exact_spec = std::nullopt) {
  if (horizon == 0) throw std::invalid_argument("classify: horizon must be >= 1");
  Classification c;
  c.horizon = horizon;
  c.witnesses.kakeya = kakeya_pattern(s);
  const auto& pat = c.witnesses.kakeya;
  if (pat.K_finite()) {
    c.verdict = Verdict::MultiInterval;
    c.tier = Tier::Proved;
    c.rule = "kakeya-indices-finite";
    return c;
  }
  if (pat.Kc_finite()) {
    c.verdict = Verdict::Cantor;
    c.tier = Tier::Proved;
    c.rule = "reversed-indices-finite";
    return c;
  }

  MultigeometricSpec mg = exact_spec ? *exact_spec : periodic_part_as_multigeometric(s);
  if (!exact_spec) {
    c.witnesses.reduced_spec = mg;
    c.witnesses.notes.push_back("witnesses computed on the periodic part " + mg.label() +
                                ", which has the same topological type");
  }

  if (auto nw = detail::find_null_level(mg, opt.search_levels, opt.cap)) {
    c.witnesses.null_level = *nw;
    c.verdict = Verdict::Cantor;
    c.tier = Tier::Certified;
    c.rule = "null-level";
    return c;
  }

  bool interval = false;
  auto tr = find_tight_run(mg, opt.search_levels, opt.cap);
  c.witnesses.tight_run = tr;
  interval = tr.found;
  if (!interval) {
    try {
      auto cert = certify_interior(mg, opt.seed_depth, opt.budget);
      interval = cert.verified;
      c.witnesses.certificate = std::move(cert);
    } catch (const CapacityError& e) {
      c.witnesses.notes.push_back(std::string("interior certificate skipped: ") + e.what());
    }
  }
  if (interval) {
    if (auto gw = detail::find_gap(s, detail::gap_search_limit(s), opt.cap)) {
      c.witnesses.gaps = std::move(*gw);
      c.verdict = Verdict::Cantorval;
      c.tier = Tier::Certified;
      c.rule = "interval-witness-and-infinite-kakeya";
      return c;
    }
    c.witnesses.notes.push_back("interval witness found but no gap within the search limit");
  }

  try {
    c.witnesses.trend = delta_trend(s, horizon, opt.cap);
  } catch (const CapacityError& e) {
    c.witnesses.notes.push_back(std::string("delta trend unavailable: ") + e.what());
    c.verdict = Verdict::Unknown;
    c.rule = "no-evidence";
    return c;
  }
  switch (c.witnesses.trend->verdict) {
    case TrendVerdict::IntervalEvidence:
      c.verdict = Verdict::Cantorval;
      c.rule = "delta-trend-positive";
      break;
    case TrendVerdict::NullEvidence:
      c.verdict = Verdict::Cantor;
      c.rule = "delta-trend-zero";
      break;
    case TrendVerdict::Inconclusive:
      c.verdict = Verdict::Unknown;
      c.rule = "delta-trend-inconclusive";
      break;
  }
  c.tier = Tier::Heuristic;
  return c;
}

inline Classification classify(const FamilySpec& spec, std::size_t horizon, const ClassifyOptions& opt = {}) {
  if (horizon == 0) throw std::invalid_argument("classify: horizon must be >= 1");
  const TermStream s = make_stream(spec);
  if (const auto* mg = std::get_if<MultigeometricSpec>(&spec)) return classify(s, horizon, opt, *mg);

  std::optional<std::string> rule;
  std::string note;
  if (const auto* gf = std::get_if<GFSpec>(&spec)) {
    auto rep = gf_validate(*gf);
    if (rep.gf1_holds && rep.gf2_holds) rule = "gf-conditions";
    note = std::string("gf conditions: first=") + (rep.gf1_holds ? "pass" : "fail") +
           " second=" + (rep.gf2_holds ? "pass" : "fail");
  } else if (std::holds_alternative<MMSpec>(spec)) {
    rule = "mm-family";
    note = "mm family: every admissible parameter sequence";
  } else if (const auto* ky = std::get_if<KyivSpec>(&spec)) {
    auto rep = kyiv_validate(*ky);
    if (rep.all_pass()) rule = "kyiv-assumptions";
    note = std::string("kyiv assumptions: ") + (rep.all_pass() ? "pass" : "fail");
  }
  if (!rule) {
    auto c = classify(s, horizon, opt);
    if (!note.empty()) c.witnesses.notes.insert(c.witnesses.notes.begin(), note);
    return c;
  }
  Classification c;
  c.horizon = horizon;
  c.verdict = Verdict::Cantorval;
  c.tier = Tier::Proved;
  c.rule = *rule;
  c.witnesses.kakeya = kakeya_pattern(s);
  c.witnesses.notes.push_back(note);
  if (auto gw = detail::find_gap(s, detail::gap_search_limit(s), opt.cap)) c.witnesses.gaps = std::move(*gw);
  return c;
}

/// For series with finitely many n where x_n < r_n: multi-interval when
/// x_n = r_n eventually, Cantor otherwise. Refuses to run when neither the
/// caller asserts the condition nor the exact pattern proves it, and when
/// the pattern refutes an assertion.
inline Classification reversed_kakeya_dichotomy(const TermStream& s, std::size_t horizon, bool asserted_finite) {
  Classification c;
  c.horizon = horizon;
  c.witnesses.kakeya = kakeya_pattern(s);
  const auto& pat = c.witnesses.kakeya;
  if (!pat.strict_reversed_finite()) {
    if (asserted_finite)
      throw std::invalid_argument("reversed_kakeya_dichotomy: assertion contradicts the exact pattern");
    throw std::invalid_argument("reversed_kakeya_dichotomy: x_n < r_n infinitely often; dichotomy does not apply");
  }
  c.tier = Tier::Proved;
  if (pat.eventually_equal()) {
    c.verdict = Verdict::MultiInterval;
    c.rule = "eventually-equal";
  } else {
    c.verdict = Verdict::Cantor;
    c.rule = "strict-kakeya-infinitely-often";
  }
  return c;
}

}  // namespace cantorval
