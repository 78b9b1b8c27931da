#pragma once

// JSON encodings. Rationals travel as "p/q" strings; integers are also
// accepted on input. Floating-point numbers are rejected so no value is
// ever rounded.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "cantorval/errors.hpp"
#include "cantorval/families.hpp"
#include "cantorval/interval_set.hpp"
#include "cantorval/point_set.hpp"
#include "cantorval/rational.hpp"
#include "cantorval/sequences.hpp"

namespace cantorval {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
      throw SpecError(where + ": not a rational: \"" + j.get<std::string>() + "\"");
    }
  }
  throw SpecError(where + ": expected an integer or a \"p/q\" string");
}

inline json to_json(const Interval& iv) { return json::array({iv.lo.str(), iv.hi.str()}); }

inline json to_json(const IntervalSet& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(to_json(p));
  return out;
}

inline IntervalSet interval_set_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw SpecError(where + ": expected an array of [lo, hi] pairs");
  std::vector<Interval> parts;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw SpecError(where + ": each part must be [lo, hi]");
    parts.emplace_back(rational_from_json(p[0], where), rational_from_json(p[1], where));
  }
  return IntervalSet::normalize(std::move(parts));
}

inline json to_json(const PointSet& p) {
  json vals = json::array();
  for (const auto& v : p.values()) vals.push_back(v.str());
  json out{{"values", vals}};
  if (p.has_counts()) {
    json counts = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) counts.push_back(p.count(i).get_str());
    out["counts"] = counts;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parameter sequences
// ---------------------------------------------------------------------------

inline long integer_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SpecError(where + ": expected an integer");
  return j.get<long>();
}

/// Accepts {"pre":[...],"period":[...]}, a bare array (purely periodic) or
/// a scalar (constant).
inline EventuallyPeriodic<long> periodic_from_json(const json& j, const std::string& where) {
  EventuallyPeriodic<long> out;
  auto list = [&](const json& a, std::vector<long>& dst, const std::string& w) {
    if (!a.is_array()) throw SpecError(w + ": expected an array");
    for (const auto& x : a) dst.push_back(integer_from_json(x, w));
  };
  if (j.is_number_integer()) {
    out.period.push_back(j.get<long>());
  } else if (j.is_array()) {
    list(j, out.period, where);
  } else if (j.is_object()) {
    if (j.contains("pre")) list(j.at("pre"), out.pre, where + ".pre");
    if (!j.contains("period")) throw SpecError(where + ": missing \"period\"");
    list(j.at("period"), out.period, where + ".period");
  } else {
    throw SpecError(where + ": expected an integer, an array or {pre, period}");
  }
  if (out.period.empty()) throw SpecError(where + ": periodic part must be nonempty");
  return out;
}

inline json to_json(const EventuallyPeriodic<long>& seq) {
  return json{{"pre", seq.pre}, {"period", seq.period}};
}

/// Accepts {"pre":[...],"period":[...],"ratio":"p/q"} or the shorthand
/// "b^-n" for the sequence b^{-n}, n >= 1.
inline GeometricSequence geometric_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto pos = s.find("^-n");
    if (pos == std::string::npos || pos + 3 != s.size())
      throw SpecError(where + ": expected \"b^-n\" or {pre, period, ratio}");
    Rational base;
    try {
      base = Rational::parse(s.substr(0, pos));
    } catch (const std::exception&) {
      throw SpecError(where + ": bad base in \"" + s + "\"");
    }
    if (!(Rational(1) < base)) throw SpecError(where + ": base must exceed 1");
    Rational inv = Rational(1) / base;
    return GeometricSequence::power(Rational(1), inv);
  }
  if (!j.is_object()) throw SpecError(where + ": expected \"b^-n\" or {pre, period, ratio}");
  GeometricSequence g;
  auto list = [&](const json& a, std::vector<Rational>& dst, const std::string& w) {
    if (!a.is_array()) throw SpecError(w + ": expected an array");
    for (const auto& x : a) dst.push_back(rational_from_json(x, w));
  };
  if (j.contains("pre")) list(j.at("pre"), g.pre, where + ".pre");
  if (!j.contains("period") || !j.contains("ratio")) throw SpecError(where + ": needs \"period\" and \"ratio\"");
  list(j.at("period"), g.period, where + ".period");
  g.ratio = rational_from_json(j.at("ratio"), where + ".ratio");
  if (g.period.empty()) throw SpecError(where + ": periodic part must be nonempty");
  return g;
}

inline json to_json(const GeometricSequence& g) {
  json pre = json::array(), period = json::array();
  for (const auto& x : g.pre) pre.push_back(x.str());
  for (const auto& x : g.period) period.push_back(x.str());
  return json{{"pre", pre}, {"period", period}, {"ratio", g.ratio.str()}};
}

// ---------------------------------------------------------------------------
// Family specs
// ---------------------------------------------------------------------------

inline std::vector<Rational> rational_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw SpecError(where + ": expected an array");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x, where));
  return out;
}

inline json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

inline const json& require(const json& j, const char* key, const std::string& type) {
  if (!j.contains(key)) throw SpecError(type + ": missing field \"" + key + "\"");
  return j.at(key);
}

/// Parses and structurally validates a family spec.
inline FamilySpec spec_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("spec: expected a JSON object");
  if (!j.contains("type") || !j.at("type").is_string()) throw SpecError("spec: missing string field \"type\"");
  const auto type = j.at("type").get<std::string>();
  if (type == "multigeometric") {
    MultigeometricSpec s{rational_list(require(j, "k", type), "multigeometric.k"),
                         rational_from_json(require(j, "q", type), "multigeometric.q")};
    s.validate();
    return s;
  }
  if (type == "gf") {
    GFSpec s{periodic_from_json(require(j, "m", type), "gf.m"), periodic_from_json(require(j, "k", type), "gf.k"),
             geometric_from_json(require(j, "q", type), "gf.q")};
    s.validate_structure();
    return s;
  }
  if (type == "mm") {
    MMSpec s{periodic_from_json(require(j, "n", type), "mm.n")};
    s.validate();
    return s;
  }
  if (type == "kyiv") {
    KyivSpec s{periodic_from_json(require(j, "m", type), "kyiv.m"),
               periodic_from_json(require(j, "s", type), "kyiv.s")};
    s.validate_structure();
    return s;
  }
  if (type == "repeated") {
    RepeatedTermSpec s{geometric_from_json(require(j, "y", type), "repeated.y"),
                       periodic_from_json(require(j, "K", type), "repeated.K")};
    s.validate();
    return s;
  }
  if (type == "explicit") {
    ExplicitSpec s{j.contains("prefix") ? rational_list(j.at("prefix"), "explicit.prefix") : std::vector<Rational>{},
                   rational_list(require(j, "block", type), "explicit.block"),
                   rational_from_json(require(j, "ratio", type), "explicit.ratio")};
    explicit_stream(s);  // validates
    return s;
  }
  throw SpecError("spec: unknown type \"" + type + "\"");
}

inline json to_json(const FamilySpec& spec) {
  struct V {
    json operator()(const MultigeometricSpec& s) const {
      return json{{"type", "multigeometric"}, {"k", to_json(s.k)}, {"q", s.q.str()}};
    }
    json operator()(const GFSpec& s) const {
      return json{{"type", "gf"}, {"m", to_json(s.m)}, {"k", to_json(s.k)}, {"q", to_json(s.q)}};
    }
    json operator()(const MMSpec& s) const { return json{{"type", "mm"}, {"n", to_json(s.n)}}; }
    json operator()(const KyivSpec& s) const {
      return json{{"type", "kyiv"}, {"m", to_json(s.m)}, {"s", to_json(s.s)}};
    }
    json operator()(const RepeatedTermSpec& s) const {
      return json{{"type", "repeated"}, {"y", to_json(s.y)}, {"K", to_json(s.K)}};
    }
    json operator()(const ExplicitSpec& s) const {
      return json{{"type", "explicit"}, {"prefix", to_json(s.prefix)}, {"block", to_json(s.block)},
                  {"ratio", s.ratio.str()}};
    }
  };
  return std::visit(V{}, spec);
}

inline FamilySpec spec_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("spec: invalid JSON: ") + e.what());
  }
  return spec_from_json(j);
}

}  // namespace cantorval
