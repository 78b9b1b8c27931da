#pragma once

// Composite validation / analysis documents shared by the CLI and tests.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cantorval/classify.hpp"
#include "cantorval/families.hpp"
#include "cantorval/interval_engine.hpp"
#include "cantorval/json_io.hpp"
#include "cantorval/tightness.hpp"
#include "cantorval/uniqueness.hpp"

namespace cantorval {

inline constexpr const char* kValidationSchema = "cantorval.validation/1";
inline constexpr const char* kAnalysisSchema = "cantorval.analysis/1";
inline constexpr std::size_t kMaxListedParts = 256;

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

namespace detail {
inline json condition(const std::string& name, bool pass, json detail) {
  return json{{"name", name}, {"pass", pass}, {"detail", std::move(detail)}};
}

inline json check_json(const ConditionCheck& c) {
  return json{{"n", c.n}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"holds", c.holds}};
}
}  // namespace detail

/// Per-condition report; "ok" is true iff every condition passes.
inline json validation_report(const FamilySpec& spec) {
  json conds = json::array();
  json extra = json::object();
  if (const auto* gf = std::get_if<GFSpec>(&spec)) {
    auto rep = gf_validate(*gf);
    conds.push_back(detail::condition("structure", true, "m_n >= 2, k_n > m_n, q_n > 0"));
    auto first = [&](const std::vector<ConditionCheck>& checks, const std::optional<std::size_t>& idx) {
      if (!idx) return json(nullptr);
      return detail::check_json(checks[*idx - 1]);
    };
    conds.push_back(detail::condition("gf1", rep.gf1_holds,
                                      json{{"inequality", "q_n <= (s_{n+1} - m_{n+1} + 1) q_{n+1}"},
                                           {"first_failure", first(rep.gf1, rep.gf1_first_failure)}}));
    conds.push_back(detail::condition("gf2", rep.gf2_holds,
                                      json{{"inequality", "m_n q_n > sum_{i>n} (s_i + m_i) q_i"},
                                           {"first_failure", first(rep.gf2, rep.gf2_first_failure)}}));
    extra["s"] = rep.s;
    json c1 = json::array(), c2 = json::array();
    for (const auto& c : rep.gf1) c1.push_back(detail::check_json(c));
    for (const auto& c : rep.gf2) c2.push_back(detail::check_json(c));
    extra["gf1_checks"] = c1;
    extra["gf2_checks"] = c2;
  } else if (const auto* ky = std::get_if<KyivSpec>(&spec)) {
    auto rep = kyiv_validate(*ky);
    auto at = [](const std::optional<std::size_t>& n) { return n ? json(*n) : json(nullptr); };
    conds.push_back(detail::condition("assumption1", rep.assumption1,
                                      json{{"inequality", "s_n >= 3 m_n - 4"}, {"first_failure", at(rep.assumption1_failure)}}));
    conds.push_back(detail::condition("assumption2", rep.assumption2,
                                      json{{"inequality", "m_n >= 3"}, {"first_failure", at(rep.assumption2_failure)}}));
    conds.push_back(detail::condition("assumption3", rep.assumption3,
                                      json{{"inequality", "limsup m_n >= 4"}, {"limsup_m", rep.limsup_m}}));
    conds.push_back(detail::condition("estrella", rep.estrella,
                                      json{{"inequality", "m_k (s_k - 3 m_k + 12) - 8 >= 0"}, {"values", rep.estrella_values}}));
  } else if (const auto* rt = std::get_if<RepeatedTermSpec>(&spec)) {
    conds.push_back(detail::condition("structure", true, "y strictly decreasing, K_i >= 1"));
    auto sf = semifast_check(*rt);
    extra["semifast"] = sf.semifast;
    extra["semifast_first_violation"] = sf.first_violation ? json(*sf.first_violation) : json(nullptr);
  } else {
    make_stream(spec);
    conds.push_back(detail::condition("structure", true, "positive nonincreasing terms, ratio in (0,1)"));
  }
  bool ok = true;
  for (const auto& c : conds) ok = ok && c.at("pass").get<bool>();
  return json{{"schema", kValidationSchema}, {"family", family_name(spec)}, {"spec", to_json(spec)},
              {"ok", ok},           {"conditions", conds},           {"details", extra}};
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeConfig {
  std::size_t depth = 8;
  std::size_t horizon = 10;
  std::size_t cap = kDefaultCap;
  std::size_t budget = 20;
};

namespace detail {

inline json parts_json(json& target, const char* key, const IntervalSet& s) {
  if (s.size() <= kMaxListedParts) {
    target[key] = to_json(s);
  } else {
    target[key] = nullptr;
    target[std::string(key) + "_omitted"] = s.size();
  }
  return target;
}

inline json kakeya_json(const KakeyaPattern& p) {
  auto rel = [](KakeyaRelation r) {
    switch (r) {
      case KakeyaRelation::Greater: return ">";
      case KakeyaRelation::Equal: return "=";
      case KakeyaRelation::Less: return "<";
    }
    return "?";
  };
  json tr = json::array(), per = json::array();
  for (auto r : p.transient) tr.push_back(rel(r));
  for (auto r : p.periodic) per.push_back(rel(r));
  return json{{"prefix_length", p.prefix_length}, {"period", p.period}, {"transient", tr}, {"periodic", per},
              {"K_finite", p.K_finite()}, {"Kc_finite", p.Kc_finite()}};
}

inline json certificate_json(const InteriorCertificate& c) {
  json out{{"spec", to_json(FamilySpec(c.spec))},
           {"seed_depth", c.seed_depth},
           {"rounds", c.rounds},
           {"stop_reason", c.stop_reason},
           {"verified", c.verified},
           {"interior_measure", c.interior_measure.str()},
           {"part_count", c.s.size()}};
  parts_json(out, "s", c.s);
  parts_json(out, "uncovered", c.uncovered);
  return out;
}

inline json tight_run_json(const TightRunCertificate& t) {
  return json{{"found", t.found},
              {"reason", t.reason},
              {"base", t.base},
              {"scale", t.scale.get_str()},
              {"level", t.level},
              {"run_start", t.run_start},
              {"run_length", t.run_length},
              {"growth", t.growth},
              {"threshold", t.threshold},
              {"interval_length", t.interval_length.str()}};
}

inline json trend_json(const DeltaTrend& t) {
  json vals = json::array();
  for (const auto& v : t.values) vals.push_back(json::array({v.n, v.delta.str()}));
  return json{{"values", vals},
              {"verdict", to_string(t.verdict)},
              {"last_third_minimum", t.last_third_minimum ? json(t.last_third_minimum->str()) : json(nullptr)}};
}

}  // namespace detail

inline json classification_json(const Classification& c) {
  const auto& w = c.witnesses;
  json wj{{"kakeya", detail::kakeya_json(w.kakeya)}};
  wj["reduced_spec"] = w.reduced_spec ? to_json(FamilySpec(*w.reduced_spec)) : json(nullptr);
  if (w.gaps) {
    json g{{"n", w.gaps->n}, {"count", w.gaps->gaps.size()}};
    detail::parts_json(g, "parts", w.gaps->gaps);
    wj["gaps"] = g;
  } else {
    wj["gaps"] = nullptr;
  }
  wj["certificate"] = w.certificate ? detail::certificate_json(*w.certificate) : json(nullptr);
  wj["tight_run"] = w.tight_run ? detail::tight_run_json(*w.tight_run) : json(nullptr);
  wj["null_level"] = w.null_level ? json{{"level", w.null_level->level},
                                         {"n", w.null_level->n},
                                         {"min_gap", w.null_level->min_gap.str()},
                                         {"r", w.null_level->r.str()}}
                                  : json(nullptr);
  wj["trend"] = w.trend ? detail::trend_json(*w.trend) : json(nullptr);
  wj["notes"] = w.notes;
  return json{{"verdict", to_string(c.verdict)},
              {"tier", to_string(c.tier)},
              {"horizon", c.horizon},
              {"rule", c.rule},
              {"witnesses", wj}};
}

inline json iteration_json(const IterationReport& r) {
  json out{{"n", r.n},
           {"measure", r.measure.str()},
           {"brick_count", r.brick_count},
           {"part_count", r.iteration.size()},
           {"gap_count", r.gap_count},
           {"longest", to_json(r.longest_component)}};
  detail::parts_json(out, "parts", r.iteration);
  detail::parts_json(out, "gaps", r.gaps);
  return out;
}

inline json standardness_json(const StandardnessReport& s) {
  return json{{"k", s.k},
              {"ratio", s.ratio.str()},
              {"limsup", s.limsup.str()},
              {"liminf", s.liminf.str()},
              {"bound", s.bound.str()},
              {"periodic_values", to_json(s.periodic_values)}};
}

namespace detail {

inline json family_json(const FamilySpec& spec, const TermStream& s, std::size_t depth) {
  json out = json::object();
  if (const auto* ky = std::get_if<KyivSpec>(&spec)) {
    json groups = json::array();
    std::size_t N = 0;
    for (std::size_t k = 1; k <= 2 || N < depth; ++k) {
      N = kyiv_group_end(*ky, k);
      auto v = kyiv_values(*ky, k);
      groups.push_back(json{{"k", k}, {"N", N}, {"a", v.a.str()}, {"r_N", v.r_N.str()}, {"G", v.G.str()},
                            {"estrella", kyiv_estrella(*ky, k)}});
    }
    out["groups"] = groups;
  } else if (const auto* mm = std::get_if<MMSpec>(&spec)) {
    json groups = json::array();
    std::size_t N = 0;
    for (std::size_t k = 1; k <= 2 || N < depth; ++k) {
      N = mm_group_end(*mm, k);
      groups.push_back(json{{"k", k}, {"N", N}, {"q", mm_q(*mm, k).str()}, {"r_N", mm_remainder(*mm, k).str()}});
    }
    out["groups"] = groups;
  } else if (const auto* gf = std::get_if<GFSpec>(&spec)) {
    auto rep = gf_validate(*gf);
    out["s"] = rep.s;
    out["gf1"] = rep.gf1_holds;
    out["gf2"] = rep.gf2_holds;
  } else if (const auto* mg = std::get_if<MultigeometricSpec>(&spec)) {
    out["r0"] = mg->r0().str();
    out["block"] = to_json(mg_block(*mg));
  }
  out["r0"] = s.tail(0).str();
  return out;
}

inline json standardness_section(const FamilySpec& spec) {
  if (const auto* gf = std::get_if<GFSpec>(&spec)) return standardness_json(standardness_ratio(*gf, 1));
  if (const auto* mm = std::get_if<MMSpec>(&spec)) return standardness_json(standardness_ratio(*mm, 1));
  if (const auto* ky = std::get_if<KyivSpec>(&spec)) return standardness_json(standardness_ratio(*ky, 1));
  return nullptr;
}

inline json uniqueness_section(const TermStream& s, std::size_t depth, std::size_t cap) {
  const std::size_t k = std::min<std::size_t>(depth, 24);
  json out{{"k", k}};
  auto cols = collisions(s, k, cap);
  json list = json::array();
  for (std::size_t i = 0; i < cols.size() && i < 64; ++i)
    list.push_back(json{{"value", cols[i].value.str()},
                        {"multiplicity", cols[i].multiplicity.get_str()},
                        {"first", cols[i].first},
                        {"second", cols[i].second}});
  out["collision_count"] = cols.size();
  out["collisions"] = list;
  if (k > 0)
    parts_json(out, "sk_outer", sk_outer(s, k, cap));
  else
    out["sk_outer"] = json::array();
  json tails = json::array();
  for (std::size_t j = 1; j <= std::min<std::size_t>(std::max<std::size_t>(depth, 1), 12); ++j)
    tails.push_back(json{{"k", j}, {"unique", tail_uniqueness_point(s, j)}});
  out["tail_uniqueness"] = tails;
  return out;
}

inline json components_section(const TermStream& s, std::size_t cap) {
  const std::size_t P = s.prefix_length(), L = s.period();
  std::vector<std::size_t> ns{P + L, P + 2 * L, P + 3 * L};
  const std::size_t inner = std::min<std::size_t>(2 * L, 16);
  json out = json::array();
  for (const auto& c : longest_component_trend(s, ns, inner, cap))
    out.push_back(json{{"n", c.n}, {"longest", c.longest.str()}, {"r", c.r.str()}, {"ratio", c.ratio.str()}});
  return json{{"inner_depth", inner}, {"values", out}};
}

}  // namespace detail

/// The composite analysis document. Deterministic: no timestamps, ordered keys.
inline json analysis_report(const FamilySpec& spec, const AnalyzeConfig& cfg) {
  const TermStream s = make_stream(spec);
  json out{{"schema", kAnalysisSchema}, {"family", family_name(spec)}, {"spec", to_json(spec)}};
  out["config"] = json{{"depth", cfg.depth}, {"horizon", cfg.horizon}, {"cap", cfg.cap}, {"budget", cfg.budget}};
  out["stream"] = json{{"prefix", to_json(s.prefix())},
                       {"block", to_json(s.block())},
                       {"ratio", s.ratio().str()},
                       {"r0", s.tail(0).str()}};

  ClassifyOptions copt;
  copt.cap = cfg.cap;
  copt.budget = cfg.budget;
  out["classification"] = classification_json(classify(spec, std::max<std::size_t>(cfg.horizon, 1), copt));

  json its = json::array();
  for (const auto& r : iterations(s, cfg.depth, cfg.cap)) its.push_back(iteration_json(r));
  out["iterations"] = its;

  const std::size_t d = std::max<std::size_t>(cfg.depth, 1);
  MeasureBounds mb;
  if (const auto* mg = std::get_if<MultigeometricSpec>(&spec)) {
    CertifyOptions opt;
    opt.cap = cfg.cap;
    mb = measure_bounds(*mg, d, cfg.budget, opt);
  } else {
    mb = measure_bounds(s, d, cfg.cap);
  }
  out["measure_bounds"] = json{{"depth", d},
                               {"upper_lambda_E", mb.upper_lambda_E.str()},
                               {"lower_interior", mb.lower_interior.str()},
                               {"boundary_gap", mb.boundary_gap.str()},
                               {"lower_source", mb.lower_source}};
  out["delta_trend"] = detail::trend_json(delta_trend(s, d, cfg.cap));
  out["standardness"] = detail::standardness_section(spec);
  out["family_values"] = detail::family_json(spec, s, cfg.depth);
  out["components"] = detail::components_section(s, cfg.cap);
  out["uniqueness"] = detail::uniqueness_section(s, cfg.depth, cfg.cap);
  return out;
}

// ---------------------------------------------------------------------------
// Schema checks
// ---------------------------------------------------------------------------

namespace detail {

class SchemaChecker {
 public:
  std::vector<std::string> errors;

  const json* field(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) {
      errors.push_back(path + ": not an object");
      return nullptr;
    }
    if (!obj.contains(key)) {
      errors.push_back(path + "." + key + ": missing");
      return nullptr;
    }
    return &obj.at(key);
  }
  void rational(const json& obj, const std::string& path, const char* key) {
    if (const json* v = field(obj, path, key)) {
      if (!v->is_string()) {
        errors.push_back(path + "." + key + ": rational must be a string");
        return;
      }
      try {
        Rational::parse(v->get<std::string>());
      } catch (const std::exception&) {
        errors.push_back(path + "." + key + ": not a rational");
      }
    }
  }
  void typed(const json& obj, const std::string& path, const char* key, json::value_t t) {
    if (const json* v = field(obj, path, key)) {
      if (v->type() != t && !(t == json::value_t::number_unsigned && v->is_number_integer()))
        errors.push_back(path + "." + key + ": wrong type");
    }
  }
  void parts_or_omitted(const json& obj, const std::string& path, const char* key) {
    if (const json* v = field(obj, path, key)) {
      if (v->is_null()) {
        if (!obj.contains(std::string(key) + "_omitted")) errors.push_back(path + "." + key + ": null without count");
        return;
      }
      try {
        interval_set_from_json(*v, path + "." + key);
      } catch (const std::exception& e) {
        errors.push_back(e.what());
      }
    }
  }
};

}  // namespace detail

/// Empty result means the document matches the analysis schema.
inline std::vector<std::string> check_analysis_report(const json& r) {
  detail::SchemaChecker c;
  using vt = json::value_t;
  if (const json* s = c.field(r, "$", "schema"); s && *s != kAnalysisSchema) c.errors.push_back("$.schema: unexpected");
  c.typed(r, "$", "family", vt::string);
  if (const json* spec = c.field(r, "$", "spec")) {
    try {
      spec_from_json(*spec);
    } catch (const std::exception& e) {
      c.errors.push_back(std::string("$.spec: ") + e.what());
    }
  }
  if (const json* cfg = c.field(r, "$", "config"))
    for (const char* k : {"depth", "horizon", "cap", "budget"}) c.typed(*cfg, "$.config", k, vt::number_unsigned);
  if (const json* st = c.field(r, "$", "stream")) {
    c.rational(*st, "$.stream", "ratio");
    c.rational(*st, "$.stream", "r0");
  }
  if (const json* cl = c.field(r, "$", "classification")) {
    if (const json* v = c.field(*cl, "$.classification", "verdict")) {
      static const std::vector<std::string> ok{"Finite", "MultiInterval", "Cantor", "Cantorval", "Unknown"};
      if (!v->is_string() || std::find(ok.begin(), ok.end(), v->get<std::string>()) == ok.end())
        c.errors.push_back("$.classification.verdict: invalid");
    }
    if (const json* t = c.field(*cl, "$.classification", "tier")) {
      static const std::vector<std::string> ok{"Proved", "Certified", "Heuristic"};
      if (!t->is_string() || std::find(ok.begin(), ok.end(), t->get<std::string>()) == ok.end())
        c.errors.push_back("$.classification.tier: invalid");
    }
    c.typed(*cl, "$.classification", "horizon", vt::number_unsigned);
    c.typed(*cl, "$.classification", "witnesses", vt::object);
  }
  if (const json* its = c.field(r, "$", "iterations")) {
    if (!its->is_array()) c.errors.push_back("$.iterations: not an array");
    else
      for (std::size_t i = 0; i < its->size(); ++i) {
        const std::string p = "$.iterations[" + std::to_string(i) + "]";
        const json& it = (*its)[i];
        c.typed(it, p, "n", vt::number_unsigned);
        c.rational(it, p, "measure");
        c.typed(it, p, "gap_count", vt::number_unsigned);
        c.parts_or_omitted(it, p, "parts");
        c.parts_or_omitted(it, p, "gaps");
      }
  }
  if (const json* mb = c.field(r, "$", "measure_bounds"))
    for (const char* k : {"upper_lambda_E", "lower_interior", "boundary_gap"}) c.rational(*mb, "$.measure_bounds", k);
  if (const json* dt = c.field(r, "$", "delta_trend")) {
    if (const json* vals = c.field(*dt, "$.delta_trend", "values")) {
      for (const auto& v : *vals)
        if (!v.is_array() || v.size() != 2 || !v[1].is_string()) c.errors.push_back("$.delta_trend.values: bad row");
    }
    c.typed(*dt, "$.delta_trend", "verdict", vt::string);
  }
  if (const json* sd = c.field(r, "$", "standardness"); sd && !sd->is_null())
    for (const char* k : {"ratio", "limsup", "liminf", "bound"}) c.rational(*sd, "$.standardness", k);
  c.typed(r, "$", "family_values", vt::object);
  c.typed(r, "$", "components", vt::object);
  if (const json* u = c.field(r, "$", "uniqueness")) {
    c.typed(*u, "$.uniqueness", "collisions", vt::array);
    c.parts_or_omitted(*u, "$.uniqueness", "sk_outer");
  }
  return c.errors;
}

inline std::vector<std::string> check_validation_report(const json& r) {
  detail::SchemaChecker c;
  if (const json* s = c.field(r, "$", "schema"); s && *s != kValidationSchema) c.errors.push_back("$.schema: unexpected");
  c.typed(r, "$", "family", json::value_t::string);
  c.typed(r, "$", "ok", json::value_t::boolean);
  if (const json* conds = c.field(r, "$", "conditions")) {
    if (!conds->is_array()) c.errors.push_back("$.conditions: not an array");
    else
      for (const auto& cond : *conds) {
        c.typed(cond, "$.conditions[]", "name", json::value_t::string);
        c.typed(cond, "$.conditions[]", "pass", json::value_t::boolean);
      }
  }
  if (const json* spec = c.field(r, "$", "spec")) {
    try {
      spec_from_json(*spec);
    } catch (const std::exception& e) {
      c.errors.push_back(std::string("$.spec: ") + e.what());
    }
  }
  return c.errors;
}

// ---------------------------------------------------------------------------
// CSV and human renderings (derived from the JSON document)
// ---------------------------------------------------------------------------

/// (table name, CSV text) pairs for plotting.
inline std::vector<std::pair<std::string, std::string>> csv_tables(const json& r) {
  std::vector<std::pair<std::string, std::string>> out;
  {
    std::ostringstream os;
    os << "n,measure,measure_approx,part_count,gap_count\n";
    for (const auto& it : r.at("iterations"))
      os << it.at("n").get<std::size_t>() << ',' << it.at("measure").get<std::string>() << ','
         << Rational::parse(it.at("measure").get<std::string>()).to_double() << ','
         << it.at("part_count").get<std::size_t>() << ',' << it.at("gap_count").get<std::size_t>() << '\n';
    out.emplace_back("iterations", os.str());
  }
  {
    std::ostringstream os;
    os << "n,delta,delta_approx\n";
    for (const auto& v : r.at("delta_trend").at("values"))
      os << v[0].get<std::size_t>() << ',' << v[1].get<std::string>() << ','
         << Rational::parse(v[1].get<std::string>()).to_double() << '\n';
    out.emplace_back("delta", os.str());
  }
  {
    std::ostringstream os;
    os << "n,longest,r,ratio\n";
    for (const auto& v : r.at("components").at("values"))
      os << v.at("n").get<std::size_t>() << ',' << v.at("longest").get<std::string>() << ','
         << v.at("r").get<std::string>() << ',' << v.at("ratio").get<std::string>() << '\n';
    out.emplace_back("components", os.str());
  }
  if (!r.at("standardness").is_null()) {
    std::ostringstream os;
    os << "index,ratio\n";
    std::size_t i = 0;
    for (const auto& v : r.at("standardness").at("periodic_values")) os << ++i << ',' << v.get<std::string>() << '\n';
    out.emplace_back("standardness", os.str());
  }
  return out;
}

inline std::string human_summary(const json& r) {
  std::ostringstream os;
  const auto& cl = r.at("classification");
  os << "family:         " << r.at("family").get<std::string>() << '\n';
  os << "r0:             " << r.at("stream").at("r0").get<std::string>() << '\n';
  os << "verdict:        " << cl.at("verdict").get<std::string>() << " (" << cl.at("tier").get<std::string>()
     << ", " << cl.at("rule").get<std::string>() << ")\n";
  const auto& mb = r.at("measure_bounds");
  os << "measure bounds: upper " << mb.at("upper_lambda_E").get<std::string>() << ", lower "
     << mb.at("lower_interior").get<std::string>() << ", gap " << mb.at("boundary_gap").get<std::string>() << '\n';
  const auto& its = r.at("iterations");
  if (!its.empty()) {
    const auto& last = its.back();
    os << "I_" << last.at("n").get<std::size_t>() << ":            measure " << last.at("measure").get<std::string>()
       << ", " << last.at("part_count").get<std::size_t>() << " parts\n";
  }
  os << "delta trend:    " << r.at("delta_trend").at("verdict").get<std::string>() << '\n';
  if (!r.at("standardness").is_null())
    os << "standardness:   " << r.at("standardness").at("ratio").get<std::string>() << " (bound "
       << r.at("standardness").at("bound").get<std::string>() << ")\n";
  os << "collisions:     " << r.at("uniqueness").at("collision_count").get<std::size_t>() << " at depth "
     << r.at("uniqueness").at("k").get<std::size_t>() << '\n';
  return os.str();
}

inline std::string human_validation(const json& r) {
  std::ostringstream os;
  os << "family: " << r.at("family").get<std::string>() << '\n';
  for (const auto& c : r.at("conditions"))
    os << (c.at("pass").get<bool>() ? "  pass  " : "  FAIL  ") << c.at("name").get<std::string>() << "  "
       << c.at("detail").dump() << '\n';
  os << (r.at("ok").get<bool>() ? "all conditions hold\n" : "some conditions fail\n");
  return os.str();
}

}  // namespace cantorval
