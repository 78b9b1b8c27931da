#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/point_set.hpp"
#include "cantorval/sequences.hpp"
#include "cantorval/subsums.hpp"
#include "cantorval/term_stream.hpp"

namespace cantorval {

namespace detail {

inline Rational sum_of(const std::vector<Rational>& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

/// Stream for a series given group by group, where group k + L is group k
/// scaled by a constant once k > P0. Prefix = groups 1..P0, block = groups
/// P0+1..P0+L.
template <class GroupFn>
TermStream grouped_stream(GroupFn&& group, std::size_t P0, std::size_t L, std::string label) {
  std::vector<Rational> prefix, block;
  for (std::size_t k = 1; k <= P0; ++k) {
    auto g = group(k);
    prefix.insert(prefix.end(), g.begin(), g.end());
  }
  for (std::size_t k = P0 + 1; k <= P0 + L; ++k) {
    auto g = group(k);
    block.insert(block.end(), g.begin(), g.end());
  }
  auto first = group(P0 + 1);
  auto next = group(P0 + 1 + L);
  if (first.empty() || first.size() != next.size())
    throw std::logic_error("grouped_stream: group structure is not periodic");
  Rational R = next.front() / first.front();
  for (std::size_t i = 0; i < first.size(); ++i)
    if (next[i] != R * first[i]) throw std::logic_error("grouped_stream: groups do not scale uniformly");
  return TermStream(std::move(prefix), std::move(block), std::move(R), std::move(label));
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

template <class T>
void require_periodic(const EventuallyPeriodic<T>& seq, const char* name) {
  if (seq.period.empty()) throw SpecError(std::string(name) + ": periodic part must be nonempty");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Multigeometric series  (k_1, ..., k_m; q)
// ---------------------------------------------------------------------------

/// Terms k_i q^j at index (j-1)m + i; coefficients nonincreasing, 0 < q < 1.
struct MultigeometricSpec {
  std::vector<Rational> k;
  Rational q;

  void validate() const {
    if (k.empty()) throw SpecError("multigeometric: need at least one coefficient");
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (!k[i].is_positive()) throw SpecError("multigeometric: coefficients must be positive");
      if (i && k[i - 1] < k[i]) throw SpecError("multigeometric: coefficients must be nonincreasing");
    }
    if (!q.is_positive() || !(q < Rational(1))) throw SpecError("multigeometric: q must lie in (0,1)");
    if (k.back() < q * k.front()) throw SpecError("multigeometric: k_m >= q k_1 needed for nonincreasing terms");
  }
  std::size_t m() const { return k.size(); }
  Rational coefficient_sum() const { return detail::sum_of(k); }
  Rational r0() const { return coefficient_sum() * q / (Rational(1) - q); }
  std::string label() const { return "multigeometric(" + detail::join(k) + ";" + q.str() + ")"; }

  friend bool operator==(const MultigeometricSpec&, const MultigeometricSpec&) = default;
};

inline TermStream mg_stream(const MultigeometricSpec& spec) {
  spec.validate();
  std::vector<Rational> block;
  for (const auto& c : spec.k) block.push_back(c * spec.q);
  return TermStream({}, std::move(block), spec.q, spec.label());
}

/// Unscaled one-group subsum set K = subsums of {k_1..k_m}.
inline PointSet mg_block(const MultigeometricSpec& spec, std::size_t cap = kDefaultCap) {
  spec.validate();
  if (spec.m() > 30) throw SpecError("mg_block: at most 30 coefficients");
  return subsums_of(spec.k, cap, "mg_block");
}

// ---------------------------------------------------------------------------
// Generalized Ferens series
// ---------------------------------------------------------------------------

/// s(p, r) = sum_{i=1}^{r-1} (p + i).
inline long gf_s(long p, long r) { return (r - 1) * p + r * (r - 1) / 2; }

struct GFSpec {
  EventuallyPeriodic<long> m;
  EventuallyPeriodic<long> k;
  GeometricSequence q;

  std::size_t transient() const { return std::max({m.pre.size(), k.pre.size(), q.pre.size()}); }
  std::size_t joint_period() const {
    return lcm_size(lcm_size(m.period.size(), k.period.size()), q.period.size());
  }
  /// q_{n+L} / q_n for n beyond the transient.
  Rational period_ratio() const { return q.ratio.pow(joint_period() / q.period.size()); }
  long s_at(std::size_t n) const { return gf_s(m.at(n), k.at(n)); }

  void validate_structure() const {
    detail::require_periodic(m, "gf.m");
    detail::require_periodic(k, "gf.k");
    if (q.period.empty()) throw SpecError("gf.q: periodic part must be nonempty");
    if (!q.ratio.is_positive() || !(q.ratio < Rational(1))) throw SpecError("gf.q: ratio must lie in (0,1)");
    for (const auto* v : {&m.pre, &m.period})
      for (long x : *v)
        if (x < 2) throw SpecError("gf: m_n >= 2 required");
    for (std::size_t n = 1; n <= transient() + joint_period(); ++n)
      if (k.at(n) <= m.at(n)) throw SpecError("gf: k_n > m_n required (fails at n=" + std::to_string(n) + ")");
    for (const auto* v : {&q.pre, &q.period})
      for (const auto& x : *v)
        if (!x.is_positive()) throw SpecError("gf: q_n must be positive");
  }
  std::string label() const { return "gf"; }
};

struct ConditionCheck {
  std::size_t n = 0;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

struct GFReport {
  std::vector<long> s;  // s_n for n = 1..P0+L (the rest repeats)
  std::vector<ConditionCheck> gf1;
  std::vector<ConditionCheck> gf2;
  bool gf1_holds = true;
  bool gf2_holds = true;
  std::optional<std::size_t> gf1_first_failure;
  std::optional<std::size_t> gf2_first_failure;
};

/// Exact r-weighted tail sum_{i>n} (s_i + m_i) q_i.
inline Rational gf_weighted_tail(const GFSpec& spec, std::size_t n, long s_sign) {
  auto g = [&](std::size_t i) { return Rational(spec.s_at(i) + s_sign * spec.m.at(i)) * spec.q.at(i); };
  return periodic_tail_sum(g, n, spec.transient(), spec.joint_period(), spec.period_ratio());
}

/// GF1: q_n <= (s_{n+1} - m_{n+1} + 1) q_{n+1};  GF2: m_n q_n > sum_{i>n}(s_i + m_i) q_i.
/// Both sides scale by the period ratio past the transient, so checking
/// n = 1..P0+L+1 settles every n.
inline GFReport gf_validate(const GFSpec& spec) {
  spec.validate_structure();
  GFReport rep;
  const std::size_t last = spec.transient() + spec.joint_period() + 1;
  for (std::size_t n = 1; n < last; ++n) rep.s.push_back(spec.s_at(n));
  for (std::size_t n = 1; n <= last; ++n) {
    ConditionCheck c1{n, spec.q.at(n),
                      Rational(spec.s_at(n + 1) - spec.m.at(n + 1) + 1) * spec.q.at(n + 1), false};
    c1.holds = c1.lhs <= c1.rhs;
    if (!c1.holds && !rep.gf1_first_failure) rep.gf1_first_failure = n;
    rep.gf1_holds = rep.gf1_holds && c1.holds;
    rep.gf1.push_back(std::move(c1));

    ConditionCheck c2{n, Rational(spec.m.at(n)) * spec.q.at(n), gf_weighted_tail(spec, n, +1), false};
    c2.holds = c2.rhs < c2.lhs;
    if (!c2.holds && !rep.gf2_first_failure) rep.gf2_first_failure = n;
    rep.gf2_holds = rep.gf2_holds && c2.holds;
    rep.gf2.push_back(std::move(c2));
  }
  return rep;
}

/// Terms of the n-th group: a_j = (m_n + K_n - j) q_n, i.e. (m_n + k_n - 1) q_n
/// down to m_n q_n, k_n terms.
inline std::vector<Rational> gf_group_terms(const GFSpec& spec, std::size_t n) {
  std::vector<Rational> out;
  long mn = spec.m.at(n), kn = spec.k.at(n);
  Rational qn = spec.q.at(n);
  for (long j = 1; j <= kn; ++j) out.push_back(Rational(mn + kn - j) * qn);
  return out;
}

inline TermStream gf_stream(const GFSpec& spec) {
  spec.validate_structure();
  return detail::grouped_stream([&](std::size_t n) { return gf_group_terms(spec, n); }, spec.transient(),
                                spec.joint_period(), "gf");
}

/// ({0} u {m_n, ..., s_n} u {s_n + m_n}) q_n, the closed-form subsum set of group n.
inline PointSet gf_group_set(const GFSpec& spec, std::size_t n, std::size_t cap = kDefaultCap) {
  spec.validate_structure();
  long mn = spec.m.at(n), sn = spec.s_at(n);
  Rational qn = spec.q.at(n);
  std::vector<Rational> vals{Rational(0)};
  for (long i = mn; i <= sn; ++i) vals.push_back(Rational(i) * qn);
  vals.push_back(Rational(sn + mn) * qn);
  if (vals.size() > cap) throw CapacityError("gf_group_set", cap);
  return PointSet(std::move(vals));
}

// ---------------------------------------------------------------------------
// Marchwicki-Miska series
// ---------------------------------------------------------------------------

struct MMSpec {
  EventuallyPeriodic<long> n;  // n_s = N_s - N_{s-1} - 2 >= 1

  void validate() const {
    detail::require_periodic(n, "mm.n");
    for (const auto* v : {&n.pre, &n.period})
      for (long x : *v)
        if (x < 1) throw SpecError("mm: n_s >= 1 required (N_s - N_{s-1} >= 3)");
  }
  std::size_t transient() const { return n.pre.size(); }
  std::size_t joint_period() const { return n.period.size(); }
  std::string label() const { return "mm"; }
};

/// b_1^n = 2^{n+1}, b_2^n = 2^n + 1, b_i^n = 2^{n+3-i} for 3 <= i <= n+2.
inline std::vector<Integer> mm_b(long n) {
  if (n < 1) throw SpecError("mm_b: n >= 1 required");
  std::vector<Integer> b;
  b.push_back(Integer(1) << static_cast<unsigned long>(n + 1));
  b.push_back((Integer(1) << static_cast<unsigned long>(n)) + 1);
  for (long i = 3; i <= n + 2; ++i) b.push_back(Integer(1) << static_cast<unsigned long>(n + 3 - i));
  return b;
}

/// Closed-form subsum set of (b_i^n):
/// {2i-2 : 1<=i<=2^{n-1}} u {i : 2^n <= i <= 4*2^n - 1} u {4*2^n - 1 + 2i : 1<=i<=2^{n-1}}.
inline PointSet mm_block(long n, std::size_t cap = kDefaultCap) {
  if (n < 1) throw SpecError("mm_block: n >= 1 required");
  if (n > 40) throw CapacityError("mm_block", cap);
  const long p = 1L << n;
  const long half = p / 2;
  if (static_cast<std::size_t>(2 * half + 3 * p) > cap) throw CapacityError("mm_block", cap);
  std::vector<Rational> vals;
  for (long i = 1; i <= half; ++i) vals.emplace_back(2 * i - 2);
  for (long i = p; i <= 4 * p - 1; ++i) vals.emplace_back(i);
  for (long i = 1; i <= half; ++i) vals.emplace_back(4 * p - 1 + 2 * i);
  return PointSet(std::move(vals));
}

/// q_1 = 1, q_{k+1} = q_k / (3 * 2^{n_{k+1}}).
inline Rational mm_q(const MMSpec& spec, std::size_t k) {
  Rational q(1);
  for (std::size_t j = 2; j <= k; ++j) q /= Rational(Integer(Integer(3) << static_cast<unsigned long>(spec.n.at(j))));
  return q;
}

inline std::vector<Rational> mm_group_terms(const MMSpec& spec, std::size_t k) {
  Rational qk = mm_q(spec, k);
  std::vector<Rational> out;
  for (const auto& b : mm_b(spec.n.at(k))) out.push_back(Rational(b) * qk);
  return out;
}

/// N_k = sum_{s<=k} (n_s + 2).
inline std::size_t mm_group_end(const MMSpec& spec, std::size_t k) {
  std::size_t N = 0;
  for (std::size_t s = 1; s <= k; ++s) N += static_cast<std::size_t>(spec.n.at(s)) + 2;
  return N;
}

/// r_{N_k} = sum_{j>=k} (5 * 2^{n_{j+1}} - 1) q_{j+1}, computed in closed form.
inline Rational mm_remainder(const MMSpec& spec, std::size_t k) {
  spec.validate();
  const std::size_t P0 = spec.transient(), L = spec.joint_period();
  Rational R = mm_q(spec, P0 + 1 + L) / mm_q(spec, P0 + 1);
  auto g = [&](std::size_t i) {
    return Rational(Integer((Integer(5) << static_cast<unsigned long>(spec.n.at(i))) - 1)) * mm_q(spec, i);
  };
  return periodic_tail_sum(g, k, P0, L, R);
}

inline TermStream mm_stream(const MMSpec& spec) {
  spec.validate();
  return detail::grouped_stream([&](std::size_t k) { return mm_group_terms(spec, k); }, spec.transient(),
                                spec.joint_period(), "mm");
}

// ---------------------------------------------------------------------------
// Kyiv series
// ---------------------------------------------------------------------------

struct KyivSpec {
  EventuallyPeriodic<long> m;
  EventuallyPeriodic<long> s;

  std::size_t transient() const { return std::max(m.pre.size(), s.pre.size()); }
  std::size_t joint_period() const { return lcm_size(m.period.size(), s.period.size()); }
  void validate_structure() const {
    detail::require_periodic(m, "kyiv.m");
    detail::require_periodic(s, "kyiv.s");
    for (const auto* v : {&m.pre, &m.period, &s.pre, &s.period})
      for (long x : *v)
        if (x < 1) throw SpecError("kyiv: m_k and s_k must be positive integers");
  }
  std::string label() const { return "kyiv"; }
};

/// m_k(s_k - 3 m_k + 12) - 8 for the parameters of group k. The tightness
/// induction step into group k needs this to be nonnegative.
inline long kyiv_estrella(const KyivSpec& spec, std::size_t k) {
  long m = spec.m.at(k), s = spec.s.at(k);
  return m * (s - 3 * m + 12) - 8;
}

struct KyivReport {
  bool assumption1 = true;  // s_n >= 3 m_n - 4
  bool assumption2 = true;  // m_n >= 3
  bool assumption3 = true;  // some periodic m_n >= 4
  bool estrella = true;     // estrella >= 0 for every group
  std::optional<std::size_t> assumption1_failure;
  std::optional<std::size_t> assumption2_failure;
  std::vector<long> estrella_values;  // groups 1..P0+L
  long limsup_m = 0;
  bool all_pass() const { return assumption1 && assumption2 && assumption3 && estrella; }
};

inline KyivReport kyiv_validate(const KyivSpec& spec) {
  spec.validate_structure();
  KyivReport rep;
  const std::size_t last = spec.transient() + spec.joint_period();
  for (std::size_t n = 1; n <= last; ++n) {
    long m = spec.m.at(n), s = spec.s.at(n);
    if (s < 3 * m - 4 && rep.assumption1) {
      rep.assumption1 = false;
      rep.assumption1_failure = n;
    }
    if (m < 3 && rep.assumption2) {
      rep.assumption2 = false;
      rep.assumption2_failure = n;
    }
    long e = kyiv_estrella(spec, n);
    rep.estrella_values.push_back(e);
    if (e < 0) rep.estrella = false;
  }
  rep.limsup_m = *std::max_element(spec.m.period.begin(), spec.m.period.end());
  rep.assumption3 = rep.limsup_m >= 4;
  return rep;
}

inline Rational kyiv_denominator_factor(const KyivSpec& spec, std::size_t i) {
  long m = spec.m.at(i), s = spec.s.at(i);
  return Rational(m * m + s * m + 2);
}

struct KyivValues {
  Rational a;    // principal value a_k
  Rational r_N;  // r_{N_k}
  Rational G;    // group sum (s_k + m_k) a_k
};

/// Closed forms a_k = 2^{k-1} m_k / prod_{i<=k}(m_i^2 + s_i m_i + 2),
/// r_{N_k} = 2^k / prod(...), G_k = (s_k + m_k) a_k. Each call also rebuilds
/// a_k from a_1 with the ratio a_{j+1}/a_j = 2 m_{j+1} / (m_j (m_{j+1}^2 +
/// s_{j+1} m_{j+1} + 2)) and checks r_{N_k} = 2 a_k / m_k.
inline KyivValues kyiv_values(const KyivSpec& spec, std::size_t k) {
  spec.validate_structure();
  if (k == 0) throw std::out_of_range("kyiv_values: groups start at 1");
  Rational prod(1);
  for (std::size_t i = 1; i <= k; ++i) prod *= kyiv_denominator_factor(spec, i);
  Rational two_pow = Rational(2).pow(k - 1);
  KyivValues v;
  v.a = two_pow * Rational(spec.m.at(k)) / prod;
  v.r_N = two_pow * Rational(2) / prod;
  v.G = Rational(spec.s.at(k) + spec.m.at(k)) * v.a;

  Rational a = Rational(spec.m.at(1)) / kyiv_denominator_factor(spec, 1);
  for (std::size_t j = 1; j < k; ++j)
    a *= Rational(2 * spec.m.at(j + 1)) / (Rational(spec.m.at(j)) * kyiv_denominator_factor(spec, j + 1));
  if (a != v.a) throw std::logic_error("kyiv_values: closed form and recurrence disagree at k=" + std::to_string(k));
  if (v.r_N != Rational(2) * v.a / Rational(spec.m.at(k)))
    throw std::logic_error("kyiv_values: r_{N_k} != 2 a_k / m_k at k=" + std::to_string(k));
  return v;
}

/// Group k: s_k + 1 copies of a_k, then m_k copies of (m_k - 1)/m_k a_k.
inline std::vector<Rational> kyiv_group_terms(const KyivSpec& spec, std::size_t k) {
  Rational a = kyiv_values(spec, k).a;
  long m = spec.m.at(k), s = spec.s.at(k);
  std::vector<Rational> out(static_cast<std::size_t>(s + 1), a);
  Rational small = Rational(m - 1, m) * a;
  out.insert(out.end(), static_cast<std::size_t>(m), small);
  return out;
}

inline std::size_t kyiv_group_size(const KyivSpec& spec, std::size_t k) {
  return static_cast<std::size_t>(spec.s.at(k) + spec.m.at(k) + 1);
}

/// N_k.
inline std::size_t kyiv_group_end(const KyivSpec& spec, std::size_t k) {
  std::size_t N = 0;
  for (std::size_t j = 1; j <= k; ++j) N += kyiv_group_size(spec, j);
  return N;
}

inline TermStream kyiv_stream(const KyivSpec& spec) {
  spec.validate_structure();
  return detail::grouped_stream([&](std::size_t k) { return kyiv_group_terms(spec, k); }, spec.transient(),
                                spec.joint_period(), "kyiv");
}

/// D_k = {(a_k / m_k) i : (m_k - 3) m_k + 2 <= i <= (s_k + 3) m_k - 2}.
inline PointSet kyiv_D(const KyivSpec& spec, std::size_t k) {
  Rational unit = kyiv_values(spec, k).a / Rational(spec.m.at(k));
  long m = spec.m.at(k), s = spec.s.at(k);
  std::vector<Rational> vals;
  for (long i = (m - 3) * m + 2; i <= (s + 3) * m - 2; ++i) vals.push_back(Rational(i) * unit);
  return PointSet(std::move(vals));
}

/// S_k: all subsums of the k-th group, by exhaustive enumeration of its
/// 2^{s_k + m_k + 1} subsets. Limited to groups of at most 24 terms.
inline PointSet kyiv_group_set(const KyivSpec& spec, std::size_t k, std::size_t cap = kDefaultCap) {
  if (kyiv_group_size(spec, k) > 24) throw CapacityError("kyiv_group_set (group size > 24)", cap);
  return subsums_of(kyiv_group_terms(spec, k), cap, "kyiv_group_set");
}

// ---------------------------------------------------------------------------
// Repeated-term series (y_i; K_i) and explicit eventually geometric series
// ---------------------------------------------------------------------------

/// Each y_i repeated K_i times; y strictly decreasing, eventually geometric.
struct RepeatedTermSpec {
  GeometricSequence y;
  EventuallyPeriodic<long> K;

  std::size_t transient() const { return std::max(y.pre.size(), K.pre.size()); }
  std::size_t joint_period() const { return lcm_size(y.period.size(), K.period.size()); }
  Rational period_ratio() const { return y.ratio.pow(joint_period() / y.period.size()); }

  void validate() const {
    if (y.period.empty()) throw SpecError("repeated.y: periodic part must be nonempty");
    detail::require_periodic(K, "repeated.K");
    if (!y.ratio.is_positive() || !(y.ratio < Rational(1))) throw SpecError("repeated.y: ratio must lie in (0,1)");
    for (const auto* v : {&K.pre, &K.period})
      for (long x : *v)
        if (x < 1) throw SpecError("repeated: K_i >= 1 required");
    const std::size_t last = transient() + joint_period() + 1;
    for (std::size_t i = 1; i <= last; ++i) {
      if (!y.at(i).is_positive()) throw SpecError("repeated: y_i must be positive");
      if (i > 1 && !(y.at(i) < y.at(i - 1))) throw SpecError("repeated: y_i must be strictly decreasing");
    }
  }
  /// sum_{i > k} K_i y_i.
  Rational tail(std::size_t k) const {
    auto g = [&](std::size_t i) { return Rational(K.at(i)) * y.at(i); };
    return periodic_tail_sum(g, k, transient(), joint_period(), period_ratio());
  }
  std::string label() const { return "repeated"; }
};

inline TermStream repeated_stream(const RepeatedTermSpec& spec) {
  spec.validate();
  auto group = [&](std::size_t i) {
    return std::vector<Rational>(static_cast<std::size_t>(spec.K.at(i)), spec.y.at(i));
  };
  return detail::grouped_stream(group, spec.transient(), spec.joint_period(), "repeated");
}

/// A raw eventually geometric series: prefix, then block scaled by ratio^t.
struct ExplicitSpec {
  std::vector<Rational> prefix;
  std::vector<Rational> block;
  Rational ratio;
  std::string label() const { return "explicit"; }
};

inline TermStream explicit_stream(const ExplicitSpec& spec) {
  return TermStream(spec.prefix, spec.block, spec.ratio, "explicit");
}

// ---------------------------------------------------------------------------
// Family dispatch
// ---------------------------------------------------------------------------

using FamilySpec = std::variant<MultigeometricSpec, GFSpec, MMSpec, KyivSpec, RepeatedTermSpec, ExplicitSpec>;

inline std::string family_name(const FamilySpec& spec) {
  struct V {
    std::string operator()(const MultigeometricSpec&) const { return "multigeometric"; }
    std::string operator()(const GFSpec&) const { return "gf"; }
    std::string operator()(const MMSpec&) const { return "mm"; }
    std::string operator()(const KyivSpec&) const { return "kyiv"; }
    std::string operator()(const RepeatedTermSpec&) const { return "repeated"; }
    std::string operator()(const ExplicitSpec&) const { return "explicit"; }
  };
  return std::visit(V{}, spec);
}

inline TermStream make_stream(const FamilySpec& spec) {
  struct V {
    TermStream operator()(const MultigeometricSpec& s) const { return mg_stream(s); }
    TermStream operator()(const GFSpec& s) const { return gf_stream(s); }
    TermStream operator()(const MMSpec& s) const { return mm_stream(s); }
    TermStream operator()(const KyivSpec& s) const { return kyiv_stream(s); }
    TermStream operator()(const RepeatedTermSpec& s) const { return repeated_stream(s); }
    TermStream operator()(const ExplicitSpec& s) const { return explicit_stream(s); }
  };
  return std::visit(V{}, spec);
}

/// The periodic tail of an eventually geometric stream, read as a
/// multigeometric series: block b_i = k_i * ratio. Its achievement set is
/// E_P (P = prefix length), which has the same topological type as E.
inline MultigeometricSpec periodic_part_as_multigeometric(const TermStream& s) {
  MultigeometricSpec spec;
  for (const auto& b : s.block()) spec.k.push_back(b / s.ratio());
  spec.q = s.ratio();
  spec.validate();
  return spec;
}

// ---------------------------------------------------------------------------
// Standardness ratios
// ---------------------------------------------------------------------------

/// Exact lower-bound ratio |P^{(k)}| / r at group k for one of the three
/// non-multigeometric families, with its limsup / liminf over the periodic
/// regime and the family's general bound (7/11, 5/9, 1/2).
struct StandardnessReport {
  std::size_t k = 0;
  Rational ratio;
  Rational limsup;
  Rational liminf;
  Rational bound;
  std::vector<Rational> periodic_values;  // ratio over one period of the periodic regime
};

namespace detail {
template <class RatioFn>
StandardnessReport standardness_from(RatioFn&& ratio_at, std::size_t k, std::size_t first_periodic, std::size_t L,
                                     Rational bound) {
  if (k == 0) throw std::out_of_range("standardness_ratio: k >= 1 required");
  StandardnessReport rep;
  rep.k = k;
  rep.ratio = ratio_at(k);
  rep.bound = std::move(bound);
  for (std::size_t j = first_periodic; j < first_periodic + L; ++j) rep.periodic_values.push_back(ratio_at(j));
  rep.limsup = *std::max_element(rep.periodic_values.begin(), rep.periodic_values.end());
  rep.liminf = *std::min_element(rep.periodic_values.begin(), rep.periodic_values.end());
  return rep;
}
}  // namespace detail

/// sum_{i>k}(s_i - m_i) q_i / sum_{i>k}(s_i + m_i) q_i.
inline StandardnessReport standardness_ratio(const GFSpec& spec, std::size_t k) {
  spec.validate_structure();
  auto ratio_at = [&](std::size_t j) { return gf_weighted_tail(spec, j, -1) / gf_weighted_tail(spec, j, +1); };
  return detail::standardness_from(ratio_at, k, std::max<std::size_t>(spec.transient(), 1), spec.joint_period(),
                                   Rational(7, 11));
}

/// sum_{i>k}(3 * 2^{n_i} - 1) q_i / sum_{i>k}(5 * 2^{n_i} - 1) q_i.
inline StandardnessReport standardness_ratio(const MMSpec& spec, std::size_t k) {
  spec.validate();
  const std::size_t P0 = spec.transient(), L = spec.joint_period();
  Rational R = mm_q(spec, P0 + 1 + L) / mm_q(spec, P0 + 1);
  auto weighted = [&](std::size_t j, long c) {
    auto g = [&](std::size_t i) {
      return Rational(Integer(Integer(c) * (Integer(1) << static_cast<unsigned long>(spec.n.at(i))) - 1)) * mm_q(spec, i);
    };
    return periodic_tail_sum(g, j, P0, L, R);
  };
  auto ratio_at = [&](std::size_t j) { return weighted(j, 3) / weighted(j, 5); };
  return detail::standardness_from(ratio_at, k, std::max<std::size_t>(P0, 1), L, Rational(5, 9));
}

/// m_k sum_{n>k}(s_n - m_n + 6 - 4/m_n) a_n / (2 a_k).
inline StandardnessReport standardness_ratio(const KyivSpec& spec, std::size_t k) {
  spec.validate_structure();
  const std::size_t P0 = spec.transient(), L = spec.joint_period();
  Rational R = kyiv_values(spec, P0 + 1 + L).a / kyiv_values(spec, P0 + 1).a;
  auto g = [&](std::size_t n) {
    long m = spec.m.at(n), s = spec.s.at(n);
    return (Rational(s - m + 6) - Rational(4, m)) * kyiv_values(spec, n).a;
  };
  auto ratio_at = [&](std::size_t j) {
    Rational tail = periodic_tail_sum(g, j, P0, L, R);
    return Rational(spec.m.at(j)) * tail / (Rational(2) * kyiv_values(spec, j).a);
  };
  return detail::standardness_from(ratio_at, k, P0 + 1, L, Rational(1, 2));
}

}  // namespace cantorval
