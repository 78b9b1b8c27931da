#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cantorval/term_stream.hpp"

namespace cantorval {

/// Split of 1..horizon into Kakeya indices (x_n > r_n) and reversed ones.
struct KakeyaSplit {
  std::size_t horizon = 0;
  std::vector<std::size_t> in_K;
  std::vector<std::size_t> in_Kc;
};

inline KakeyaSplit kakeya_split(const TermStream& s, std::size_t horizon) {
  if (horizon == 0) throw std::invalid_argument("kakeya_split: horizon must be >= 1");
  KakeyaSplit out;
  out.horizon = horizon;
  for (std::size_t n = 1; n <= horizon; ++n) {
    if (s.term(n) > s.tail(n))
      out.in_K.push_back(n);
    else
      out.in_Kc.push_back(n);
  }
  return out;
}

enum class KakeyaRelation { Greater, Equal, Less };

/// Exact description of the whole (infinite) Kakeya pattern.
///
/// In the periodic part x_{n+L} = ratio * x_n and r_{n+L} = ratio * r_n, so
/// the comparison x_n vs r_n repeats with period L there. The relations at
/// indices 1..P+L therefore determine K and K^c completely.
struct KakeyaPattern {
  std::size_t prefix_length = 0;
  std::size_t period = 0;
  std::vector<KakeyaRelation> transient;  // indices 1..P
  std::vector<KakeyaRelation> periodic;   // indices P+1..P+L, repeating

  bool K_finite() const {
    for (auto r : periodic)
      if (r == KakeyaRelation::Greater) return false;
    return true;
  }
  bool Kc_finite() const {
    for (auto r : periodic)
      if (r != KakeyaRelation::Greater) return false;
    return true;
  }
  /// Finitely many n with x_n < r_n.
  bool strict_reversed_finite() const {
    for (auto r : periodic)
      if (r == KakeyaRelation::Less) return false;
    return true;
  }
  /// x_n = r_n for all sufficiently large n.
  bool eventually_equal() const {
    for (auto r : periodic)
      if (r != KakeyaRelation::Equal) return false;
    return true;
  }
  KakeyaRelation at(std::size_t n) const {
    if (n == 0) throw std::out_of_range("KakeyaPattern::at: indices start at 1");
    if (n <= prefix_length) return transient[n - 1];
    return periodic[(n - prefix_length - 1) % period];
  }
  bool in_K(std::size_t n) const { return at(n) == KakeyaRelation::Greater; }
};

inline KakeyaPattern kakeya_pattern(const TermStream& s) {
  KakeyaPattern p;
  p.prefix_length = s.prefix_length();
  p.period = s.period();
  auto rel = [&](std::size_t n) {
    auto x = s.term(n);
    auto r = s.tail(n);
    if (x > r) return KakeyaRelation::Greater;
    if (x == r) return KakeyaRelation::Equal;
    return KakeyaRelation::Less;
  };
  for (std::size_t n = 1; n <= p.prefix_length; ++n) p.transient.push_back(rel(n));
  for (std::size_t n = p.prefix_length + 1; n <= p.prefix_length + p.period; ++n) p.periodic.push_back(rel(n));
  return p;
}

}  // namespace cantorval
