#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/rational.hpp"

namespace cantorval {

/// pre_1..pre_P, then period_1..period_L repeated forever. 1-based access.
template <class T>
struct EventuallyPeriodic {
  std::vector<T> pre;
  std::vector<T> period;

  static EventuallyPeriodic constant(T value) { return {{}, {std::move(value)}}; }

  const T& at(std::size_t n) const {
    if (n == 0) throw std::out_of_range("EventuallyPeriodic::at: indices start at 1");
    if (period.empty()) throw SpecError("EventuallyPeriodic: empty period");
    if (n <= pre.size()) return pre[n - 1];
    return period[(n - pre.size() - 1) % period.size()];
  }

  friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;
};

/// pre_1..pre_P, then period_1..period_L, the t-th repetition scaled by ratio^t.
struct GeometricSequence {
  std::vector<Rational> pre;
  std::vector<Rational> period;
  Rational ratio;

  /// c * base^n for n >= 1.
  static GeometricSequence power(const Rational& c, const Rational& base) { return {{}, {c * base}, base}; }

  Rational at(std::size_t n) const {
    if (n == 0) throw std::out_of_range("GeometricSequence::at: indices start at 1");
    if (period.empty()) throw SpecError("GeometricSequence: empty period");
    if (n <= pre.size()) return pre[n - 1];
    std::size_t idx = n - pre.size() - 1;
    return period[idx % period.size()] * ratio.pow(idx / period.size());
  }

  friend bool operator==(const GeometricSequence&, const GeometricSequence&) = default;
};

/// Exact sum_{i > k} g(i) for a sequence with g(i + L) = R * g(i) whenever
/// i > P0. Finitely many direct terms plus one geometric block.
template <class F>
Rational periodic_tail_sum(F&& g, std::size_t k, std::size_t P0, std::size_t L, const Rational& R) {
  if (L == 0) throw std::invalid_argument("periodic_tail_sum: empty period");
  if (!R.is_positive() || !(R < Rational(1))) throw std::invalid_argument("periodic_tail_sum: ratio outside (0,1)");
  std::size_t A = std::max(k + 1, P0 + 1);
  Rational sum;
  for (std::size_t i = k + 1; i < A; ++i) sum += g(i);
  Rational block;
  for (std::size_t i = A; i < A + L; ++i) block += g(i);
  return sum + block / (Rational(1) - R);
}

inline std::size_t lcm_size(std::size_t a, std::size_t b) { return std::lcm(a, b); }

}  // namespace cantorval
