#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cantorval {

using Integer = mpz_class;

/// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
///
/// Thin value wrapper over GMP's mpq_class. Every operation returns a
/// canonicalized result; there is no rounding anywhere. Serialized as "p/q",
/// always with an explicit denominator ("3/1", "-5/12").
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  explicit Rational(const Integer& value) : q_(value) {}
  explicit Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

  /// Accepts "p/q", "p" or "-p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto first = s.find_first_not_of(" \t\n");
    auto last = s.find_last_not_of(" \t\n");
    if (first == std::string::npos) throw std::invalid_argument("Rational: empty string");
    s = s.substr(first, last - first + 1);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& part) {
      if (part.empty()) return false;
      std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') return false;
      return true;
    };
    auto to_integer = [](std::string part) {
      if (!part.empty() && part[0] == '+') part.erase(0, 1);
      return Integer(part, 10);
    };
    if (slash == std::string::npos) {
      if (!valid_int(s)) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
      return Rational(to_integer(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    Integer d = to_integer(den);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    return Rational(to_integer(num), d);
  }

  std::string str() const { return numerator().get_str() + "/" + denominator().get_str(); }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const noexcept { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  Integer floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  Integer ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  Rational pow(unsigned long e) const {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
    return Rational(mpq_class(n, d));
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Smallest rational >= x whose denominator does not exceed max_den.
/// Linear in max_den; intended for small denominator bounds.
inline Rational ceil_with_denominator(const Rational& x, unsigned long max_den) {
  Rational best(x.ceil());
  for (unsigned long d = 2; d <= max_den; ++d) {
    Rational dd(static_cast<long>(d));
    Rational cand(Rational(x * dd).ceil(), Integer(d));
    if (cand < best) best = cand;
  }
  return best;
}

/// Largest rational <= x whose denominator does not exceed max_den.
inline Rational floor_with_denominator(const Rational& x, unsigned long max_den) {
  Rational best(x.floor());
  for (unsigned long d = 2; d <= max_den; ++d) {
    Rational dd(static_cast<long>(d));
    Rational cand(Rational(x * dd).floor(), Integer(d));
    if (best < cand) best = cand;
  }
  return best;
}

}  // namespace cantorval

template <>
struct std::hash<cantorval::Rational> {
  std::size_t operator()(const cantorval::Rational& r) const noexcept {
    std::size_t h1 = std::hash<std::string>{}(r.numerator().get_str(16));
    std::size_t h2 = std::hash<std::string>{}(r.denominator().get_str(16));
    return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL);
  }
};
