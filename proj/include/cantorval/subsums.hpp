#pragma once

#include <climits>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "cantorval/errors.hpp"
#include "cantorval/point_set.hpp"
#include "cantorval/term_stream.hpp"

namespace cantorval {

/// Incremental enumerator of finite subsum sets F_0 = {0}, F_1, F_2, ...
/// with multiplicities, via F_{k+1} = merge(F_k, F_k + x_{k+1}).
///
/// When every term is an integer multiple of 1/D and D * sum(terms) fits in
/// 62 bits, values are kept as int64 numerators over D (lattice mode). The
/// output is identical to the generic rational path; only the constant
/// factor differs.
class SubsumBuilder {
 public:
  explicit SubsumBuilder(std::vector<Rational> terms, std::size_t cap = kDefaultCap,
                         std::string stage = "finite_subsums")
      : terms_(std::move(terms)), cap_(cap), stage_(std::move(stage)) {
    if (cap_ == 0) throw std::invalid_argument("SubsumBuilder: cap must be positive");
    Integer den = 1;
    for (const auto& t : terms_) den = lcm(den, t.denominator());
    Integer total = 0;
    bool fits = true;
    for (const auto& t : terms_) {
      Integer n = t.numerator() * (den / t.denominator());
      total += n;
      if (!n.fits_slong_p()) fits = false;
    }
    const Integer limit = Integer(1) << 62;
    lattice_ = fits && total < limit;
    if (lattice_) {
      denom_ = den;
      for (const auto& t : terms_) int_terms_.push_back(Integer(t.numerator() * (den / t.denominator())).get_si());
      ivals_.push_back(0);
    } else {
      rvals_.emplace_back(0);
    }
    counts_.emplace_back(1);
  }

  std::size_t depth() const noexcept { return depth_; }
  std::size_t max_depth() const noexcept { return terms_.size(); }
  std::size_t size() const noexcept { return counts_.size(); }
  bool lattice() const noexcept { return lattice_; }

  void step() {
    if (depth_ >= terms_.size()) throw std::out_of_range("SubsumBuilder::step: no more terms");
    if (lattice_)
      merge_shift(ivals_, int_terms_[depth_]);
    else
      merge_shift(rvals_, terms_[depth_]);
    ++depth_;
  }

  void advance_to(std::size_t k) {
    while (depth_ < k) step();
  }

  PointSet points() const {
    std::vector<Rational> vals;
    vals.reserve(counts_.size());
    if (lattice_) {
      for (auto v : ivals_) vals.emplace_back(Integer(static_cast<long>(v)), denom_);
    } else {
      vals = rvals_;
    }
    return PointSet(std::move(vals), counts_);
  }

 private:
  template <class V>
  void merge_shift(std::vector<V>& vals, const V& shift) {
    std::vector<V> out;
    std::vector<Integer> cnt;
    out.reserve(std::min(cap_ + 1, 2 * vals.size()));
    cnt.reserve(out.capacity());
    std::size_t i = 0, j = 0;
    const std::size_t n = vals.size();
    auto push = [&](V v, const Integer& c) {
      if (!out.empty() && out.back() == v) {
        cnt.back() += c;
        return;
      }
      if (out.size() == cap_) throw CapacityError(stage_, cap_);
      out.push_back(std::move(v));
      cnt.push_back(c);
    };
    while (i < n || j < n) {
      if (j == n || (i < n && vals[i] <= vals[j] + shift)) {
        push(vals[i], counts_[i]);
        ++i;
      } else {
        push(vals[j] + shift, counts_[j]);
        ++j;
      }
    }
    vals = std::move(out);
    counts_ = std::move(cnt);
  }

  std::vector<Rational> terms_;
  std::size_t cap_;
  std::string stage_;
  std::size_t depth_ = 0;
  bool lattice_ = false;
  Integer denom_ = 1;
  std::vector<std::int64_t> int_terms_;
  std::vector<std::int64_t> ivals_;
  std::vector<Rational> rvals_;
  std::vector<Integer> counts_;
};

/// Subsums of an explicit finite list, with multiplicities.
inline PointSet subsums_of(std::span<const Rational> terms, std::size_t cap = kDefaultCap,
                           std::string stage = "subsums") {
  SubsumBuilder b(std::vector<Rational>(terms.begin(), terms.end()), cap, std::move(stage));
  b.advance_to(terms.size());
  return b.points();
}

/// F_k of the stream: all sums over subsets of {1..k}, with the number of
/// subsets realizing each value. F_0 = {0}.
inline PointSet finite_subsums(const TermStream& s, std::size_t k, std::size_t cap = kDefaultCap) {
  auto terms = s.terms(k);
  return subsums_of(terms, cap, "finite_subsums");
}

/// Subsum table carrying, per value, one realizing subset and (for values
/// of multiplicity >= 2) a second, distinct one. Subsets are bit masks over
/// term indices 1..k (bit i-1 for index i), so k <= 64.
struct WitnessedSubsums {
  PointSet points;
  std::vector<std::uint64_t> first;
  std::vector<std::optional<std::uint64_t>> second;
};

inline WitnessedSubsums subsums_with_witnesses(std::span<const Rational> terms, std::size_t cap = kDefaultCap) {
  if (terms.size() > 64) throw std::invalid_argument("subsums_with_witnesses: at most 64 terms");
  std::vector<Rational> vals{Rational(0)};
  std::vector<Integer> cnt{Integer(1)};
  std::vector<std::uint64_t> first{0};
  std::vector<std::optional<std::uint64_t>> second{std::nullopt};
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Rational& x = terms[k];
    const std::uint64_t bit = std::uint64_t{1} << k;
    std::vector<Rational> nv;
    std::vector<Integer> nc;
    std::vector<std::uint64_t> nf;
    std::vector<std::optional<std::uint64_t>> ns;
    auto push = [&](Rational v, const Integer& c, std::uint64_t f, std::optional<std::uint64_t> s) {
      if (!nv.empty() && nv.back() == v) {
        nc.back() += c;
        if (!ns.back()) ns.back() = f;
        return;
      }
      if (nv.size() == cap) throw CapacityError("subsums_with_witnesses", cap);
      nv.push_back(std::move(v));
      nc.push_back(c);
      nf.push_back(f);
      ns.push_back(s);
    };
    std::size_t i = 0, j = 0;
    const std::size_t n = vals.size();
    while (i < n || j < n) {
      if (j == n || (i < n && vals[i] <= vals[j] + x)) {
        push(vals[i], cnt[i], first[i], second[i]);
        ++i;
      } else {
        push(vals[j] + x, cnt[j], first[j] | bit, second[j] ? std::optional(*second[j] | bit) : std::nullopt);
        ++j;
      }
    }
    vals = std::move(nv);
    cnt = std::move(nc);
    first = std::move(nf);
    second = std::move(ns);
  }
  return {PointSet(std::move(vals), std::move(cnt)), std::move(first), std::move(second)};
}

/// Minkowski sum {u + v} with multiplicities multiplied and summed.
/// Heap merge of |a| sorted translates of b, deduplicating on the fly.
inline PointSet group_convolve(const PointSet& a, const PointSet& b, std::size_t cap = kDefaultCap) {
  if (a.empty() || b.empty()) return PointSet();
  const PointSet& outer = a.size() <= b.size() ? a : b;
  const PointSet& inner = a.size() <= b.size() ? b : a;
  struct Cursor {
    Rational value;
    std::size_t o;
    std::size_t i;
  };
  auto greater = [](const Cursor& x, const Cursor& y) { return y.value < x.value; };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(greater)> heap(greater);
  for (std::size_t o = 0; o < outer.size(); ++o) heap.push({outer[o] + inner[0], o, 0});
  std::vector<Rational> vals;
  std::vector<Integer> cnt;
  while (!heap.empty()) {
    Cursor c = heap.top();
    heap.pop();
    Integer m = outer.count(c.o) * inner.count(c.i);
    if (!vals.empty() && vals.back() == c.value) {
      cnt.back() += m;
    } else {
      if (vals.size() == cap) throw CapacityError("group_convolve", cap);
      vals.push_back(c.value);
      cnt.push_back(std::move(m));
    }
    if (c.i + 1 < inner.size()) heap.push({outer[c.o] + inner[c.i + 1], c.o, c.i + 1});
  }
  return PointSet(std::move(vals), std::move(cnt));
}

}  // namespace cantorval
