#include <gtest/gtest.h>

#include <vector>

#include "cantorval/uniqueness.hpp"
#include "oracles.hpp"

using namespace cantorval;

namespace {
Rational R(const char* s) { return Rational::parse(s); }
EventuallyPeriodic<long> constant(long v) { return EventuallyPeriodic<long>::constant(v); }
TermStream planted() { return TermStream({R("1")}, {R("1/2"), R("1/2")}, R("1/2")); }
TermStream middle_thirds() { return TermStream({}, {R("2/3")}, R("1/3")); }
TermStream gn() { return TermStream({}, {R("3/4"), R("1/2")}, R("1/4")); }

Rational sum_indices(const TermStream& s, const std::vector<std::size_t>& idx) {
  Rational out;
  for (auto i : idx) out += s.term(i);
  return out;
}

/// Union over index sets A != B of [f_A, f_A + r] n [f_B, f_B + r].
IntervalSet brute_sk(const TermStream& s, std::size_t k) {
  auto terms = s.terms(k);
  const Rational r = s.tail(k);
  std::vector<Rational> f;
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    Rational v;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1U) v += terms[i];
    f.push_back(v);
  }
  std::vector<Interval> parts;
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = a + 1; b < f.size(); ++b) {
      Rational lo = max(f[a], f[b]), hi = min(f[a], f[b]) + r;
      if (lo <= hi) parts.emplace_back(lo, hi);
    }
  return IntervalSet::normalize(parts);
}
}  // namespace

TEST(Collisions, PlantedRepeats) {
  auto c = collisions(planted(), 3);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].value, R("1/2"));
  EXPECT_EQ(c[1].value, Rational(1));
  EXPECT_EQ(c[2].value, R("3/2"));
  for (const auto& x : c) {
    EXPECT_EQ(x.multiplicity, 2);
    EXPECT_NE(x.first, x.second);
    EXPECT_EQ(sum_indices(planted(), x.first), x.value);
    EXPECT_EQ(sum_indices(planted(), x.second), x.value);
  }
  EXPECT_TRUE(collisions(middle_thirds(), 10).empty());
  EXPECT_TRUE(collisions(gn(), 0).empty());
}

TEST(CollisionsProperty, MatchBruteForceMultiplicities) {
  oracle::Gen g(71);
  for (int i = 0; i < 40; ++i) {
    auto s = g.stream(3, 3);
    const std::size_t k = static_cast<std::size_t>(g.integer(1, 10));
    auto brute = oracle::subset_sums(s.terms(k));
    std::vector<std::pair<Rational, long>> expected;
    for (const auto& [v, n] : brute)
      if (n >= 2) expected.emplace_back(v, n);
    auto c = collisions(s, k);
    ASSERT_EQ(c.size(), expected.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      EXPECT_EQ(c[j].value, expected[j].first);
      EXPECT_EQ(c[j].multiplicity, expected[j].second);
      EXPECT_NE(c[j].first, c[j].second);
      EXPECT_EQ(sum_indices(s, c[j].first), c[j].value);
      EXPECT_EQ(sum_indices(s, c[j].second), c[j].value);
    }
  }
}

TEST(SkOuter, Examples) {
  // Middle thirds: disjoint bricks, no overlaps at all.
  EXPECT_TRUE(sk_outer(middle_thirds(), 6).empty());
  auto p = sk_outer(planted(), 3);
  EXPECT_EQ(p, brute_sk(planted(), 3));
  EXPECT_TRUE(is_subset(IntervalSet{{R("1/2"), R("3/4")}}, p));
  EXPECT_THROW(sk_outer(gn(), 0), std::invalid_argument);
}

TEST(SkOuterProperty, MatchesPairwiseBrickIntersections) {
  oracle::Gen g(72);
  for (int i = 0; i < 40; ++i) {
    auto s = g.stream(2, 3);
    const std::size_t k = static_cast<std::size_t>(g.integer(1, 8));
    EXPECT_EQ(sk_outer(s, k), brute_sk(s, k)) << "k=" << k;
  }
}

TEST(RepetitionReport, Bundles) {
  auto rep = repetition_report(planted(), 3);
  EXPECT_EQ(rep.k, 3u);
  EXPECT_EQ(rep.collisions.size(), 3u);
  EXPECT_EQ(rep.sk_outer, sk_outer(planted(), 3));
}

TEST(Semifast, Examples) {
  EXPECT_TRUE(semifast_check({GeometricSequence::power(1, R("1/3")), constant(1)}).semifast);
  auto d = semifast_check({GeometricSequence::power(1, R("1/2")), constant(1)});
  EXPECT_FALSE(d.semifast);
  EXPECT_EQ(*d.first_violation, 1u);
  EXPECT_TRUE(semifast_check({GeometricSequence::power(1, R("1/4")), constant(2)}).semifast);
  EXPECT_FALSE(semifast_check({GeometricSequence::power(1, R("1/3")), constant(2)}).semifast);
}

TEST(UniquenessOracle, Examples) {
  EXPECT_FALSE(representation_uniqueness_oracle({GeometricSequence::power(1, R("1/2")), constant(1)}, 2));
  EXPECT_TRUE(representation_uniqueness_oracle({GeometricSequence::power(1, R("1/4")), constant(2)}, 4));
  EXPECT_TRUE(representation_uniqueness_oracle({GeometricSequence::power(1, R("1/2")), constant(1)}, 0));
}

// Semifast makes every finite representation unique with room to spare.
TEST(SemifastProperty, ImpliesUniqueRepresentations) {
  oracle::Gen g(73);
  int semifast = 0;
  for (int i = 0; i < 80; ++i) {
    RepeatedTermSpec spec{GeometricSequence::power(1, Rational(1, g.integer(2, 7))), constant(g.integer(1, 4))};
    if (g.coin()) spec.K = {{g.integer(1, 3)}, {g.integer(1, 3), g.integer(1, 3)}};
    if (!semifast_check(spec).semifast) continue;
    ++semifast;
    for (std::size_t d = 1; d <= 5; ++d) EXPECT_TRUE(representation_uniqueness_oracle(spec, d));
  }
  EXPECT_GT(semifast, 10);
}

TEST(TailUniqueness, Examples) {
  EXPECT_TRUE(tail_uniqueness_point(gn(), 2));
  EXPECT_FALSE(tail_uniqueness_point(gn(), 1));
  EXPECT_TRUE(tail_uniqueness_point(middle_thirds(), 4));
  EXPECT_THROW(tail_uniqueness_point(gn(), 0), std::invalid_argument);
}

TEST(UDensity, EvidenceAndHorizon) {
  auto p = u_density_evidence(planted(), {1, 3, 5}, 4, 5);
  for (const auto& d : p) EXPECT_TRUE(d.nonempty);
  auto t = u_density_evidence(middle_thirds(), {1, 2}, 8, 5);
  for (const auto& d : t) EXPECT_FALSE(d.nonempty);
  EXPECT_THROW(u_density_evidence(planted(), {6}, 4, 5), std::out_of_range);
}
