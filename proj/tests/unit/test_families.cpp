#include <gtest/gtest.h>

#include <vector>

#include "cantorval/families.hpp"
#include "cantorval/tightness.hpp"
#include "oracles.hpp"

using namespace cantorval;

namespace {
Rational R(const char* s) { return Rational::parse(s); }
EventuallyPeriodic<long> constant(long v) { return EventuallyPeriodic<long>::constant(v); }
GFSpec gf_standard() { return {constant(2), constant(4), GeometricSequence::power(1, R("1/10"))}; }
KyivSpec kyiv48() { return {constant(4), constant(8)}; }
MMSpec mm1() { return {constant(1)}; }

std::vector<Rational> brute_values(const std::vector<Rational>& terms) { return oracle::keys(oracle::subset_sums(terms)); }
}  // namespace

// ---------------------------------------------------------------------------
// Multigeometric
// ---------------------------------------------------------------------------

TEST(Multigeometric, StreamExamples) {
  MultigeometricSpec gn{{3, 2}, R("1/4")};
  auto s = mg_stream(gn);
  EXPECT_EQ(gn.r0(), R("5/3"));
  EXPECT_EQ(s.term(1), R("3/4"));
  EXPECT_EQ(s.term(2), R("1/2"));
  EXPECT_EQ(s.term(3), R("3/16"));
  EXPECT_EQ(s.tail(2), R("5/12"));
  for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(s.tail(2 * j), gn.r0() * gn.q.pow(j));
  auto d = mg_stream({{1}, R("1/2")});
  for (std::size_t n = 1; n < 10; ++n) EXPECT_EQ(d.term(n), d.tail(n));
}

TEST(Multigeometric, BlockExamples) {
  EXPECT_EQ(mg_block({{3, 2}, R("1/4")}).values(), (std::vector<Rational>{0, 2, 3, 5}));
  EXPECT_EQ(mg_block({{1}, R("1/2")}).values(), (std::vector<Rational>{0, 1}));
  EXPECT_EQ(mg_block({{4, 3, 2}, R("1/5")}).values(), (std::vector<Rational>{0, 2, 3, 4, 5, 6, 7, 9}));
}

TEST(Multigeometric, Validation) {
  EXPECT_THROW((MultigeometricSpec{{2, 3}, R("1/4")}).validate(), SpecError);
  EXPECT_THROW((MultigeometricSpec{{2}, R("1")}).validate(), SpecError);
  EXPECT_THROW((MultigeometricSpec{{}, R("1/2")}).validate(), SpecError);
  EXPECT_THROW((MultigeometricSpec{{4, 1}, R("1/2")}).validate(), SpecError);  // 1 < 4 * 1/2
}

// ---------------------------------------------------------------------------
// Generalized Ferens
// ---------------------------------------------------------------------------

TEST(GF, SFunction) {
  EXPECT_EQ(gf_s(2, 4), 12);
  for (long p = 1; p < 6; ++p)
    for (long r = 1; r < 8; ++r) {
      long brute = 0;
      for (long i = 1; i <= r - 1; ++i) brute += p + i;
      EXPECT_EQ(gf_s(p, r), brute);
    }
}

TEST(GF, ValidateExamples) {
  auto rep = gf_validate(gf_standard());
  EXPECT_TRUE(rep.gf1_holds);
  EXPECT_TRUE(rep.gf2_holds);
  for (long s : rep.s) EXPECT_EQ(s, 12);
  EXPECT_EQ(rep.gf2.front().lhs, R("2/10"));
  EXPECT_EQ(rep.gf2.front().rhs, R("14/90"));

  GFSpec bad{constant(2), constant(4), GeometricSequence::power(1, R("1/2"))};
  auto b = gf_validate(bad);
  EXPECT_FALSE(b.gf2_holds);
  ASSERT_TRUE(b.gf2_first_failure);
  EXPECT_EQ(*b.gf2_first_failure, 1u);
  EXPECT_EQ(b.gf2.front().lhs, Rational(1));
  EXPECT_EQ(b.gf2.front().rhs, Rational(7));
}

TEST(GF, StructuralErrors) {
  EXPECT_THROW(gf_validate({constant(1), constant(4), GeometricSequence::power(1, R("1/10"))}), SpecError);
  EXPECT_THROW(gf_validate({constant(3), constant(3), GeometricSequence::power(1, R("1/10"))}), SpecError);
}

TEST(GF, GroupTermsAndFactSet) {
  auto spec = gf_standard();
  EXPECT_EQ(gf_group_terms(spec, 1), (std::vector<Rational>{R("5/10"), R("4/10"), R("3/10"), R("2/10")}));
  auto set = gf_group_set(spec, 1);
  EXPECT_EQ(set.values(), brute_values(gf_group_terms(spec, 1)));
  EXPECT_EQ(set.max(), R("14/10"));
  EXPECT_EQ(set.values().front(), Rational(0));
  auto s = gf_stream(spec);
  EXPECT_EQ(s.term(5), R("5/100"));
  EXPECT_EQ(s.tail(4), R("14/90"));
}

TEST(GFProperty, FactSetMatchesBruteForce) {
  oracle::Gen g(21);
  for (int i = 0; i < 25; ++i) {
    EventuallyPeriodic<long> m, k;
    for (int j = 0; j < 3; ++j) {
      long mj = g.integer(2, 5);
      m.period.push_back(mj);
      k.period.push_back(g.integer(mj + 1, std::min<long>(mj + 8, 12)));
    }
    GFSpec spec{m, k, GeometricSequence::power(1, Rational(1, g.integer(20, 200)))};
    for (std::size_t n = 1; n <= 2; ++n)
      EXPECT_EQ(gf_group_set(spec, n).values(), brute_values(gf_group_terms(spec, n))) << "n=" << n;
  }
}

// ---------------------------------------------------------------------------
// Marchwicki-Miska
// ---------------------------------------------------------------------------

TEST(MM, BlockExamples) {
  EXPECT_EQ(mm_block(1).values(), (std::vector<Rational>{0, 2, 3, 4, 5, 6, 7, 9}));
  EXPECT_EQ(mm_block(1).values(), brute_values({4, 3, 2}));
  EXPECT_EQ(mm_b(2), (std::vector<Integer>{8, 5, 4, 2}));
  EXPECT_THROW(mm_block(0), SpecError);
}

TEST(MM, BlockFormulaMatchesBruteForce) {
  for (long n = 1; n <= 8; ++n) {
    std::vector<Rational> terms;
    for (const auto& b : mm_b(n)) terms.emplace_back(b);
    EXPECT_EQ(mm_block(n).values(), brute_values(terms)) << "n=" << n;
  }
}

TEST(MM, RatiosAndRemainders) {
  auto spec = mm1();
  auto s = mm_stream(spec);
  for (std::size_t k = 1; k < 6; ++k) {
    EXPECT_EQ(mm_q(spec, k + 1), mm_q(spec, k) / Rational(6));
    EXPECT_EQ(mm_remainder(spec, k), R("9/5") * mm_q(spec, k));
    EXPECT_EQ(s.tail(mm_group_end(spec, k)), mm_remainder(spec, k));
  }
  EXPECT_EQ(mm_remainder(spec, 1), R("9/5"));
}

TEST(MM, VaryingBlockGaps) {
  MMSpec spec{{{2}, {1, 3}}};
  auto s = mm_stream(spec);
  for (std::size_t k = 1; k < 6; ++k) EXPECT_EQ(s.tail(mm_group_end(spec, k)), mm_remainder(spec, k));
  EXPECT_EQ(mm_group_end(spec, 1), 4u);
  EXPECT_EQ(mm_group_end(spec, 2), 7u);
}

// ---------------------------------------------------------------------------
// Kyiv
// ---------------------------------------------------------------------------

TEST(Kyiv, ClosedFormExamples) {
  auto v = kyiv_values(kyiv48(), 1);
  EXPECT_EQ(v.a, R("2/25"));
  EXPECT_EQ(v.r_N, R("1/25"));
  EXPECT_EQ(v.G, R("24/25"));
  EXPECT_EQ(v.G + v.r_N, Rational(1));
  EXPECT_EQ(kyiv_values(kyiv48(), 2).a / v.a, R("1/25"));
  EXPECT_EQ(kyiv_estrella(kyiv48(), 1), 24);
}

TEST(Kyiv, GroupStructure) {
  auto spec = kyiv48();
  auto g = kyiv_group_terms(spec, 1);
  ASSERT_EQ(g.size(), 13u);
  for (int i = 0; i < 9; ++i) EXPECT_EQ(g[i], R("2/25"));
  for (int i = 9; i < 13; ++i) EXPECT_EQ(g[i], R("3/4") * R("2/25"));
  Rational sum;
  for (const auto& x : g) sum += x;
  EXPECT_EQ(sum, kyiv_values(spec, 1).G);
  auto D = kyiv_D(spec, 1);
  EXPECT_EQ(D.size(), 37u);
  EXPECT_EQ(D.min(), R("3/2") * R("2/25"));
  EXPECT_EQ(D.max(), Rational(42) * R("2/25") / Rational(4));
}

TEST(Kyiv, StreamTailsTelescope) {
  auto spec = kyiv48();
  auto s = kyiv_stream(spec);
  EXPECT_EQ(s.tail(0), Rational(1));
  Rational groups;
  for (std::size_t k = 1; k <= 10; ++k) {
    auto v = kyiv_values(spec, k);
    groups += v.G;
    EXPECT_EQ(s.tail(kyiv_group_end(spec, k)), v.r_N);
    EXPECT_EQ(groups + v.r_N, Rational(1));
    // Monotone across the group boundary: ((m_k - 1)/m_k) a_k >= a_{k+1}.
    EXPECT_GE(R("3/4") * v.a, kyiv_values(spec, k + 1).a);
  }
}

TEST(Kyiv, RecurrenceAgreesWithClosedForm) {
  KyivSpec spec{{{5, 3}, {4, 6}}, {{12, 7}, {9, 20}}};
  for (std::size_t k = 1; k <= 20; ++k) EXPECT_NO_THROW(kyiv_values(spec, k));
  auto s = kyiv_stream(spec);
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(s.tail(kyiv_group_end(spec, k)), kyiv_values(spec, k).r_N);
}

TEST(Kyiv, AssumptionReports) {
  auto ok = kyiv_validate(kyiv48());
  EXPECT_TRUE(ok.all_pass());
  auto weak = kyiv_validate({constant(3), constant(5)});
  EXPECT_TRUE(weak.assumption1);
  EXPECT_TRUE(weak.assumption2);
  EXPECT_FALSE(weak.assumption3);
  EXPECT_EQ(weak.limsup_m, 3);
  auto bad = kyiv_validate({constant(4), constant(7)});
  EXPECT_FALSE(bad.assumption1);
  EXPECT_EQ(*bad.assumption1_failure, 1u);
}

TEST(KyivProperty, DContainedInGroupSetAndDeltaBound) {
  oracle::Gen g(31);
  int tested = 0;
  while (tested < 30) {
    long m = g.integer(3, 6);
    long s = g.integer(3 * m - 4, 3 * m + 6);
    if (s + m + 1 > 20) continue;
    KyivSpec spec{constant(m), constant(s)};
    auto S = kyiv_group_set(spec, 1);
    auto D = kyiv_D(spec, 1);
    EXPECT_TRUE(D.is_subset_of(S)) << "m=" << m << " s=" << s;
    auto a = kyiv_values(spec, 1).a;
    EXPECT_GE(delta(S, a / Rational(m)), Rational(s - m + 6) * a - Rational(4) * a / Rational(m))
        << "m=" << m << " s=" << s;
    ++tested;
  }
}

TEST(Kyiv, GroupSetCapacity) {
  EXPECT_THROW(kyiv_group_set({constant(4), constant(30)}, 1), CapacityError);
}

// ---------------------------------------------------------------------------
// Standardness
// ---------------------------------------------------------------------------

TEST(Standardness, FamilyRatios) {
  auto gf = standardness_ratio(gf_standard(), 1);
  EXPECT_EQ(gf.ratio, R("5/7"));
  EXPECT_EQ(gf.limsup, R("5/7"));
  EXPECT_GE(gf.ratio, gf.bound);
  EXPECT_EQ(gf.bound, R("7/11"));

  auto mm = standardness_ratio(mm1(), 1);
  EXPECT_EQ(mm.ratio, R("5/9"));
  EXPECT_EQ(mm.bound, R("5/9"));

  auto ky = standardness_ratio(kyiv48(), 1);
  EXPECT_EQ(ky.ratio, R("3/4"));
  EXPECT_EQ(ky.liminf, R("3/4"));
  EXPECT_EQ(ky.bound, R("1/2"));
}

TEST(Standardness, PeriodicRegimeExtremes) {
  KyivSpec spec{constant(4), {{}, {8, 12}}};
  auto rep = standardness_ratio(spec, 3);
  ASSERT_EQ(rep.periodic_values.size(), 2u);
  EXPECT_LE(rep.liminf, rep.limsup);
  EXPECT_GE(rep.liminf, rep.bound);
}

// ---------------------------------------------------------------------------
// Repeated-term and dispatch
// ---------------------------------------------------------------------------

TEST(RepeatedTerm, StreamAndTail) {
  RepeatedTermSpec spec{GeometricSequence::power(1, R("1/4")), constant(2)};
  auto s = repeated_stream(spec);
  EXPECT_EQ(s.term(1), R("1/4"));
  EXPECT_EQ(s.term(2), R("1/4"));
  EXPECT_EQ(s.term(3), R("1/16"));
  EXPECT_EQ(spec.tail(1), R("2/3") * R("1/4"));
  EXPECT_EQ(s.tail(2), spec.tail(1));
  RepeatedTermSpec bad{{{}, {R("1/2"), R("1/2")}, R("1/4")}, constant(1)};
  EXPECT_THROW(bad.validate(), SpecError);
}

TEST(FamilyDispatch, NamesAndStreams) {
  std::vector<FamilySpec> specs{MultigeometricSpec{{3, 2}, R("1/4")}, gf_standard(), mm1(), kyiv48(),
                                RepeatedTermSpec{GeometricSequence::power(1, R("1/4")), constant(2)},
                                ExplicitSpec{{}, {R("1/2")}, R("1/2")}};
  std::vector<std::string> names{"multigeometric", "gf", "mm", "kyiv", "repeated", "explicit"};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    EXPECT_EQ(family_name(specs[i]), names[i]);
    auto s = make_stream(specs[i]);
    EXPECT_TRUE(s.tail(0).is_positive());
  }
}

TEST(FamilyDispatch, PeriodicPartAsMultigeometric) {
  auto s = kyiv_stream(kyiv48());
  auto mg = periodic_part_as_multigeometric(s);
  EXPECT_EQ(mg.q, R("1/25"));
  EXPECT_EQ(mg.m(), 13u);
  auto t = mg_stream(mg);
  for (std::size_t n = 1; n <= 30; ++n) EXPECT_EQ(t.term(n), s.term(s.prefix_length() + n));
}
