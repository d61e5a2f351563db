#include <gtest/gtest.h>

#include "ci2/closedforms.hpp"

using namespace ci2;

namespace {

std::vector<BigInt> B(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// (1 + t + ... + t^(e-2))^3, coefficients only.
std::vector<BigInt> plane_curve_series(unsigned e) {
  std::vector<BigInt> out{BigInt(1)};
  for (int f = 0; f < 3; ++f) {
    std::vector<BigInt> next(out.size() + e - 2, BigInt(0));
    for (std::size_t i = 0; i < out.size(); ++i)
      for (unsigned k = 0; k + 1 < e; ++k) next[i + k] += out[i];
    out = next;
  }
  return out;
}

// Literal substitution into the stated five-group sums, independent of the
// library's transcription.
IntPoly by_hand_A(int d, int e) {
  std::vector<std::pair<int, long>> terms = {
      {0, 1},
      {d, -1}, {d + e - 2, -6},
      {d + 2 * e - 3, 4}, {2 * d + e - 3, 4}, {2 * d + e - 2, 6},
      {d + 3 * e - 4, -1}, {2 * d + 2 * e - 4, -1}, {2 * d + 2 * e - 3, -4}, {3 * d + e - 4, -1}, {3 * d + e - 3, -4},
      {2 * d + 3 * e - 4, 1}, {3 * d + 2 * e - 4, 1}, {4 * d + e - 4, 1}};
  IntPoly p;
  for (auto [k, c] : terms) p += IntPoly::monomial(static_cast<unsigned>(k), BigInt(c));
  return p;
}

IntPoly by_hand_B(int d, int e) {
  std::vector<std::pair<int, long>> terms = {
      {0, 1},
      {e, -1}, {d, -1}, {d + e - 2, -6},
      {d + e - 1, 4}, {d + 2 * e - 3, 4}, {2 * d + e - 3, 4},
      {d + 3 * e - 4, -1}, {2 * d + 2 * e - 4, -1}, {2 * d + 2 * e - 3, -4}, {3 * d + e - 4, -1},
      {2 * d + 3 * e - 4, 1}, {3 * d + 2 * e - 4, 1}};
  IntPoly p;
  for (auto [k, c] : terms) p += IntPoly::monomial(static_cast<unsigned>(k), BigInt(c));
  return p;
}

}  // namespace

TEST(SmoothNumerator, SpecExamples) {
  EXPECT_EQ(smooth_milnor_numerator(3, 2), IntPoly({1, -4, 6, -4, 1}));
  auto p = smooth_milnor_numerator(2, 3);
  EXPECT_EQ(p, IntPoly({1, 0, -3, 0, 3, 0, -1}));
  auto c = expand_series(p, 3, 6);
  EXPECT_EQ(c, B({1, 3, 3, 1, 0, 0, 0}));
  for (unsigned e = 2; e <= 7; ++e) {
    auto s = expand_series(smooth_milnor_numerator(2, e), 3, 3 * (e - 2) + 3);
    auto want = plane_curve_series(e);
    want.resize(s.size(), BigInt(0));
    EXPECT_EQ(s, want) << "e=" << e;
  }
}

TEST(Prop2, SpecExamples) {
  EXPECT_EQ(prop2_A({2, 3}), IntPoly({1, 0, -1, -6, 4, 9, -5, -4, 1, 1}));
  EXPECT_EQ(prop2_B({2, 3}), IntPoly({1, 0, -1, -7, 8, 3, -1, -5, 1, 1}));
  EXPECT_EQ(expand_series(prop2_A({2, 3}), 4, 8), B({1, 4, 9, 10, 5, 1, 0, 0, 0}));
  EXPECT_EQ(expand_series(prop2_B({2, 3}), 4, 8), B({1, 4, 9, 9, 5, 1, 0, 0, 0}));
  EXPECT_EQ(expand_series(prop2_A({3, 3}), 4, 9), B({1, 4, 10, 19, 25, 22, 12, 3, 0, 0}));
  EXPECT_EQ(expand_series(prop2_B({3, 3}), 4, 9), B({1, 4, 10, 18, 21, 16, 8, 2, 0, 0}));
  EXPECT_EQ(prop2_numerator({2, 3}, AlgebraVariant::A), prop2_A({2, 3}));
  EXPECT_EQ(prop2_numerator({2, 3}, AlgebraVariant::B), prop2_B({2, 3}));
  EXPECT_THROW(DegreePair(0, 3), std::invalid_argument);
}

TEST(Prop2, MatchesLiteralSubstitution) {
  for (int d = 1; d <= 12; ++d)
    for (int e = 1; e <= 12; ++e) {
      auto dp = DegreePair(static_cast<unsigned>(d), static_cast<unsigned>(e));
      ASSERT_EQ(prop2_A(dp), by_hand_A(d, e)) << d << "," << e;
      ASSERT_EQ(prop2_B(dp), by_hand_B(d, e)) << d << "," << e;
    }
}

TEST(Prop2, NotSymmetric) { EXPECT_NE(prop2_A({2, 3}), prop2_A({3, 2})); }

TEST(Prop2, FourFactorsOfOneMinusT) {
  for (unsigned d = 1; d <= 12; ++d)
    for (unsigned e = 1; e <= 12; ++e)
      for (auto v : {AlgebraVariant::A, AlgebraVariant::B}) {
        IntPoly p = prop2_numerator({d, e}, v);
        EXPECT_EQ(p.at_one(), 0);
        for (int k = 0; k < 4; ++k) {
          auto q = p.divide_one_minus_t();
          ASSERT_TRUE(q.has_value()) << d << "," << e << " factor " << k;
          p = *q;
        }
        // Expansion terminates: a polynomial numerator over (1-t)^0.
        auto hs = make_hilbert_series(prop2_numerator({d, e}, v), 4);
        EXPECT_EQ(hs.reduced_pole_order, 0u) << d << "," << e;
        EXPECT_EQ(series_coefficients(hs, 60).tail, 0);
      }
}

TEST(Conjecture1, SpecExamples) {
  auto a = conjecture1_betti({2, 3}, AlgebraVariant::A);
  EXPECT_EQ(a.rank(4, 9), 1u);
  EXPECT_EQ(a.rank(4, 8), 1u);
  EXPECT_EQ(a.rank(4, 7), 1u);
  EXPECT_EQ(a.total_ranks(), (std::vector<unsigned>{1, 7, 14, 11, 3}));
  auto b = conjecture1_betti({2, 3}, AlgebraVariant::B);
  EXPECT_EQ(b.rank(4, 9), 1u);
  EXPECT_EQ(b.rank(4, 8), 1u);
  EXPECT_EQ(b.total_ranks(), (std::vector<unsigned>{1, 8, 12, 7, 2}));
  EXPECT_EQ(a.entries().front(), (BettiEntry{0, 0, 1}));
  for (unsigned d = 1; d <= 6; ++d)
    for (unsigned e = 1; e <= 6; ++e) EXPECT_EQ(conjecture1_betti({d, e}, AlgebraVariant::A).total_ranks()[1], 7u);
}

TEST(Conjecture1, CollidingTwistsAreMerged) {
  auto a = conjecture1_betti({3, 3}, AlgebraVariant::A);
  // d+2e-3 = 2d+e-3 = 6.
  EXPECT_EQ(a.rank(2, 6), 8u);
  for (std::size_t i = 1; i < a.entries().size(); ++i) {
    const auto& p = a.entries()[i - 1];
    const auto& q = a.entries()[i];
    EXPECT_TRUE(p.i < q.i || (p.i == q.i && p.j < q.j));
  }
}

TEST(BettiTable, AddMergesAndSorts) {
  BettiTable t(AlgebraVariant::A);
  t.add(1, 3, 2);
  t.add(0, 0, 1);
  t.add(1, 3, 1);
  t.add(1, 2, 1);
  EXPECT_EQ(t.entries(), (std::vector<BettiEntry>{{0, 0, 1}, {1, 2, 1}, {1, 3, 3}}));
  EXPECT_EQ(t.length(), 1u);
  EXPECT_EQ(t.rank(2, 5), 0u);
}

TEST(Bridge, OneElementKoszul) {
  BettiTable t(AlgebraVariant::M);
  t.add(0, 0, 1);
  t.add(1, 5, 1);
  EXPECT_EQ(hp_from_betti(t), IntPoly::one_minus_t_pow(5));
}

TEST(Bridge, AlternatingSumGivesProp2) {
  for (unsigned d = 1; d <= 12; ++d)
    for (unsigned e = 1; e <= 12; ++e) {
      ASSERT_EQ(hp_from_betti(conjecture1_betti({d, e}, AlgebraVariant::A)), prop2_A({d, e})) << d << "," << e;
      ASSERT_EQ(hp_from_betti(conjecture1_betti({d, e}, AlgebraVariant::B)), prop2_B({d, e})) << d << "," << e;
    }
  auto hs = series_from_betti(conjecture1_betti({2, 3}, AlgebraVariant::A), 4);
  EXPECT_EQ(hs.numerator, prop2_A({2, 3}));
  EXPECT_EQ(hs.pole_order, 4u);
}

TEST(DegreeOne, AgreesWithPlaneCurveSeries) {
  for (unsigned e = 2; e <= 6; ++e) {
    auto want = plane_curve_series(e);
    for (auto v : {AlgebraVariant::A, AlgebraVariant::B}) {
      auto got = expand_series(prop2_numerator({1, e}, v), 4, want.size() + 3);
      auto padded = want;
      padded.resize(got.size(), BigInt(0));
      EXPECT_EQ(got, padded) << "e=" << e << " variant " << to_string(v);
    }
  }
}

TEST(Format, BettiTable) {
  auto s = format_betti(conjecture1_betti({2, 3}, AlgebraVariant::B));
  EXPECT_NE(s.find("S"), std::string::npos);
}
