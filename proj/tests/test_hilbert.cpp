#include <gtest/gtest.h>

#include "ci2/errors.hpp"
#include "ci2/harness.hpp"
#include "ci2/hilbert.hpp"
#include "oracles.hpp"

using namespace ci2;

namespace {

Ring R4() { return make_ring("x,y,z,w"); }
Polynomial P(const char* s, const Ring& r) { return parse_polynomial(s, r); }
IdealHandle I(std::initializer_list<const char*> ss, const Ring& r) {
  std::vector<Polynomial> gens;
  for (const char* s : ss) gens.push_back(P(s, r));
  return IdealHandle(r, std::move(gens));
}
const Polynomial& entry(const char* label) { return corpus_entry(label).polynomial; }

std::vector<std::int64_t> V(std::initializer_list<std::int64_t> v) { return v; }

// (1 + t + ... + t^(d-2))^4 by repeated convolution.
std::vector<std::int64_t> smooth_expansion(unsigned d) {
  std::vector<std::int64_t> out{1};
  for (int f = 0; f < 4; ++f) {
    std::vector<std::int64_t> next(out.size() + d - 2, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (unsigned k = 0; k + 1 < d; ++k) next[i + k] += out[i];
    out = next;
  }
  return out;
}

IdealHandle in_deglex(const IdealHandle& ideal) {
  auto dl = make_ring("x,y,z,w", MonomialOrder::deglex);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(dl));
  return IdealHandle(dl, std::move(gens));
}

// Every ideal built from the corpus: A and B for f in {quadric, cubic, x} and
// every degree-3 entry, plus the Milnor ideals of the smooth entries.
std::vector<std::pair<std::string, IdealHandle>> corpus_ideals() {
  std::vector<std::pair<std::string, IdealHandle>> out;
  for (const char* fl : {"Fermat quadric", "Fermat cubic", "x"}) {
    const auto& f = entry(fl);
    for (const auto& s : corpus()) {
      if (s.degree != 3 || s.polynomial == f) continue;
      out.emplace_back(std::string(fl) + "/A/" + s.label, ideal_A(f, s.polynomial));
      out.emplace_back(std::string(fl) + "/B/" + s.label, ideal_B(f, s.polynomial));
    }
  }
  out.emplace_back("M/quadric", jacobian_ideal(entry("Fermat quadric")));
  out.emplace_back("M/cubic", jacobian_ideal(entry("Fermat cubic")));
  return out;
}

}  // namespace

TEST(MonomialNumerator, SpecExamples) {
  EXPECT_EQ(hilbert_numerator_monomial({}, 4), IntPoly({1}));
  EXPECT_EQ(hilbert_numerator_monomial({Monomial{2, 0}, Monomial{0, 2}}, 2), IntPoly({1, 0, -2, 0, 1}));
  EXPECT_EQ(hilbert_numerator_monomial({Monomial{1, 0, 0, 0}, Monomial{0, 1, 0, 0}, Monomial{0, 0, 1, 0},
                                        Monomial{0, 0, 0, 1}},
                                       4),
            IntPoly({1, -4, 6, -4, 1}));
  // Non-minimal input: x^2 is redundant next to x.
  EXPECT_EQ(hilbert_numerator_monomial({Monomial{1, 0}, Monomial{2, 0}}, 2), IntPoly({1, -1}));
  // Unit ideal.
  EXPECT_TRUE(hilbert_numerator_monomial({Monomial{0, 0}}, 2).is_zero());
}

TEST(MonomialNumerator, MatchesStandardMonomialCounts) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Monomial> gens;
    std::size_t count = 1 + rng() % 5;
    for (std::size_t k = 0; k < count; ++k) {
      auto monos = oracle::monomials_of_degree(3, 1 + static_cast<unsigned>(rng() % 4));
      gens.push_back(monos[rng() % monos.size()]);
    }
    auto num = hilbert_numerator_monomial(gens, 3);
    auto coeffs = expand_series(num, 3, 9);
    for (unsigned k = 0; k <= 9; ++k)
      ASSERT_EQ(coeffs[k], oracle::standard_monomial_count(gens, 3, k)) << "trial " << trial;
  }
}

TEST(Series, ZeroIdeal) {
  auto hs = hilbert_series(IdealHandle(R4(), {}));
  EXPECT_EQ(hs.numerator, IntPoly({1}));
  EXPECT_EQ(hs.pole_order, 4u);
  EXPECT_EQ(hs.reduced_pole_order, 4u);
  EXPECT_FALSE(series_coefficients(hs, 5).tail.has_value());
}

TEST(Series, InhomogeneousThrows) {
  auto r = R4();
  EXPECT_THROW(hilbert_series(I({"x^2+y"}, r)), PreconditionError);
}

TEST(Series, SmoothMilnorAlgebras) {
  auto r = corpus_ring();
  for (unsigned d = 2; d <= 4; ++d) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto f = random_smooth_form(r, d, seed);
      auto hp = finite_hp(jacobian_ideal(f));
      EXPECT_EQ(hp.values, smooth_expansion(d)) << "d=" << d << " seed=" << seed;
      EXPECT_EQ(hilbert_series(jacobian_ideal(f)).reduced_numerator, smooth_milnor_numerator(3, d)
                                                                         .divide_one_minus_t()
                                                                         ->divide_one_minus_t()
                                                                         ->divide_one_minus_t()
                                                                         ->divide_one_minus_t()
                                                                         .value());
    }
  }
  EXPECT_EQ(finite_hp(jacobian_ideal(entry("Fermat cubic"))).values, smooth_expansion(3));
}

TEST(Series, FiniteCorpusExamples) {
  const auto& q = entry("Fermat quadric");
  const auto& c = entry("Fermat cubic");
  EXPECT_EQ(finite_hp(ideal_A(q, entry("2A1"))).values, V({1, 4, 9, 10, 5, 1}));
  EXPECT_EQ(finite_hp(ideal_B(q, entry("2A1"))).values, V({1, 4, 9, 9, 5, 1}));
  EXPECT_EQ(finite_hp(ideal_A(c, entry("3A2"))).values, V({1, 4, 10, 19, 25, 22, 12, 3}));
  EXPECT_EQ(finite_hp(ideal_B(c, entry("3A2"))).values, V({1, 4, 10, 18, 21, 16, 8, 2}));
  auto one = finite_hp(I({"x", "y", "z", "w"}, R4()));
  EXPECT_EQ(one.values, V({1}));
  EXPECT_EQ(one.tail, 0);
  EXPECT_THROW(finite_hp(ideal_A(q, entry("A3"))), PreconditionError);
}

TEST(Series, CancellationToOne) {
  auto hs = make_hilbert_series(IntPoly({1, -2, 1}), 2);
  EXPECT_EQ(hs.reduced_numerator, IntPoly({1}));
  EXPECT_EQ(hs.reduced_pole_order, 0u);
  auto c = series_coefficients(hs, 4);
  EXPECT_EQ(c.values, V({1, 0, 0, 0, 0}));
  EXPECT_EQ(c.tail, 0);
}

TEST(Series, CurveTails) {
  const auto& q = entry("Fermat quadric");
  auto a = series_coefficients(hilbert_series(ideal_A(q, entry("A3"))), 8);
  EXPECT_EQ(a.values, V({1, 4, 9, 10, 5, 2, 2, 2, 2}));
  EXPECT_EQ(a.tail, 2);
  EXPECT_EQ(a.tail_onset, 5u);
  auto b = series_coefficients(hilbert_series(ideal_B(q, entry("A3"))), 8);
  EXPECT_EQ(b.values, V({1, 4, 9, 9, 5, 2, 2, 2, 2}));
  EXPECT_EQ(b.tail, 2);
}

TEST(Series, NumeratorIdentity) {
  for (const auto& [label, ideal] : corpus_ideals()) {
    auto hs = hilbert_series(ideal);
    ASSERT_GE(hs.pole_order, hs.reduced_pole_order);
    IntPoly back = hs.reduced_numerator * IntPoly::one_minus_t_pow(1).pow(hs.pole_order - hs.reduced_pole_order);
    EXPECT_EQ(back, hs.numerator) << label;
    if (!hs.reduced_numerator.is_zero()) {
      EXPECT_NE(hs.reduced_numerator.at_one(), 0) << label;
    }
  }
}

TEST(Series, FiniteSumIsDimension) {
  for (const auto& [label, ideal] : corpus_ideals()) {
    if (!is_zero_dimensional(ideal)) continue;
    auto hp = finite_hp(ideal);
    std::int64_t sum = 0;
    for (auto v : hp.values) sum += v;
    EXPECT_EQ(sum, static_cast<std::int64_t>(quotient_dimension(ideal))) << label;
  }
}

TEST(Series, OrderIndependence) {
  for (const auto& [label, ideal] : corpus_ideals()) {
    auto a = hilbert_series(ideal);
    auto b = hilbert_series(in_deglex(ideal));
    EXPECT_EQ(a.numerator, b.numerator) << label;
    EXPECT_EQ(a.reduced_numerator, b.reduced_numerator) << label;
  }
}

TEST(Series, StandardMonomialCountsUpToDegreeEight) {
  for (const auto& [label, ideal] : corpus_ideals()) {
    auto c = series_coefficients(hilbert_series(ideal), 8);
    auto leads = leading_term_ideal(ideal);
    for (unsigned k = 0; k <= 8; ++k)
      ASSERT_EQ(c.values[k], oracle::standard_monomial_count(leads, 4, k)) << label << " k=" << k;
  }
}

TEST(Series, MacaulayRanksUpToDegreeEight) {
  // Generator-only oracle, on the pairs with f the Fermat quadric or x.
  for (const auto& [label, ideal] : corpus_ideals()) {
    if (label.rfind("Fermat cubic", 0) == 0) continue;
    auto c = series_coefficients(hilbert_series(ideal), 8);
    for (unsigned k = 0; k <= 8; ++k)
      ASSERT_EQ(c.values[k], oracle::macaulay_hilbert_function(ideal.generators(), 4, k))
          << label << " k=" << k;
  }
}

TEST(Series, TailClaimHoldsPastTheListedRange) {
  const auto& q = entry("Fermat quadric");
  auto hs = hilbert_series(ideal_A(q, entry("A3")));
  auto short_c = series_coefficients(hs, 6);
  auto long_c = series_coefficients(hs, 30);
  ASSERT_TRUE(short_c.tail.has_value());
  for (std::size_t k = *short_c.tail_onset; k <= 30; ++k) EXPECT_EQ(long_c.values[k], *short_c.tail);
}
