#include "ci2/hilbert.hpp"

#include <algorithm>

#include "ci2/errors.hpp"
#include "ci2/ideals.hpp"

namespace ci2 {

namespace {

std::vector<Monomial> minimal(std::vector<Monomial> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> kept;
  for (const auto& m : gens)
    if (std::none_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); }))
      kept.push_back(m);
  return kept;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) return false;
  return true;
}

IntPoly numerator_rec(std::vector<Monomial> gens, std::size_t n) {
  gens = minimal(std::move(gens));
  if (gens.empty()) return IntPoly::monomial(0);
  if (pairwise_coprime(gens)) {
    IntPoly p = IntPoly::monomial(0);
    for (const auto& m : gens) p = p * IntPoly::one_minus_t_pow(m.degree());
    return p;
  }
  std::size_t pivot = 0, best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t count = 0;
    for (const auto& m : gens)
      if (m.exponent(v) != 0) ++count;
    if (count > best) {
      best = count;
      pivot = v;
    }
  }
  // HN(I) = HN(I + (x_v)) + t * HN(I : x_v)
  const Monomial xv = Monomial::variable(pivot);
  std::vector<Monomial> sum{xv};
  std::vector<Monomial> quotient;
  for (const auto& m : gens) {
    if (m.exponent(pivot) == 0) sum.push_back(m);
    quotient.push_back(m.exponent(pivot) ? m / xv : m);
  }
  return numerator_rec(std::move(sum), n) + numerator_rec(std::move(quotient), n).shifted(1);
}

}  // namespace

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("coefficient does not fit in 64 bits");
  return v.get_si();
}

HilbertSeries make_hilbert_series(IntPoly numerator, unsigned pole_order) {
  HilbertSeries hs;
  hs.numerator = numerator;
  hs.pole_order = pole_order;
  unsigned pole = pole_order;
  if (!numerator.is_zero()) {
    while (pole > 0) {
      auto q = numerator.divide_one_minus_t();
      if (!q) break;
      numerator = std::move(*q);
      --pole;
    }
  } else {
    pole = 0;
  }
  hs.reduced_numerator = std::move(numerator);
  hs.reduced_pole_order = pole;
  return hs;
}

IntPoly hilbert_numerator_monomial(std::vector<Monomial> gens, std::size_t num_vars) {
  return numerator_rec(std::move(gens), num_vars);
}

HilbertSeries hilbert_series(const IdealHandle& ideal) {
  if (!ideal.is_homogeneous()) throw PreconditionError("hilbert_series: ideal is not homogeneous");
  const std::size_t n = ideal.ring()->num_variables();
  return make_hilbert_series(hilbert_numerator_monomial(leading_term_ideal(ideal), n),
                             static_cast<unsigned>(n));
}

CoeffSequence series_coefficients(const HilbertSeries& hs, std::size_t k_max) {
  CoeffSequence seq;
  for (const auto& c : expand_series(hs.reduced_numerator, hs.reduced_pole_order, k_max))
    seq.values.push_back(to_int64(c));
  if (hs.reduced_pole_order > 1) return seq;

  const int deg = hs.reduced_numerator.degree();
  if (hs.reduced_pole_order == 0) {
    seq.tail = 0;
    seq.tail_onset = static_cast<std::size_t>(deg + 1);
    return seq;
  }
  // Q(t)/(1-t): a_k = Q(1) for all k >= deg Q; walk back to the first such k.
  const std::int64_t tail = to_int64(hs.reduced_numerator.at_one());
  auto a = expand_series(hs.reduced_numerator, 1, static_cast<std::size_t>(std::max(deg, 0)));
  std::size_t onset = static_cast<std::size_t>(std::max(deg, 0));
  while (onset > 0 && a[onset - 1] == tail) --onset;
  seq.tail = tail;
  seq.tail_onset = onset;
  return seq;
}

CoeffSequence finite_hp(const HilbertSeries& hs) {
  if (hs.reduced_pole_order != 0) throw PreconditionError("quotient is infinite-dimensional");
  CoeffSequence seq;
  for (const auto& c : hs.reduced_numerator.coefficients()) seq.values.push_back(to_int64(c));
  seq.tail = 0;
  seq.tail_onset = seq.values.size();
  return seq;
}

CoeffSequence finite_hp(const IdealHandle& ideal) {
  if (!is_zero_dimensional(ideal)) throw PreconditionError("quotient is infinite-dimensional");
  return finite_hp(hilbert_series(ideal));
}

}  // namespace ci2
