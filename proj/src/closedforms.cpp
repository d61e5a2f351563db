#include "ci2/closedforms.hpp"

#include <algorithm>
#include <sstream>

namespace ci2 {

DegreePair::DegreePair(unsigned d_, unsigned e_) : d(d_), e(e_) {
  if (d == 0 || e == 0) throw std::invalid_argument("degrees must be positive");
}

void BettiTable::add(unsigned i, int j, unsigned b) {
  if (b == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{i, j},
                             [](const BettiEntry& e, const std::pair<unsigned, int>& key) {
                               return std::pair{e.i, e.j} < key;
                             });
  if (it != entries_.end() && it->i == i && it->j == j)
    it->b += b;
  else
    entries_.insert(it, BettiEntry{i, j, b});
}

unsigned BettiTable::rank(unsigned i, int j) const {
  for (const auto& e : entries_)
    if (e.i == i && e.j == j) return e.b;
  return 0;
}

unsigned BettiTable::length() const { return entries_.empty() ? 0 : entries_.back().i; }

std::vector<unsigned> BettiTable::total_ranks() const {
  std::vector<unsigned> out(entries_.empty() ? 0 : length() + 1, 0);
  for (const auto& e : entries_) out[e.i] += e.b;
  return out;
}

std::string format_betti(const BettiTable& table) {
  std::ostringstream os;
  for (unsigned i = 0; i <= table.length(); ++i) {
    os << "R" << i << ":";
    for (const auto& e : table.entries())
      if (e.i == i) os << " S(-" << e.j << ")^" << e.b;
    os << "\n";
  }
  return os.str();
}

IntPoly smooth_milnor_numerator(unsigned n, unsigned d) {
  if (d == 0) throw std::invalid_argument("degree must be positive");
  return IntPoly::one_minus_t_pow(d - 1).pow(n + 1);
}

namespace {

IntPoly term(long c, unsigned k) { return IntPoly::monomial(k, c); }

}  // namespace

IntPoly prop2_A(DegreePair dp) {
  const unsigned d = dp.d, e = dp.e;
  IntPoly p = term(1, 0);
  p -= term(1, d) + term(6, d + e - 2);
  p += term(4, d + 2 * e - 3) + term(4, 2 * d + e - 3) + term(6, 2 * d + e - 2);
  p -= term(1, d + 3 * e - 4) + term(1, 2 * d + 2 * e - 4) + term(4, 2 * d + 2 * e - 3) +
       term(1, 3 * d + e - 4) + term(4, 3 * d + e - 3);
  p += term(1, 2 * d + 3 * e - 4) + term(1, 3 * d + 2 * e - 4) + term(1, 4 * d + e - 4);
  return p;
}

IntPoly prop2_B(DegreePair dp) {
  const unsigned d = dp.d, e = dp.e;
  IntPoly p = term(1, 0);
  p -= term(1, e) + term(1, d) + term(6, d + e - 2);
  p += term(4, d + e - 1) + term(4, d + 2 * e - 3) + term(4, 2 * d + e - 3);
  p -= term(1, d + 3 * e - 4) + term(1, 2 * d + 2 * e - 4) + term(4, 2 * d + 2 * e - 3) +
       term(1, 3 * d + e - 4);
  p += term(1, 2 * d + 3 * e - 4) + term(1, 3 * d + 2 * e - 4);
  return p;
}

IntPoly prop2_numerator(DegreePair dp, AlgebraVariant v) {
  switch (v) {
    case AlgebraVariant::A:
      return prop2_A(dp);
    case AlgebraVariant::B:
      return prop2_B(dp);
    case AlgebraVariant::M:
      break;
  }
  throw std::invalid_argument("closed form exists for A and B only");
}

BettiTable conjecture1_betti(DegreePair dp, AlgebraVariant v) {
  const int d = static_cast<int>(dp.d), e = static_cast<int>(dp.e);
  BettiTable t(v);
  t.add(0, 0, 1);
  if (v == AlgebraVariant::A) {
    t.add(1, d, 1);
    t.add(1, d + e - 2, 6);
    t.add(2, d + 2 * e - 3, 4);
    t.add(2, 2 * d + e - 3, 4);
    t.add(2, 2 * d + e - 2, 6);
    t.add(3, d + 3 * e - 4, 1);
    t.add(3, 2 * d + 2 * e - 4, 1);
    t.add(3, 2 * d + 2 * e - 3, 4);
    t.add(3, 3 * d + e - 4, 1);
    t.add(3, 3 * d + e - 3, 4);
    t.add(4, 2 * d + 3 * e - 4, 1);
    t.add(4, 3 * d + 2 * e - 4, 1);
    t.add(4, 4 * d + e - 4, 1);
  } else if (v == AlgebraVariant::B) {
    t.add(1, e, 1);
    t.add(1, d, 1);
    t.add(1, d + e - 2, 6);
    t.add(2, d + e - 1, 4);
    t.add(2, d + 2 * e - 3, 4);
    t.add(2, 2 * d + e - 3, 4);
    t.add(3, d + 3 * e - 4, 1);
    t.add(3, 2 * d + 2 * e - 4, 1);
    t.add(3, 2 * d + 2 * e - 3, 4);
    t.add(3, 3 * d + e - 4, 1);
    t.add(4, 2 * d + 3 * e - 4, 1);
    t.add(4, 3 * d + 2 * e - 4, 1);
  } else {
    throw std::invalid_argument("conjectured tables exist for A and B only");
  }
  return t;
}

IntPoly hp_from_betti(const BettiTable& table) {
  IntPoly p;
  for (const auto& e : table.entries()) {
    if (e.j < 0) throw std::invalid_argument("negative twist");
    IntPoly m = IntPoly::monomial(static_cast<unsigned>(e.j), e.b);
    if (e.i % 2 == 0)
      p += m;
    else
      p -= m;
  }
  return p;
}

HilbertSeries series_from_betti(const BettiTable& table, unsigned num_vars) {
  return make_hilbert_series(hp_from_betti(table), num_vars);
}

}  // namespace ci2
