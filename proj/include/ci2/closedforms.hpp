#pragma once

// Closed-form Hilbert numerators in P^3 and the conjectured Betti tables they
// are derived from.

#include <string>
#include <vector>

#include "ci2/hilbert.hpp"
#include "ci2/ideals.hpp"
#include "ci2/intpoly.hpp"

namespace ci2 {

struct DegreePair {
  unsigned d;  // deg f
  unsigned e;  // deg g
  DegreePair(unsigned d_, unsigned e_);
};

struct BettiEntry {
  unsigned i;  // homological index
  int j;       // twist
  unsigned b;  // rank
  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

// Graded Betti numbers b_{i,j}; entries sorted by (i, j), equal (i, j) merged.
class BettiTable {
 public:
  explicit BettiTable(AlgebraVariant variant) : variant_(variant) {}

  AlgebraVariant variant() const { return variant_; }
  const std::vector<BettiEntry>& entries() const { return entries_; }
  void add(unsigned i, int j, unsigned b);
  unsigned rank(unsigned i, int j) const;
  // Total rank per homological index 0..length.
  std::vector<unsigned> total_ranks() const;
  unsigned length() const;

  // Variants are labels only; equality compares entries.
  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  AlgebraVariant variant_;
  std::vector<BettiEntry> entries_;
};

std::string format_betti(const BettiTable& table);

// (1 - t^(d-1))^(n+1)
IntPoly smooth_milnor_numerator(unsigned n, unsigned d);

IntPoly prop2_A(DegreePair dp);
IntPoly prop2_B(DegreePair dp);
IntPoly prop2_numerator(DegreePair dp, AlgebraVariant v);

// Conjectured minimal resolution of A(f,g) or B(f,g) in P^3, transcribed term
// by term and merged.
BettiTable conjecture1_betti(DegreePair dp, AlgebraVariant v);

// sum_i (-1)^i sum_j b_ij t^j
IntPoly hp_from_betti(const BettiTable& table);
// Same numerator over (1-t)^num_vars, with the reduced form.
HilbertSeries series_from_betti(const BettiTable& table, unsigned num_vars);

}  // namespace ci2
