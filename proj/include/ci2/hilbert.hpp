#pragma once

// Hilbert-Poincare series of graded quotients S/I, computed from the
// leading-term ideal of a Groebner basis.

#include <cstdint>
#include <optional>
#include <vector>

#include "ci2/groebner.hpp"
#include "ci2/intpoly.hpp"

namespace ci2 {

// HP(t) = numerator / (1-t)^pole_order = reduced_numerator / (1-t)^reduced_pole_order
// with reduced_numerator(1) != 0 unless the quotient is zero.
struct HilbertSeries {
  IntPoly numerator;
  unsigned pole_order = 0;
  IntPoly reduced_numerator;
  unsigned reduced_pole_order = 0;
};

// Cancels every (1 - t) factor shared by numerator and denominator.
HilbertSeries make_hilbert_series(IntPoly numerator, unsigned pole_order);

// Coefficients a_0..a_k of a Hilbert series. When tail is set, a_k = *tail for
// every k >= tail_onset (including the ones past the listed values).
struct CoeffSequence {
  std::vector<std::int64_t> values;
  std::optional<std::int64_t> tail;
  std::optional<std::size_t> tail_onset;

  friend bool operator==(const CoeffSequence&, const CoeffSequence&) = default;
};

// Numerator of HP(S/(gens)) over (1-t)^num_vars by pivot recursion. Pivot:
// the variable dividing the most generators, lowest index on ties.
IntPoly hilbert_numerator_monomial(std::vector<Monomial> gens, std::size_t num_vars);

// Throws PreconditionError for inhomogeneous ideals.
HilbertSeries hilbert_series(const IdealHandle& ideal);

// Expansion up to degree k_max. Tail: reduced pole order 0 gives tail 0 from
// deg Q + 1 on, reduced pole order 1 gives tail Q(1); higher orders grow and
// have no tail.
CoeffSequence series_coefficients(const HilbertSeries& hs, std::size_t k_max);

// Full coefficient list of a finite quotient (trailing zeros dropped), tail 0.
// Throws PreconditionError when the quotient is infinite-dimensional.
CoeffSequence finite_hp(const IdealHandle& ideal);
CoeffSequence finite_hp(const HilbertSeries& hs);

std::int64_t to_int64(const BigInt& v);

}  // namespace ci2
