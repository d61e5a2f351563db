#pragma once

// Graded free resolutions of S/I by iterated Schreyer syzygies, followed by
// cancellation of unit entries to reach the minimal resolution.

#include <cstddef>
#include <vector>

#include "ci2/closedforms.hpp"
#include "ci2/groebner.hpp"

namespace ci2 {

struct GradedFreeModule {
  std::vector<int> twists;  // twist j: generator of degree j
  std::size_t rank() const { return twists.size(); }
};

// matrix[row][col]: row indexes the target basis, col the source basis.
// Entry (r, c) is homogeneous of degree source.twists[c] - target.twists[r].
struct ResolutionStep {
  GradedFreeModule source;
  GradedFreeModule target;
  std::vector<std::vector<Polynomial>> matrix;
};

// steps[0]: F_1 -> F_0 = S; steps[k]: F_{k+1} -> F_k.
struct GradedResolution {
  Ring ring;
  std::vector<ResolutionStep> steps;
  bool complete = true;  // false if max_length stopped a nonzero syzygy module
};

// First syzygies of a reduced basis: source = syzygy twists, target = basis
// element degrees, columns = syzygy vectors.
ResolutionStep syzygy_basis(const GroebnerBasis& g);

// Schreyer resolution of S/I, at most max_length steps. Not minimal.
GradedResolution free_resolution(const IdealHandle& ideal, std::size_t max_length = 16);

// Cancels unit entries step by step (cheapest fill first, then smallest row
// and column) until every entry lies in the irrelevant ideal. Columns are kept
// at primitive integer content; the next step absorbs the inverse scaling.
GradedResolution minimize(GradedResolution r);

bool is_minimal(const GradedResolution& r);

// Twist multisets of the modules. r should be minimal for the minimal Betti
// numbers.
BettiTable betti_table(const GradedResolution& r, AlgebraVariant variant);

struct ResolutionReport {
  bool complex_ok = false;  // consecutive compositions vanish, entries homogeneous
  bool hp_ok = false;       // alternating Betti sum equals the Hilbert numerator of I
};

ResolutionReport verify_resolution(const GradedResolution& r, const IdealHandle& ideal);

// Matrix product A * B of polynomial matrices.
std::vector<std::vector<Polynomial>> multiply(const Ring& ring,
                                              const std::vector<std::vector<Polynomial>>& a,
                                              const std::vector<std::vector<Polynomial>>& b);

}  // namespace ci2
