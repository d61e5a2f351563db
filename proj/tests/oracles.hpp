#pragma once

// Independent reference computations used by the tests. None of them goes
// through the Hilbert recursion or the Schreyer resolution.

#include <cstdint>
#include <random>
#include <vector>

#include "ci2/closedforms.hpp"
#include "ci2/groebner.hpp"

namespace ci2::oracle {

using Matrix = std::vector<std::vector<Rational>>;

// Exact rank by Gaussian elimination over Q. Destroys the input.
std::size_t rank(Matrix m);

// All monomials of total degree k in n variables, descending lex.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned k);

// dim_k (S/I)_k = dim S_k - rank of the degree-k Macaulay matrix built from
// m * g for homogeneous generators g. Uses the generators only.
std::int64_t macaulay_hilbert_function(const std::vector<Polynomial>& gens, std::size_t n, unsigned k);

// Degree-k monomials divisible by none of the given leading monomials.
std::int64_t standard_monomial_count(const std::vector<Monomial>& leads, std::size_t n, unsigned k);

// Graded Betti numbers of a finite quotient S/I from the Koszul complex on
// the variables tensored with S/I: b_{i,j} = dim H_i(K . S/I)_j. Uses only
// normal forms with respect to the reduced basis.
BettiTable koszul_betti(const IdealHandle& ideal, AlgebraVariant variant);

// Sparse random polynomial with small integer coefficients, total degree <= max_deg.
Polynomial random_polynomial(const Ring& ring, std::mt19937_64& rng, unsigned max_deg,
                             std::size_t max_terms);
// Random homogeneous polynomial of degree d (nonzero).
Polynomial random_form(const Ring& ring, std::mt19937_64& rng, unsigned d, std::size_t max_terms);

}  // namespace ci2::oracle
