#pragma once

// The ideals J_f, m2(f,g), I(f,g) = (f) + m2(f,g), J(f,g) = (f) + (g) + m2(f,g)
// and the finiteness / radical questions asked about their quotients.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ci2/groebner.hpp"
#include "ci2/polycore.hpp"

namespace ci2 {

// M: Milnor algebra S/J_f. A: S/I(f,g). B: S/J(f,g).
enum class AlgebraVariant { M, A, B };

std::string_view to_string(AlgebraVariant v);

IdealHandle jacobian_ideal(const Polynomial& f);

// Generators f_i g_j - f_j g_i for i < j, zero minors dropped.
IdealHandle minors2(const Polynomial& f, const Polynomial& g);

IdealHandle ideal_A(const Polynomial& f, const Polynomial& g);
IdealHandle ideal_B(const Polynomial& f, const Polynomial& g);

// Leading-term ideal contains a pure power of every variable. The unit ideal
// counts as zero-dimensional (quotient of dimension 0).
bool is_zero_dimensional(const IdealHandle& ideal);

// Monomials not divisible by any leading monomial of the basis. Throws
// PreconditionError when there are infinitely many.
std::vector<Monomial> standard_monomials(const IdealHandle& ideal);
std::size_t quotient_dimension(const IdealHandle& ideal);

struct QuotientAlgebra {
  IdealHandle ideal;
  AlgebraVariant variant;
  std::optional<bool> finite;
  std::optional<std::size_t> dimension;  // present iff finite == true
};

// Fills finite and dimension from the ideal's basis.
QuotientAlgebra make_quotient(IdealHandle ideal, AlgebraVariant variant);

// Linear forms count as smooth (unit Jacobian ideal).
bool is_smooth_hypersurface(const Polynomial& f);

struct CompleteIntersectionReport {
  bool ci = false;
  bool dimA_finite = false;
  bool dimB_finite = false;
};

// Throws PreconditionError unless V(f) is smooth and g is homogeneous.
CompleteIntersectionReport is_smooth_complete_intersection(const Polynomial& f,
                                                           const Polynomial& g);

// h in rad(I), decided by 1 in I + (1 - tau*h) over S[tau].
bool radical_membership(const Polynomial& h, const IdealHandle& ideal);
bool radical_equal(const IdealHandle& a, const IdealHandle& b);
// For homogeneous ideals: rad(I) = (x_0, ..., x_n).
bool radical_is_maximal(const IdealHandle& ideal);

}  // namespace ci2
