#pragma once

// Dense univariate polynomials in t with arbitrary-precision integer
// coefficients. Used for Hilbert numerators and closed forms.

#include <optional>
#include <string>
#include <vector>

#include "ci2/polycore.hpp"

namespace ci2 {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(unsigned k, const BigInt& c = 1);
  // 1 - t^k
  static IntPoly one_minus_t_pow(unsigned k);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t k) const;
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt at_one() const;

  IntPoly& operator+=(const IntPoly& q);
  IntPoly& operator-=(const IntPoly& q);
  friend IntPoly operator+(IntPoly p, const IntPoly& q) { return p += q; }
  friend IntPoly operator-(IntPoly p, const IntPoly& q) { return p -= q; }
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  IntPoly pow(unsigned k) const;
  IntPoly shifted(unsigned k) const;  // t^k * p

  // Exact quotient by (1 - t); nullopt when p(1) != 0.
  std::optional<IntPoly> divide_one_minus_t() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// "1-2t^2+t^4"
std::string format_intpoly(const IntPoly& p, char var = 't');

// Power-series coefficients 0..k_max of p / (1 - t)^pole_order.
std::vector<BigInt> expand_series(const IntPoly& p, unsigned pole_order, std::size_t k_max);

}  // namespace ci2
