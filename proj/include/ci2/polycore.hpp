#pragma once

// Exact sparse multivariate polynomials over Q in a graded ring with named
// variables.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ci2 {

using Rational = mpq_class;
using BigInt = mpz_class;

inline constexpr std::size_t kMaxVariables = 16;

enum class MonomialOrder { degrevlex, deglex };

std::string_view to_string(MonomialOrder order);

// Exponent vector of fixed capacity. Slots past the ring's variable count are
// zero, so monomials compare equal independently of the ring they came from.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);
  Monomial(std::initializer_list<unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned exponent(std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set_exponent(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Variables are ordered x_0 > x_1 > ... > x_n.
class RingSpec {
 public:
  RingSpec(std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::degrevlex);

  std::size_t num_variables() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable_name(std::size_t i) const { return variables_.at(i); }
  std::optional<std::size_t> variable_index(std::string_view name) const;
  MonomialOrder order() const { return order_; }

  // Three-way comparison of monomials under this ring's order; positive when
  // a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using Ring = std::shared_ptr<const RingSpec>;

Ring make_ring(std::vector<std::string> variables,
               MonomialOrder order = MonomialOrder::degrevlex);
// Parses "x,y,z,w".
Ring make_ring(std::string_view csv, MonomialOrder order = MonomialOrder::degrevlex);

bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const Ring& a, const Ring& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

// Terms are kept strictly descending in the ring's order, no zero
// coefficients.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, std::vector<Term> terms);  // normalizes

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial monomial(Ring ring, const Monomial& m, const Rational& c = 1);
  static Polynomial variable(Ring ring, std::size_t index);

  const Ring& ring() const { return ring_; }
  const RingSpec& spec() const { return *ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  // Require a nonzero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coeff; }

  // Highest total degree among the terms; 0 for the zero polynomial.
  unsigned total_degree() const;

  // Coefficient of m (zero if absent).
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);

  // this -= c * m * q, in one merge pass.
  void sub_scaled(const Rational& c, const Monomial& m, const Polynomial& q);
  Polynomial times_monomial(const Monomial& m, const Rational& c = 1) const;
  // Removes and returns the leading term.
  Term take_leading();
  // Appends a term smaller than every current term. Caller keeps the order.
  void push_smallest(Term t) { terms_.push_back(std::move(t)); }

  // Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  Polynomial pow(unsigned k) const;

  // Same terms re-sorted in another ring with identical variables.
  Polynomial in_ring(Ring target) const;

  // Same ring, same terms. Ring equality is by value.
  friend bool operator==(const Polynomial& p, const Polynomial& q);

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Rational& c, const Polynomial& p);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

// Marker returned by is_homogeneous for the zero polynomial.
inline constexpr int kEveryDegree = -1;

// Degree r if every term has total degree r; kEveryDegree for zero; nullopt
// for mixed degrees.
std::optional<int> is_homogeneous(const Polynomial& p);

// sum_i x_i * dp/dx_i - r * p. Throws PreconditionError if p is not
// homogeneous.
Polynomial euler_residual(const Polynomial& p);

Polynomial substitute_zero(const Polynomial& p, std::size_t var);

Polynomial parse_polynomial(std::string_view text, const Ring& ring);
std::string format_polynomial(const Polynomial& p);
std::string format_monomial(const Monomial& m, const RingSpec& ring);
std::string format_rational(const Rational& q);

}  // namespace ci2
