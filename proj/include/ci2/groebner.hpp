#pragma once

// Buchberger's algorithm, multivariate division and ideal membership.

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "ci2/polycore.hpp"

namespace ci2 {

// Reduced, monic, sorted ascending by leading monomial.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(Ring ring) : ring_(std::move(ring)) {}
  GroebnerBasis(Ring ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const Ring& ring() const { return ring_; }
  MonomialOrder order() const { return ring_->order(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const;  // basis {1}

  std::vector<Monomial> leading_monomials() const;

 private:
  Ring ring_;
  std::vector<Polynomial> elements_;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;  // one per divisor
  Polynomial remainder;
};

// Full multivariate division. The first divisor (in list order) whose leading
// monomial divides the current leading term is used.
DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors);

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

// (lcm/lt(p)) p - (lcm/lt(q)) q with lt including the coefficient.
Polynomial s_polynomial(const Polynomial& p, const Polynomial& q);

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

// Zero generators are discarded. Works for inhomogeneous input too (sugar
// degree drives the pair selection).
GroebnerBasis buchberger(const Ring& ring, std::span<const Polynomial> generators,
                         BuchbergerStats* stats = nullptr);

// Every S-polynomial of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& g);
// No term of an element is divisible by another element's leading monomial;
// every element monic.
bool is_reduced(const GroebnerBasis& g);

// Generator list plus a lazily computed, shared, compute-once reduced basis.
class IdealHandle {
 public:
  IdealHandle(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_homogeneous() const;

  // Thread-safe; the first caller computes, later callers share the result.
  const GroebnerBasis& groebner_basis() const;

  // Same generators in a ring with the same variables and another order.
  IdealHandle in_ring(Ring target) const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> basis;
  };
  Ring ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& p, const IdealHandle& ideal);
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);

// Minimal generators of the leading-term ideal, sorted ascending.
std::vector<Monomial> leading_term_ideal(const IdealHandle& ideal);

// Drops generators divisible by another one (and duplicates); keeps the
// survivors sorted ascending in the ring's order.
std::vector<Monomial> minimalize(const RingSpec& ring, std::vector<Monomial> gens);

}  // namespace ci2
