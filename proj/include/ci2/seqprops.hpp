#pragma once

// Log-concavity, internal zeros and unimodality of finite integer sequences.
// All comparisons are exact (128-bit products).

#include <cstdint>
#include <span>

#include "ci2/hilbert.hpp"

namespace ci2 {

// a_k^2 >= a_{k-1} a_{k+1} for 1 <= k <= m-1. Sequences of length < 3 are
// vacuously log-concave.
bool is_log_concave(std::span<const std::int64_t> a);
bool is_strictly_log_concave(std::span<const std::int64_t> a);

// Indices of nonzero entries are consecutive.
bool has_no_internal_zeros(std::span<const std::int64_t> a);

// a_0 <= ... <= a_i >= ... >= a_m for some i.
bool is_unimodal(std::span<const std::int64_t> a);

struct Conjecture2Report {
  bool log_concave = false;
  bool no_internal_zeros = false;
  bool unimodal = false;
  // (log_concave && no_internal_zeros) implies unimodal.
  bool implication_ok = false;

  bool all() const { return log_concave && no_internal_zeros && unimodal && implication_ok; }
};

// Throws std::invalid_argument on negative entries.
Conjecture2Report check_conjecture2(std::span<const std::int64_t> a);

inline Conjecture2Report check_conjecture2(const CoeffSequence& s) {
  return check_conjecture2(s.values);
}

}  // namespace ci2
