#include "ci2/seqprops.hpp"

#include <algorithm>
#include <stdexcept>

namespace ci2 {

namespace {

using i128 = __int128;

template <typename Cmp>
bool log_concave_by(std::span<const std::int64_t> a, Cmp holds) {
  for (std::size_t k = 1; k + 1 < a.size(); ++k) {
    i128 lhs = static_cast<i128>(a[k]) * a[k];
    i128 rhs = static_cast<i128>(a[k - 1]) * a[k + 1];
    if (!holds(lhs, rhs)) return false;
  }
  return true;
}

}  // namespace

bool is_log_concave(std::span<const std::int64_t> a) {
  return log_concave_by(a, [](i128 l, i128 r) { return l >= r; });
}

bool is_strictly_log_concave(std::span<const std::int64_t> a) {
  return log_concave_by(a, [](i128 l, i128 r) { return l > r; });
}

bool has_no_internal_zeros(std::span<const std::int64_t> a) {
  auto first = std::find_if(a.begin(), a.end(), [](std::int64_t v) { return v != 0; });
  if (first == a.end()) return true;
  auto last = std::find_if(a.rbegin(), a.rend(), [](std::int64_t v) { return v != 0; }).base();
  return std::none_of(first, last, [](std::int64_t v) { return v == 0; });
}

bool is_unimodal(std::span<const std::int64_t> a) {
  std::size_t k = 0;
  while (k + 1 < a.size() && a[k] <= a[k + 1]) ++k;
  while (k + 1 < a.size() && a[k] >= a[k + 1]) ++k;
  return k + 1 >= a.size();
}

Conjecture2Report check_conjecture2(std::span<const std::int64_t> a) {
  if (std::any_of(a.begin(), a.end(), [](std::int64_t v) { return v < 0; }))
    throw std::invalid_argument("check_conjecture2: negative entry");
  Conjecture2Report r;
  r.log_concave = is_log_concave(a);
  r.no_internal_zeros = has_no_internal_zeros(a);
  r.unimodal = is_unimodal(a);
  r.implication_ok = !(r.log_concave && r.no_internal_zeros) || r.unimodal;
  return r;
}

}  // namespace ci2
