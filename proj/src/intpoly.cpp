#include "ci2/intpoly.hpp"

namespace ci2 {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(unsigned k, const BigInt& c) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_t_pow(unsigned k) { return monomial(0) - monomial(k); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt IntPoly::at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

IntPoly& IntPoly::operator+=(const IntPoly& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<BigInt> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned k) const {
  IntPoly r = monomial(0);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

IntPoly IntPoly::shifted(unsigned k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

std::optional<IntPoly> IntPoly::divide_one_minus_t() const {
  if (is_zero()) return IntPoly{};
  if (at_one() != 0) return std::nullopt;
  // p = (1 - t) q  =>  q_k = sum_{i<=k} p_i.
  std::vector<BigInt> q(coeffs_.size() - 1);
  BigInt running = 0;
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    running += coeffs_[k];
    q[k] = running;
  }
  return IntPoly(std::move(q));
}

std::string format_intpoly(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const BigInt& c = p.coefficients()[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

std::vector<BigInt> expand_series(const IntPoly& p, unsigned pole_order, std::size_t k_max) {
  std::vector<BigInt> a(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) a[k] = p.coefficient(k);
  for (unsigned r = 0; r < pole_order; ++r)
    for (std::size_t k = 1; k <= k_max; ++k) a[k] += a[k - 1];
  return a;
}

}  // namespace ci2
