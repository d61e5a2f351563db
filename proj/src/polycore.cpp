#include "ci2/polycore.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ci2/errors.hpp"

namespace ci2 {

std::string_view to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::degrevlex:
      return "degrevlex";
    case MonomialOrder::deglex:
      return "deglex";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables)
    throw std::invalid_argument("monomial has more than " +
                                std::to_string(kMaxVariables) + " variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) set_exponent(i, exponents[i]);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set_exponent(index, power);
  return m;
}

void Monomial::set_exponent(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw std::out_of_range("variable index out of range");
  if (e > std::numeric_limits<std::uint16_t>::max())
    throw std::overflow_error("exponent too large");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max())
      throw std::overflow_error("exponent too large");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (b.exps_[i] > a.exps_[i]) throw std::domain_error("monomial does not divide");
    r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- RingSpec

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RingSpec::RingSpec(std::vector<std::string> variables, MonomialOrder order)
    : variables_(std::move(variables)), order_(order) {
  if (variables_.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (variables_.size() > kMaxVariables)
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) +
                                " variables are supported");
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    if (!valid_name(v)) throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> RingSpec::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

int RingSpec::compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  const std::size_t n = variables_.size();
  if (order_ == MonomialOrder::degrevlex) {
    for (std::size_t i = n; i-- > 0;) {
      unsigned ea = a.exponent(i), eb = b.exponent(i);
      if (ea != eb) return ea < eb ? 1 : -1;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      unsigned ea = a.exponent(i), eb = b.exponent(i);
      if (ea != eb) return ea > eb ? 1 : -1;
    }
  }
  return 0;
}

Ring make_ring(std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const RingSpec>(std::move(variables), order);
}

Ring make_ring(std::string_view csv, MonomialOrder order) {
  std::vector<std::string> vars;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      vars.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  vars.push_back(cur);
  return make_ring(std::move(vars), order);
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw RingMismatch("polynomials belong to different rings");
}

// -------------------------------------------------------------- Polynomial

namespace {

void normalize(const RingSpec& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms = std::move(out);
}

// Merge a and (sign * b) where both are sorted descending.
std::vector<Term> merge(const RingSpec& ring, const std::vector<Term>& a,
                        const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff)
                            : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize(*ring_, terms_);
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  return monomial(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->num_variables()) throw std::out_of_range("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front();
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_);
  Polynomial r(p.ring_);
  r.terms_ = merge(*p.ring_, p.terms_, q.terms_, false);
  return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_);
  Polynomial r(p.ring_);
  r.terms_ = merge(*p.ring_, p.terms_, q.terms_, true);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) { return *this = *this + q; }
Polynomial& Polynomial::operator-=(const Polynomial& q) { return *this = *this - q; }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_);
  if (p.is_zero() || q.is_zero()) return Polynomial(p.ring_);
  if (q.size() == 1) return p.times_monomial(q.terms_[0].mono, q.terms_[0].coeff);
  if (p.size() == 1) return q.times_monomial(p.terms_[0].mono, p.terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(p.size() * q.size());
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back(Term{m, std::move(c)});
  return Polynomial(p.ring_, std::move(terms));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r(p.ring_);
  if (c == 0) return r;
  r.terms_ = p.terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

void Polynomial::sub_scaled(const Rational& c, const Monomial& m, const Polynomial& q) {
  require_same_ring(ring_, q.ring_);
  if (c == 0 || q.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  std::size_t i = 0, j = 0;
  const RingSpec& ring = *ring_;
  Monomial qm = q.terms_[0].mono * m;
  while (i < terms_.size() && j < q.terms_.size()) {
    int cmp = ring.compare(terms_[i].mono, qm);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back(Term{qm, -c * q.terms_[j].coeff});
      if (++j < q.terms_.size()) qm = q.terms_[j].mono * m;
    } else {
      terms_[i].coeff -= c * q.terms_[j].coeff;
      if (terms_[i].coeff != 0) out.push_back(std::move(terms_[i]));
      ++i;
      if (++j < q.terms_.size()) qm = q.terms_[j].mono * m;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < q.terms_.size(); ++j)
    out.push_back(Term{q.terms_[j].mono * m, -c * q.terms_[j].coeff});
  terms_ = std::move(out);
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return r;
}

Term Polynomial::take_leading() {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  return inv * *this;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::in_ring(Ring target) const {
  if (target->variables() != ring_->variables())
    throw RingMismatch("target ring has different variables");
  return Polynomial(std::move(target), terms_);
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (!same_ring(p.ring_, q.ring_) || p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i)
    if (!(p.terms_[i].mono == q.terms_[i].mono) || p.terms_[i].coeff != q.terms_[i].coeff)
      return false;
  return true;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial scale(const Rational& c, const Polynomial& p) { return c * p; }

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.spec().num_variables())
    throw std::out_of_range("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.exponent(var);
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set_exponent(var, e - 1);
    terms.push_back(Term{m, t.coeff * e});
  }
  return Polynomial(p.ring(), std::move(terms));
}

std::optional<int> is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return kEveryDegree;
  unsigned d = p.terms().front().mono.degree();
  for (const auto& t : p.terms())
    if (t.mono.degree() != d) return std::nullopt;
  return static_cast<int>(d);
}

Polynomial euler_residual(const Polynomial& p) {
  auto h = is_homogeneous(p);
  if (!h) throw PreconditionError("euler_residual: polynomial is not homogeneous");
  Polynomial acc(p.ring());
  if (p.is_zero()) return acc;
  for (std::size_t i = 0; i < p.spec().num_variables(); ++i)
    acc += Polynomial::variable(p.ring(), i) * partial_derivative(p, i);
  return acc - Rational(*h) * p;
}

Polynomial substitute_zero(const Polynomial& p, std::size_t var) {
  if (var >= p.spec().num_variables())
    throw std::out_of_range("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : p.terms())
    if (t.mono.exponent(var) == 0) terms.push_back(t);
  return Polynomial(p.ring(), std::move(terms));
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    unsigned char c = static_cast<unsigned char>(text_[pos_]);
    return std::isdigit(c) || std::isalpha(c) || c == '_' || c == '(';
  }

  Polynomial expr() {
    bool negate = false;
    if (at('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (at('+')) {
        ++pos_;
        acc += term();
      } else if (at('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (at('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  BigInt integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (std::isdigit(c)) {
      BigInt num = integer();
      if (at('/')) {
        ++pos_;
        skip_ws();
        std::size_t den_at = pos_;
        BigInt den = integer();
        if (den == 0) throw ParseError(den_at, "zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return Polynomial::constant(ring_, q);
      }
      return Polynomial::constant(ring_, Rational(num));
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!at(')')) throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isalpha(c) || c == '_') return power();
    throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
  }

  Polynomial power() {
    // Juxtaposed names: longest declared variable that prefixes the input.
    std::size_t best = 0, best_index = 0;
    for (std::size_t i = 0; i < ring_->num_variables(); ++i) {
      const auto& name = ring_->variable_name(i);
      if (name.size() > best && text_.substr(pos_, name.size()) == name) {
        best = name.size();
        best_index = i;
      }
    }
    if (best == 0) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      throw ParseError(pos_, "unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'");
    }
    pos_ += best;
    unsigned exponent = 1;
    if (at('^')) {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError(pos_, "negative exponent");
      std::size_t exp_at = pos_;
      BigInt e = integer();
      if (e > std::numeric_limits<std::uint16_t>::max()) throw ParseError(exp_at, "exponent too large");
      exponent = static_cast<unsigned>(e.get_ui());
    }
    return Polynomial::monomial(ring_, Monomial::variable(best_index, exponent));
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  return Parser(text, ring).parse();
}

std::string format_rational(const Rational& q) { return q.get_str(); }

std::string format_monomial(const Monomial& m, const RingSpec& ring) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < ring.num_variables(); ++i) {
    unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variable_name(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    first = false;
    Rational mag = abs(t.coeff);
    if (t.mono.is_one()) {
      out += format_rational(mag);
    } else {
      if (mag != 1) out += format_rational(mag) + '*';
      out += format_monomial(t.mono, p.spec());
    }
  }
  return out;
}

}  // namespace ci2
