#include "ci2/resolution.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ci2/errors.hpp"
#include "ci2/hilbert.hpp"

namespace ci2 {

namespace {

struct ModTerm {
  Monomial mono;
  Monomial total;  // mono * weight of the component
  std::uint32_t comp;
  Rational coeff;
};

// Element of a free module, terms strictly descending in a SchreyerOrder.
using ModVec = std::vector<ModTerm>;

// Induced order: m e_i > n e_j iff m*W_i > n*W_j in the ring order, or the
// products agree and i < j. W_i is the leading monomial (with its own weight)
// of the i-th element of the previous level.
class SchreyerOrder {
 public:
  SchreyerOrder(const RingSpec& ring, std::vector<Monomial> weights)
      : ring_(&ring), weights_(std::move(weights)) {}

  int compare(const ModTerm& a, const ModTerm& b) const {
    int c = ring_->compare(a.total, b.total);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }

  ModTerm make(const Monomial& m, std::uint32_t comp, Rational c) const {
    return ModTerm{m, m * weights_[comp], comp, std::move(c)};
  }

  std::size_t rank() const { return weights_.size(); }
  const Monomial& weight(std::size_t i) const { return weights_[i]; }
  const RingSpec& ring() const { return *ring_; }

 private:
  const RingSpec* ring_;
  std::vector<Monomial> weights_;
};

void normalize(const SchreyerOrder& ord, ModVec& v) {
  std::sort(v.begin(), v.end(),
            [&](const ModTerm& a, const ModTerm& b) { return ord.compare(a, b) > 0; });
  ModVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  v = std::move(out);
}

// v -= c * m * g
void sub_scaled(const SchreyerOrder& ord, ModVec& v, const Rational& c, const Monomial& m,
                const ModVec& g) {
  ModVec out;
  out.reserve(v.size() + g.size());
  std::size_t i = 0, j = 0;
  auto shifted = [&](std::size_t k) {
    return ModTerm{g[k].mono * m, g[k].total * m, g[k].comp, -c * g[k].coeff};
  };
  while (i < v.size() && j < g.size()) {
    ModTerm t = shifted(j);
    int cmp = ord.compare(v[i], t);
    if (cmp > 0) {
      out.push_back(std::move(v[i++]));
    } else if (cmp < 0) {
      out.push_back(std::move(t));
      ++j;
    } else {
      v[i].coeff += t.coeff;
      if (v[i].coeff != 0) out.push_back(std::move(v[i]));
      ++i;
      ++j;
    }
  }
  for (; i < v.size(); ++i) out.push_back(std::move(v[i]));
  for (; j < g.size(); ++j) out.push_back(shifted(j));
  v = std::move(out);
}

// Within one component, descending lexicographic exponents (x_0 first). With
// this order the leading monomials of each new syzygy level lose one more
// variable, which bounds the resolution length by the number of variables.
bool lex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
  return false;
}

void sort_for_schreyer(std::vector<ModVec>& gens) {
  std::stable_sort(gens.begin(), gens.end(), [](const ModVec& a, const ModVec& b) {
    if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
    return lex_greater(a.front().mono, b.front().mono);
  });
}

struct Level {
  SchreyerOrder order;          // order on the free module indexed by gens
  std::vector<ModVec> syzygies; // Groebner basis of Syz(gens) under order
};

// gens: Groebner basis of a submodule of a free module ordered by prev.
Level syzygies_of(const SchreyerOrder& prev, const std::vector<ModVec>& gens) {
  std::vector<Monomial> weights;
  weights.reserve(gens.size());
  for (const auto& g : gens) weights.push_back(g.front().total);
  Level level{SchreyerOrder(prev.ring(), std::move(weights)), {}};
  const SchreyerOrder& ord = level.order;

  std::map<std::uint32_t, std::vector<std::size_t>> by_comp;
  for (std::size_t i = 0; i < gens.size(); ++i) by_comp[gens[i].front().comp].push_back(i);

  auto reducer_for = [&](const ModTerm& t) -> std::size_t {
    auto it = by_comp.find(t.comp);
    if (it != by_comp.end())
      for (std::size_t l : it->second)
        if (gens[l].front().mono.divides(t.mono)) return l;
    return gens.size();
  };

  for (std::size_t i = 0; i < gens.size(); ++i) {
    const ModTerm& lead_i = gens[i].front();
    // Minimal generators of the quotient ideal (n_j : n_i) over j > i in the
    // same component; each yields one syzygy with leading term u e_i.
    std::vector<std::pair<Monomial, std::size_t>> cands;
    for (std::size_t j : by_comp[lead_i.comp]) {
      if (j <= i) continue;
      const Monomial& nj = gens[j].front().mono;
      cands.emplace_back(nj / gcd(lead_i.mono, nj), j);
    }
    std::stable_sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) {
      return prev.ring().compare(a.first, b.first) < 0;
    });
    std::vector<std::pair<Monomial, std::size_t>> minimal;
    for (const auto& c : cands)
      if (std::none_of(minimal.begin(), minimal.end(),
                       [&](const auto& k) { return k.first.divides(c.first); }))
        minimal.push_back(c);

    for (const auto& [u_i, j] : minimal) {
      const ModTerm& lead_j = gens[j].front();
      const Monomial l = u_i * lead_i.mono;
      const Monomial u_j = l / lead_j.mono;
      Rational ci = 1 / lead_i.coeff, cj = 1 / lead_j.coeff;

      ModVec work;
      sub_scaled(prev, work, -ci, u_i, gens[i]);
      sub_scaled(prev, work, cj, u_j, gens[j]);

      ModVec syz{ord.make(u_i, static_cast<std::uint32_t>(i), ci),
                 ord.make(u_j, static_cast<std::uint32_t>(j), -cj)};
      while (!work.empty()) {
        const ModTerm& t = work.front();
        std::size_t l = reducer_for(t);
        if (l == gens.size()) throw std::logic_error("syzygy reduction stuck: input is not a Groebner basis");
        Rational q = t.coeff / gens[l].front().coeff;
        Monomial m = t.mono / gens[l].front().mono;
        syz.push_back(ord.make(m, static_cast<std::uint32_t>(l), -q));
        sub_scaled(prev, work, q, m, gens[l]);
      }
      normalize(ord, syz);
      if (syz.front().comp != i || !(syz.front().mono == u_i))
        throw std::logic_error("syzygy has unexpected leading term");
      Rational scale_by = 1 / syz.front().coeff;
      for (auto& t : syz) t.coeff *= scale_by;
      level.syzygies.push_back(std::move(syz));
    }
  }
  return level;
}

std::vector<Polynomial> to_column(const Ring& ring, const ModVec& v, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) parts[t.comp].push_back(Term{t.mono, t.coeff});
  std::vector<Polynomial> col;
  col.reserve(rank);
  for (auto& p : parts) col.emplace_back(ring, std::move(p));
  return col;
}

ResolutionStep make_step(const Ring& ring, const SchreyerOrder& target_order,
                         const std::vector<ModVec>& columns) {
  ResolutionStep step;
  for (std::size_t i = 0; i < target_order.rank(); ++i)
    step.target.twists.push_back(static_cast<int>(target_order.weight(i).degree()));
  for (const auto& c : columns)
    step.source.twists.push_back(static_cast<int>(c.front().total.degree()));
  step.matrix.assign(target_order.rank(), {});
  for (auto& row : step.matrix) row.reserve(columns.size());
  for (const auto& c : columns) {
    auto col = to_column(ring, c, target_order.rank());
    for (std::size_t r = 0; r < col.size(); ++r) step.matrix[r].push_back(std::move(col[r]));
  }
  return step;
}

std::vector<ModVec> basis_as_vectors(const SchreyerOrder& base, const GroebnerBasis& g) {
  std::vector<ModVec> gens;
  for (const auto& p : g.elements()) {
    ModVec v;
    for (const auto& t : p.terms()) v.push_back(base.make(t.mono, 0, t.coeff));
    gens.push_back(std::move(v));
  }
  return gens;
}

void check_homogeneous_basis(const GroebnerBasis& g) {
  for (const auto& p : g.elements())
    if (!is_homogeneous(p)) throw PreconditionError("resolution requires a homogeneous ideal");
}

}  // namespace

ResolutionStep syzygy_basis(const GroebnerBasis& g) {
  check_homogeneous_basis(g);
  SchreyerOrder base(*g.ring(), {Monomial{}});
  auto gens = basis_as_vectors(base, g);
  Level level = syzygies_of(base, gens);
  return make_step(g.ring(), level.order, level.syzygies);
}

GradedResolution free_resolution(const IdealHandle& ideal, std::size_t max_length) {
  const GroebnerBasis& gb = ideal.groebner_basis();
  check_homogeneous_basis(gb);
  const Ring& ring = ideal.ring();
  GradedResolution res{ring, {}, true};

  SchreyerOrder order(*ring, {Monomial{}});
  std::vector<ModVec> gens = basis_as_vectors(order, gb);
  while (!gens.empty()) {
    if (res.steps.size() == max_length) {
      res.complete = false;
      break;
    }
    sort_for_schreyer(gens);
    res.steps.push_back(make_step(ring, order, gens));
    Level next = syzygies_of(order, gens);
    order = std::move(next.order);
    gens = std::move(next.syzygies);
  }
  return res;
}

namespace {

void cancel(GradedResolution& res, std::size_t k, std::size_t r, std::size_t c) {
  auto& m = res.steps[k].matrix;
  const Rational inv = 1 / m[r][c].leading_coefficient();
  for (std::size_t j = 0; j < m[r].size(); ++j) {
    if (j == c || m[r][j].is_zero()) continue;
    Polynomial a = inv * m[r][j];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      m[i][j] -= m[i][c] * a;
    }
  }
  m.erase(m.begin() + static_cast<std::ptrdiff_t>(r));
  for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
  auto& tt = res.steps[k].target.twists;
  auto& st = res.steps[k].source.twists;
  tt.erase(tt.begin() + static_cast<std::ptrdiff_t>(r));
  st.erase(st.begin() + static_cast<std::ptrdiff_t>(c));

  if (k + 1 < res.steps.size()) {
    auto& next = res.steps[k + 1];
    next.matrix.erase(next.matrix.begin() + static_cast<std::ptrdiff_t>(c));
    next.target.twists.erase(next.target.twists.begin() + static_cast<std::ptrdiff_t>(c));
  }
  if (k > 0) {
    auto& prev = res.steps[k - 1];
    for (auto& row : prev.matrix) row.erase(row.begin() + static_cast<std::ptrdiff_t>(r));
    prev.source.twists.erase(prev.source.twists.begin() + static_cast<std::ptrdiff_t>(r));
  }
}

bool find_unit(const GradedResolution& res, std::size_t& k, std::size_t& r, std::size_t& c) {
  for (k = 0; k < res.steps.size(); ++k) {
    const auto& s = res.steps[k];
    for (r = 0; r < s.matrix.size(); ++r) {
      for (c = 0; c < s.matrix[r].size(); ++c) {
        if (s.source.twists[c] != s.target.twists[r]) continue;
        const Polynomial& e = s.matrix[r][c];
        if (!e.is_zero() && e.is_constant()) return true;
      }
    }
  }
  return false;
}

// Unit entry of step k whose cancellation touches the fewest entries
// (Markowitz cost), ties to the smallest (row, column).
bool cheapest_unit(const ResolutionStep& s, std::size_t& r, std::size_t& c) {
  const auto& m = s.matrix;
  std::vector<std::size_t> row_nnz(m.size(), 0), col_nnz(s.source.rank(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (!m[i][j].is_zero()) ++row_nnz[i], ++col_nnz[j];
  bool found = false;
  std::size_t best = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (s.source.twists[j] != s.target.twists[i]) continue;
      const Polynomial& e = m[i][j];
      if (e.is_zero() || !e.is_constant()) continue;
      std::size_t cost = (row_nnz[i] - 1) * (col_nnz[j] - 1);
      if (!found || cost < best) {
        found = true;
        best = cost;
        r = i;
        c = j;
      }
    }
  }
  return found;
}

// Scales every column of step k to primitive integer coefficients; the
// matching row of step k+1 takes the inverse factor.
void make_columns_primitive(GradedResolution& res, std::size_t k) {
  auto& m = res.steps[k].matrix;
  for (std::size_t c = 0; c < res.steps[k].source.rank(); ++c) {
    BigInt num = 0, den = 1;
    for (const auto& row : m)
      for (const auto& t : row[c].terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
      }
    if (num == 0 || (num == 1 && den == 1)) continue;
    Rational lambda(den, num);
    lambda.canonicalize();
    for (auto& row : m)
      if (!row[c].is_zero()) row[c] = lambda * row[c];
    if (k + 1 < res.steps.size()) {
      Rational inv = 1 / lambda;
      for (auto& e : res.steps[k + 1].matrix[c])
        if (!e.is_zero()) e = inv * e;
    }
  }
}

}  // namespace

GradedResolution minimize(GradedResolution r) {
  for (std::size_t k = 0; k < r.steps.size(); ++k) {
    make_columns_primitive(r, k);
    std::size_t row, col;
    while (cheapest_unit(r.steps[k], row, col)) {
      cancel(r, k, row, col);
      make_columns_primitive(r, k);
    }
  }
  while (!r.steps.empty() && r.steps.back().source.rank() == 0) {
    if (r.steps.size() == 1 && r.steps[0].target.rank() == 0) break;  // unit ideal: S/I = 0
    r.steps.pop_back();
  }
  return r;
}

bool is_minimal(const GradedResolution& r) {
  std::size_t k, row, col;
  return !find_unit(r, k, row, col);
}

BettiTable betti_table(const GradedResolution& r, AlgebraVariant variant) {
  BettiTable t(variant);
  if (r.steps.empty()) {
    t.add(0, 0, 1);
    return t;
  }
  for (int j : r.steps[0].target.twists) t.add(0, j, 1);
  for (std::size_t k = 0; k < r.steps.size(); ++k)
    for (int j : r.steps[k].source.twists) t.add(static_cast<unsigned>(k + 1), j, 1);
  return t;
}

std::vector<std::vector<Polynomial>> multiply(const Ring& ring,
                                              const std::vector<std::vector<Polynomial>>& a,
                                              const std::vector<std::vector<Polynomial>>& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  std::vector<std::vector<Polynomial>> out(rows, std::vector<Polynomial>(cols, Polynomial(ring)));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("matrix shapes do not compose");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

ResolutionReport verify_resolution(const GradedResolution& r, const IdealHandle& ideal) {
  ResolutionReport rep;
  rep.complex_ok = true;
  for (std::size_t k = 0; k < r.steps.size() && rep.complex_ok; ++k) {
    const auto& s = r.steps[k];
    if (s.matrix.size() != s.target.rank()) rep.complex_ok = false;
    for (std::size_t i = 0; i < s.matrix.size() && rep.complex_ok; ++i) {
      if (s.matrix[i].size() != s.source.rank()) {
        rep.complex_ok = false;
        break;
      }
      for (std::size_t j = 0; j < s.source.rank(); ++j) {
        const Polynomial& e = s.matrix[i][j];
        if (e.is_zero()) continue;
        auto h = is_homogeneous(e);
        if (!h || *h != s.source.twists[j] - s.target.twists[i]) {
          rep.complex_ok = false;
          break;
        }
      }
    }
    if (rep.complex_ok && k + 1 < r.steps.size()) {
      if (r.steps[k + 1].target.twists != s.source.twists) {
        rep.complex_ok = false;
        break;
      }
      for (const auto& row : multiply(r.ring, s.matrix, r.steps[k + 1].matrix))
        for (const auto& e : row)
          if (!e.is_zero()) rep.complex_ok = false;
    }
  }
  if (!r.steps.empty() && r.steps[0].target.twists != std::vector<int>{0} &&
      !r.steps[0].target.twists.empty())
    rep.complex_ok = false;

  rep.hp_ok = hp_from_betti(betti_table(r, AlgebraVariant::M)) == hilbert_series(ideal).numerator;
  return rep;
}

}  // namespace ci2
