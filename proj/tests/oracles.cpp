#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ci2/ideals.hpp"

namespace ci2::oracle {

std::size_t rank(Matrix m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational q = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (m[r][k] != 0) m[i][k] -= q * m[r][k];
    }
    ++r;
  }
  return r;
}

namespace {

void fill(std::size_t n, unsigned k, std::size_t var, std::vector<unsigned>& e, std::vector<Monomial>& out) {
  if (var + 1 == n) {
    e[var] = k;
    out.emplace_back(std::span<const unsigned>(e));
    e[var] = 0;
    return;
  }
  for (unsigned a = k + 1; a-- > 0;) {
    e[var] = a;
    fill(n, k - a, var + 1, e, out);
  }
  e[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned k) {
  std::vector<Monomial> out;
  if (n == 0) return out;
  std::vector<unsigned> e(n, 0);
  fill(n, k, 0, e, out);
  return out;
}

std::int64_t macaulay_hilbert_function(const std::vector<Polynomial>& gens, std::size_t n, unsigned k) {
  auto basis = monomials_of_degree(n, k);
  std::map<std::vector<unsigned>, std::size_t> index;
  auto key = [n](const Monomial& m) {
    std::vector<unsigned> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = m.exponent(i);
    return v;
  };
  for (std::size_t i = 0; i < basis.size(); ++i) index[key(basis[i])] = i;

  Matrix rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto deg = is_homogeneous(g);
    if (!deg) throw std::invalid_argument("macaulay oracle needs homogeneous generators");
    if (static_cast<unsigned>(*deg) > k) continue;
    for (const auto& m : monomials_of_degree(n, k - static_cast<unsigned>(*deg))) {
      std::vector<Rational> row(basis.size());
      for (const auto& t : g.terms()) row[index.at(key(t.mono * m))] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(basis.size() - rank(std::move(rows)));
}

std::int64_t standard_monomial_count(const std::vector<Monomial>& leads, std::size_t n, unsigned k) {
  std::int64_t count = 0;
  for (const auto& m : monomials_of_degree(n, k))
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); }))
      ++count;
  return count;
}

BettiTable koszul_betti(const IdealHandle& ideal, AlgebraVariant variant) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring->num_variables();
  const GroebnerBasis& gb = ideal.groebner_basis();
  std::vector<Monomial> standard = standard_monomials(ideal);

  // Standard monomials grouped by degree, with positions.
  unsigned top = 0;
  for (const auto& m : standard) top = std::max(top, m.degree());
  std::vector<std::vector<Monomial>> by_deg(top + 2);
  for (const auto& m : standard) by_deg[m.degree()].push_back(m);
  auto pos = [&](const Monomial& m) -> std::size_t {
    const auto& v = by_deg[m.degree()];
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), m) - v.begin());
  };
  auto dim_q = [&](int k) -> std::size_t {
    return k < 0 || k > static_cast<int>(top) ? 0 : by_deg[static_cast<std::size_t>(k)].size();
  };

  // Subsets of the variables of each size, as sorted index lists.
  std::vector<std::vector<std::vector<std::size_t>>> subsets(n + 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    subsets[s.size()].push_back(s);
  }
  auto subset_index = [&](const std::vector<std::size_t>& s) {
    const auto& list = subsets[s.size()];
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), s) - list.begin());
  };

  // Rank of d_i: K_i -> K_{i-1} in internal degree j.
  auto rank_d = [&](std::size_t i, int j) -> std::size_t {
    if (i == 0 || i > n) return 0;
    const int src_deg = j - static_cast<int>(i);
    const int dst_deg = j - static_cast<int>(i) + 1;
    if (dim_q(src_deg) == 0 || dim_q(dst_deg) == 0) return 0;
    const std::size_t dst_block = dim_q(dst_deg);
    Matrix m;
    for (const auto& T : subsets[i]) {
      for (const auto& mono : by_deg[static_cast<std::size_t>(src_deg)]) {
        std::vector<Rational> row(subsets[i - 1].size() * dst_block);
        for (std::size_t k = 0; k < T.size(); ++k) {
          std::vector<std::size_t> rest = T;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
          Polynomial image = normal_form(Polynomial::monomial(ring, mono * Monomial::variable(T[k])), gb);
          const std::size_t base = subset_index(rest) * dst_block;
          for (const auto& t : image.terms()) {
            Rational c = k % 2 == 0 ? t.coeff : Rational(-t.coeff);
            row[base + pos(t.mono)] += c;
          }
        }
        m.push_back(std::move(row));
      }
    }
    return rank(std::move(m));
  };

  BettiTable table(variant);
  for (std::size_t i = 0; i <= n; ++i) {
    for (int j = static_cast<int>(i); j <= static_cast<int>(top + i); ++j) {
      const std::size_t dim_k = subsets[i].size() * dim_q(j - static_cast<int>(i));
      if (dim_k == 0) continue;
      const std::size_t b = dim_k - rank_d(i, j) - rank_d(i + 1, j);
      table.add(static_cast<unsigned>(i), j, static_cast<unsigned>(b));
    }
  }
  return table;
}

Polynomial random_polynomial(const Ring& ring, std::mt19937_64& rng, unsigned max_deg,
                             std::size_t max_terms) {
  const std::size_t n = ring->num_variables();
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::vector<Term> terms;
  for (std::size_t t = count(rng); t > 0; --t) {
    auto monos = monomials_of_degree(n, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    int c = coeff(rng);
    Rational q(c, 1 + static_cast<int>(rng() % 3));
    q.canonicalize();
    terms.push_back(Term{monos[pick(rng)], q});
  }
  return Polynomial(ring, std::move(terms));
}

Polynomial random_form(const Ring& ring, std::mt19937_64& rng, unsigned d, std::size_t max_terms) {
  auto monos = monomials_of_degree(ring->num_variables(), d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coeff(1, 9);
  for (;;) {
    std::vector<Term> terms;
    std::size_t count = 1 + rng() % max_terms;
    for (std::size_t t = 0; t < count; ++t)
      terms.push_back(Term{monos[pick(rng)], Rational(rng() % 2 ? coeff(rng) : -coeff(rng))});
    Polynomial p(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

}  // namespace ci2::oracle
