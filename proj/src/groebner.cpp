#include "ci2/groebner.hpp"

#include <algorithm>
#include <deque>

#include "ci2/errors.hpp"

namespace ci2 {

namespace {

Polynomial reduce(Polynomial work, const std::vector<const Polynomial*>& reducers) {
  Polynomial rem(work.ring());
  while (!work.is_zero()) {
    const Monomial lm = work.leading_monomial();
    const Polynomial* divisor = nullptr;
    for (const Polynomial* r : reducers) {
      if (r->leading_monomial().divides(lm)) {
        divisor = r;
        break;
      }
    }
    if (divisor) {
      Rational c = work.leading_coefficient() / divisor->leading_coefficient();
      work.sub_scaled(c, lm / divisor->leading_monomial(), *divisor);
    } else {
      rem.push_smallest(work.take_leading());
    }
  }
  return rem;
}

std::vector<const Polynomial*> pointers(std::span<const Polynomial> ps) {
  std::vector<const Polynomial*> out;
  for (const auto& p : ps)
    if (!p.is_zero()) out.push_back(&p);
  return out;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
  bool generator;  // i indexes the input generators, j unused
};

}  // namespace

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_[0].is_constant();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.leading_monomial());
  return out;
}

DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors) {
  DivisionResult result{{}, Polynomial(p.ring())};
  for (const auto& d : divisors) {
    require_same_ring(p.ring(), d.ring());
    result.quotients.emplace_back(p.ring());
  }
  Polynomial work = p;
  while (!work.is_zero()) {
    const Monomial lm = work.leading_monomial();
    std::size_t k = 0;
    for (; k < divisors.size(); ++k)
      if (!divisors[k].is_zero() && divisors[k].leading_monomial().divides(lm)) break;
    if (k < divisors.size()) {
      Rational c = work.leading_coefficient() / divisors[k].leading_coefficient();
      Monomial m = lm / divisors[k].leading_monomial();
      result.quotients[k].push_smallest(Term{m, c});
      work.sub_scaled(c, m, divisors[k]);
    } else {
      result.remainder.push_smallest(work.take_leading());
    }
  }
  return result;
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors) {
  for (const auto& d : divisors) require_same_ring(p.ring(), d.ring());
  return reduce(p, pointers(divisors));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  require_same_ring(p.ring(), g.ring());
  return reduce(p, pointers(g.elements()));
}

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring(), q.ring());
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("s_polynomial of zero");
  Monomial l = lcm(p.leading_monomial(), q.leading_monomial());
  Polynomial s = p.times_monomial(l / p.leading_monomial(), 1 / p.leading_coefficient());
  s.sub_scaled(1 / q.leading_coefficient(), l / q.leading_monomial(), q);
  return s;
}

GroebnerBasis buchberger(const Ring& ring, std::span<const Polynomial> generators,
                         BuchbergerStats* stats) {
  if (!ring) throw std::invalid_argument("buchberger: empty ring");
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  const RingSpec& spec = *ring;

  std::deque<Polynomial> basis;
  std::vector<unsigned> sugar;
  std::vector<char> active;
  std::vector<Pair> pairs;

  for (std::size_t k = 0; k < generators.size(); ++k) {
    require_same_ring(ring, generators[k].ring());
    if (generators[k].is_zero()) continue;
    pairs.push_back(Pair{k, 0, generators[k].leading_monomial(),
                         generators[k].total_degree(), true});
  }

  auto before = [&](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = spec.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.generator != b.generator) return a.generator;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  auto insert = [&](Polynomial h, unsigned s) {
    const std::size_t t = basis.size();
    const Monomial& lh = h.leading_monomial();
    const unsigned h_shift = s - lh.degree();

    struct Candidate {
      std::size_t i;
      Monomial lcm;
      unsigned sugar;
      bool coprime;
    };
    std::vector<Candidate> fresh;
    for (std::size_t i = 0; i < t; ++i) {
      if (!active[i]) continue;
      const Monomial& li = basis[i].leading_monomial();
      Monomial l = lcm(li, lh);
      unsigned s_pair = std::max(sugar[i] - li.degree(), h_shift) + l.degree();
      fresh.push_back(Candidate{i, l, s_pair, li.coprime(lh)});
    }

    // Gebauer-Moeller: chain criterion among the new pairs, then the
    // coprime-lcm criterion.
    std::vector<Candidate> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Candidate& p = fresh[a];
      bool redundant = false;
      if (!p.coprime) {
        for (std::size_t b = a + 1; b < fresh.size() && !redundant; ++b)
          redundant = fresh[b].lcm.divides(p.lcm);
        for (std::size_t b = 0; b < kept.size() && !redundant; ++b)
          redundant = kept[b].lcm.divides(p.lcm);
      }
      if (!redundant) kept.push_back(p);
    }

    std::erase_if(pairs, [&](const Pair& p) {
      if (p.generator || !lh.divides(p.lcm)) return false;
      const Monomial& li = basis[p.i].leading_monomial();
      const Monomial& lj = basis[p.j].leading_monomial();
      return !(lcm(li, lh) == p.lcm) && !(lcm(lj, lh) == p.lcm);
    });

    for (const auto& c : kept) {
      if (c.coprime) continue;
      pairs.push_back(Pair{c.i, t, c.lcm, c.sugar, false});
      ++st.pairs_created;
    }

    for (std::size_t i = 0; i < t; ++i)
      if (active[i] && lh.divides(basis[i].leading_monomial())) active[i] = 0;

    basis.push_back(std::move(h));
    sugar.push_back(s);
    active.push_back(1);
  };

  std::vector<const Polynomial*> reducers;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), before);
    Pair p = *best;
    pairs.erase(best);

    Polynomial h = p.generator ? generators[p.i] : s_polynomial(basis[p.i], basis[p.j]);
    ++st.pairs_reduced;
    reducers.clear();
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (active[i]) reducers.push_back(&basis[i]);
    h = reduce(std::move(h), reducers);
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    h = h.monic();
    if (h.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
    unsigned s = std::max(p.sugar, h.total_degree());
    insert(std::move(h), s);
  }

  std::vector<Polynomial> result;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (active[i]) result.push_back(basis[i]);
  std::sort(result.begin(), result.end(), [&](const Polynomial& a, const Polynomial& b) {
    return spec.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (std::size_t k = 0; k < result.size(); ++k) {
    reducers.clear();
    for (std::size_t i = 0; i < result.size(); ++i)
      if (i != k) reducers.push_back(&result[i]);
    result[k] = reduce(std::move(result[k]), reducers);
  }
  return GroebnerBasis(ring, std::move(result));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& g) {
  const auto& e = g.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (!normal_form(s_polynomial(e[i], e[j]), g).is_zero()) return false;
  return true;
}

bool is_reduced(const GroebnerBasis& g) {
  const auto& e = g.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].is_zero() || e[i].leading_coefficient() != 1) return false;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      const Monomial& lj = e[j].leading_monomial();
      for (const auto& t : e[i].terms())
        if (lj.divides(t.mono)) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------- IdealHandle

IdealHandle::IdealHandle(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)),
      generators_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) require_same_ring(ring_, g.ring());
}

bool IdealHandle::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& p) { return ci2::is_homogeneous(p).has_value(); });
}

const GroebnerBasis& IdealHandle::groebner_basis() const {
  std::call_once(cache_->once, [&] { cache_->basis.emplace(buchberger(ring_, generators_)); });
  return *cache_->basis;
}

IdealHandle IdealHandle::in_ring(Ring target) const {
  std::vector<Polynomial> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(g.in_ring(target));
  return IdealHandle(std::move(target), std::move(gens));
}

bool ideal_membership(const Polynomial& p, const IdealHandle& ideal) {
  require_same_ring(p.ring(), ideal.ring());
  return normal_form(p, ideal.groebner_basis()).is_zero();
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a.ring(), b.ring());
  for (const auto& g : a.generators())
    if (!normal_form(g, b.groebner_basis()).is_zero()) return false;
  for (const auto& g : b.generators())
    if (!normal_form(g, a.groebner_basis()).is_zero()) return false;
  return true;
}

std::vector<Monomial> minimalize(const RingSpec& ring, std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) < 0; });
  std::vector<Monomial> kept;
  for (const auto& m : gens) {
    bool divisible = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(m); });
    if (!divisible) kept.push_back(m);
  }
  return kept;
}

std::vector<Monomial> leading_term_ideal(const IdealHandle& ideal) {
  return minimalize(*ideal.ring(), ideal.groebner_basis().leading_monomials());
}

}  // namespace ci2
