#include "ci2/ideals.hpp"

#include <algorithm>

#include "ci2/errors.hpp"

namespace ci2 {

std::string_view to_string(AlgebraVariant v) {
  switch (v) {
    case AlgebraVariant::M:
      return "M";
    case AlgebraVariant::A:
      return "A";
    case AlgebraVariant::B:
      return "B";
  }
  return "?";
}

namespace {

void require_homogeneous(const Polynomial& p, const char* what) {
  if (!is_homogeneous(p))
    throw PreconditionError(std::string(what) + " is not homogeneous");
}

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.spec().num_variables(); ++i)
    out.push_back(partial_derivative(f, i));
  return out;
}

std::vector<Polynomial> minor_generators(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  require_homogeneous(f, "f");
  require_homogeneous(g, "g");
  auto df = gradient(f);
  auto dg = gradient(g);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < df.size(); ++i)
    for (std::size_t j = i + 1; j < df.size(); ++j) {
      Polynomial m = df[i] * dg[j] - df[j] * dg[i];
      if (!m.is_zero()) out.push_back(std::move(m));
    }
  return out;
}

// Every variable has a pure power among the leading monomials.
bool has_all_pure_powers(const GroebnerBasis& gb) {
  if (gb.is_unit()) return true;
  const std::size_t n = gb.ring()->num_variables();
  std::vector<char> seen(n, 0);
  for (const auto& lm : gb.leading_monomials()) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lm.exponent(i) != 0) {
        ++support;
        var = i;
      }
    if (support == 1) seen[var] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

IdealHandle jacobian_ideal(const Polynomial& f) {
  require_homogeneous(f, "f");
  std::vector<Polynomial> gens;
  for (auto& p : gradient(f))
    if (!p.is_zero()) gens.push_back(std::move(p));
  return IdealHandle(f.ring(), std::move(gens));
}

IdealHandle minors2(const Polynomial& f, const Polynomial& g) {
  return IdealHandle(f.ring(), minor_generators(f, g));
}

IdealHandle ideal_A(const Polynomial& f, const Polynomial& g) {
  auto minors = minor_generators(f, g);
  std::vector<Polynomial> gens{f};
  gens.insert(gens.end(), minors.begin(), minors.end());
  return IdealHandle(f.ring(), std::move(gens));
}

IdealHandle ideal_B(const Polynomial& f, const Polynomial& g) {
  auto minors = minor_generators(f, g);
  std::vector<Polynomial> gens{f, g};
  gens.insert(gens.end(), minors.begin(), minors.end());
  return IdealHandle(f.ring(), std::move(gens));
}

bool is_zero_dimensional(const IdealHandle& ideal) {
  return has_all_pure_powers(ideal.groebner_basis());
}

std::vector<Monomial> standard_monomials(const IdealHandle& ideal) {
  if (!is_zero_dimensional(ideal))
    throw PreconditionError("quotient is infinite-dimensional");
  const GroebnerBasis& gb = ideal.groebner_basis();
  std::vector<Monomial> out;
  if (gb.is_unit()) return out;
  const auto leads = gb.leading_monomials();
  const std::size_t n = ideal.ring()->num_variables();
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(),
                        [&](const Monomial& l) { return l.divides(m); });
  };
  // Each standard monomial is reached once: extend only by variables at or
  // after the last variable in its support. Divisors of standard monomials are
  // standard, so pruning is safe.
  struct Item {
    Monomial m;
    std::size_t last;
  };
  std::vector<Item> stack{{Monomial{}, 0}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    out.push_back(it.m);
    for (std::size_t v = it.last; v < n; ++v) {
      Monomial next = it.m * Monomial::variable(v);
      if (standard(next)) stack.push_back(Item{next, v});
    }
  }
  const RingSpec& spec = *ideal.ring();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return spec.compare(a, b) < 0; });
  return out;
}

std::size_t quotient_dimension(const IdealHandle& ideal) {
  return standard_monomials(ideal).size();
}

QuotientAlgebra make_quotient(IdealHandle ideal, AlgebraVariant variant) {
  QuotientAlgebra q{std::move(ideal), variant, std::nullopt, std::nullopt};
  q.finite = is_zero_dimensional(q.ideal);
  if (*q.finite) q.dimension = quotient_dimension(q.ideal);
  return q;
}

bool is_smooth_hypersurface(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("zero polynomial defines no hypersurface");
  return is_zero_dimensional(jacobian_ideal(f));
}

CompleteIntersectionReport is_smooth_complete_intersection(const Polynomial& f,
                                                           const Polynomial& g) {
  if (!is_smooth_hypersurface(f)) throw PreconditionError("V(f) is not smooth");
  require_same_ring(f.ring(), g.ring());
  require_homogeneous(g, "g");
  CompleteIntersectionReport r;
  r.dimA_finite = is_zero_dimensional(ideal_A(f, g));
  r.dimB_finite = is_zero_dimensional(ideal_B(f, g));
  r.ci = r.dimA_finite;
  return r;
}

bool radical_membership(const Polynomial& h, const IdealHandle& ideal) {
  require_same_ring(h.ring(), ideal.ring());
  if (h.is_zero()) return true;
  const GroebnerBasis& gb = ideal.groebner_basis();
  // Cheap sufficient check first: a small power already lies in I.
  Polynomial power = h;
  for (int k = 1; k <= 4; ++k) {
    if (normal_form(power, gb).is_zero()) return true;
    power = power * h;
  }

  const RingSpec& spec = *ideal.ring();
  if (spec.num_variables() >= kMaxVariables)
    throw PreconditionError("no room for the auxiliary variable");
  std::vector<std::string> names = spec.variables();
  std::string tau = "_tau";
  while (spec.variable_index(tau)) tau += "_";
  names.push_back(tau);
  Ring ext = make_ring(std::move(names), spec.order());
  const std::size_t tau_index = spec.num_variables();

  auto embed = [&](const Polynomial& p) {
    return Polynomial(ext, std::vector<Term>(p.terms().begin(), p.terms().end()));
  };
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g));
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, tau_index) * embed(h));
  return buchberger(ext, gens).is_unit();
}

bool radical_equal(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a.ring(), b.ring());
  for (const auto& g : a.generators())
    if (!radical_membership(g, b)) return false;
  for (const auto& g : b.generators())
    if (!radical_membership(g, a)) return false;
  return true;
}

bool radical_is_maximal(const IdealHandle& ideal) {
  if (!ideal.is_homogeneous()) throw PreconditionError("ideal is not homogeneous");
  return is_zero_dimensional(ideal) && !ideal.groebner_basis().is_unit();
}

}  // namespace ci2
