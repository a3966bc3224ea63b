#include <algorithm>

#include "fanalg/error.hpp"
#include "fanalg/groebner/groebner.hpp"

namespace fanalg::groebner {

using poly::Monomial;

std::string to_string(BasisStatus status) {
  switch (status) {
    case BasisStatus::raw: return "raw";
    case BasisStatus::groebner: return "groebner";
    case BasisStatus::reduced_groebner: return "reduced-groebner";
  }
  return "raw";
}

namespace {

// Terms kept in decreasing order under the reduction order, so the leading
// term is always front().
template <class F>
using Terms = std::vector<typename Polynomial<F>::Term>;

template <class F>
Terms<F> subtract_multiple(const Terms<F>& p, std::size_t from, const Terms<F>& g, const Monomial& m,
                           const typename F::Element& c, const F& field, const MonomialOrder& order) {
  Terms<F> out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    const Monomial mg = g[j].monomial * m;
    const auto cmp = i == p.size() ? std::strong_ordering::less : order.compare(p[i].monomial, mg);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({mg, field.neg(field.mul(c, g[j].coeff))});
      ++j;
    } else {
      auto s = field.sub(p[i].coeff, field.mul(c, g[j].coeff));
      if (!field.is_zero(s)) out.push_back({mg, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

template <class F>
Reduction<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& generators, const MonomialOrder& order) {
  const F& field = f.field();
  std::vector<Terms<F>> gens;
  std::vector<typename F::Element> lead_inv;
  for (const auto& g : generators) {
    if (!poly::same_table(g.table(), f.table()) || !(g.field() == field)) {
      throw DomainError("reduction across different rings");
    }
    if (g.is_zero()) throw DomainError("cannot reduce by the zero polynomial");
    gens.push_back(poly::sorted_terms(g, order));
    lead_inv.push_back(field.inv(gens.back().front().coeff));
  }
  std::vector<Terms<F>> quotients(generators.size());
  Terms<F> remainder;
  Terms<F> p = poly::sorted_terms(f, order);
  std::size_t pos = 0;
  while (pos < p.size()) {
    const auto& lead = p[pos];
    std::size_t k = 0;
    while (k < gens.size() && !gens[k].front().monomial.divides(lead.monomial)) ++k;
    if (k == gens.size()) {
      remainder.push_back(lead);
      ++pos;
      continue;
    }
    const Monomial m = lead.monomial / gens[k].front().monomial;
    const auto c = field.mul(lead.coeff, lead_inv[k]);
    quotients[k].push_back({m, c});
    p = subtract_multiple(p, pos, gens[k], m, c, field, order);
    pos = 0;
  }
  Reduction<F> out{Polynomial<F>::from_terms(f.table(), std::move(remainder), field), {}};
  for (auto& q : quotients) out.quotients.push_back(Polynomial<F>::from_terms(f.table(), std::move(q), field));
  return out;
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, const MonomialOrder& order) {
  const auto lf = poly::leading_term(f, order);
  const auto lg = poly::leading_term(g, order);
  const Monomial l = Monomial::lcm(lf.monomial, lg.monomial);
  const F& field = f.field();
  return f.times(l / lf.monomial, field.inv(lf.coeff)) - g.times(l / lg.monomial, field.inv(lg.coeff));
}

template <class F>
GbCertificate is_groebner_basis(const std::vector<Polynomial<F>>& generators, const MonomialOrder& order) {
  GbCertificate cert;
  for (const auto& g : generators) {
    if (g.is_zero()) throw DomainError("Groebner basis check needs nonzero generators");
  }
  std::vector<Monomial> leads;
  for (const auto& g : generators) leads.push_back(poly::leading_term(g, order).monomial);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (leads[i].coprime(leads[j])) {
        ++cert.pairs_skipped_coprime;
        continue;
      }
      ++cert.pairs_checked;
      const auto s = s_polynomial(generators[i], generators[j], order);
      if (!reduce(s, generators, order).normal_form.is_zero()) cert.failing_pairs.emplace_back(i, j);
    }
  }
  cert.is_groebner = cert.failing_pairs.empty();
  return cert;
}

template <class F>
bool ideal_membership(const Polynomial<F>& f, const Basis<F>& basis) {
  if (basis.status == BasisStatus::raw) {
    throw DomainError("membership needs a Groebner basis; this basis is raw");
  }
  return reduce(f, basis).normal_form.is_zero();
}

#define FANALG_GROEBNER_INSTANTIATE(F)                                                                              \
  template Reduction<F> reduce(const Polynomial<F>&, const std::vector<Polynomial<F>>&, const MonomialOrder&);     \
  template Polynomial<F> s_polynomial(const Polynomial<F>&, const Polynomial<F>&, const MonomialOrder&);           \
  template GbCertificate is_groebner_basis(const std::vector<Polynomial<F>>&, const MonomialOrder&);               \
  template bool ideal_membership(const Polynomial<F>&, const Basis<F>&);

FANALG_GROEBNER_INSTANTIATE(poly::RationalField)
FANALG_GROEBNER_INSTANTIATE(poly::PrimeField)

#undef FANALG_GROEBNER_INSTANTIATE

}  // namespace fanalg::groebner
