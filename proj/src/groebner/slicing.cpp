#include "fanalg/groebner/slicing.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fanalg/error.hpp"
#include "fanalg/random.hpp"

namespace fanalg::groebner {

using poly::FpPoly;
using poly::Monomial;
using poly::PrimeField;

std::optional<std::size_t> count_standard_monomials(const std::vector<Monomial>& leads, std::size_t nvars) {
  for (const auto& m : leads) {
    if (m.is_one()) return 0;
  }
  std::vector<unsigned> bound(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    for (const auto& m : leads) {
      const auto s = m.support();
      if (s.size() == 1 && s[0].first == v) {
        bound[v] = bound[v] == 0 ? s[0].second : std::min(bound[v], s[0].second);
      }
    }
    if (bound[v] == 0) return std::nullopt;
  }
  std::size_t count = 0;
  std::vector<unsigned> e(nvars, 0);
  // Standard monomials form an order ideal, so a divisible monomial prunes
  // every extension in the current coordinate.
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == nvars) {
      ++count;
      return;
    }
    for (unsigned x = 0; x < bound[v]; ++x) {
      e[v] = x;
      std::vector<unsigned> probe(e.begin(), e.end());
      for (std::size_t w = v + 1; w < nvars; ++w) probe[w] = 0;
      const Monomial m = Monomial::from_exponents(probe);
      bool divisible = false;
      for (const auto& l : leads) {
        if (l.divides(m)) {
          divisible = true;
          break;
        }
      }
      if (divisible) break;
      walk(v + 1);
    }
    e[v] = 0;
  };
  walk(0);
  return count;
}

SliceResult degree_by_slicing(const std::vector<poly::QPoly>& generators, const SliceSpec& spec, std::size_t trials,
                              const Limits& limits) {
  if (generators.empty()) throw DomainError("slicing needs at least one generator");
  if (spec.codim == 0) throw DomainError("slicing needs a positive codimension");
  const PrimeField field(spec.modulus);
  const auto& table = generators[0].table();
  std::vector<bool> used(table->size(), false);
  for (const auto& g : generators) {
    for (std::size_t v : g.variables()) used[v] = true;
  }
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= spec.codim; ++k) names.push_back("s" + std::to_string(k));
  const auto slice_table = poly::VariableTable::plain(names);
  std::vector<FpPoly> reduced;
  for (const auto& g : generators) reduced.push_back(poly::reduce_mod(g, field));

  SliceResult result;
  std::map<std::size_t, std::size_t> histogram;
  for (std::size_t t = 0; t < trials; ++t) {
    SliceTrial trial;
    trial.seed = derive_seed(spec.seed, t);
    Rng rng(trial.seed);
    std::vector<std::optional<FpPoly>> images(table->size());
    for (std::size_t v = 0; v < table->size(); ++v) {
      if (!used[v]) continue;
      std::vector<std::uint32_t> coeffs;
      FpPoly image = FpPoly::constant(slice_table, 0, field);
      for (std::size_t k = 0; k <= spec.codim; ++k) {
        const auto c = static_cast<std::uint32_t>(rng.uniform_below(spec.modulus));
        coeffs.push_back(c);
        image = image + (k == 0 ? FpPoly::constant(slice_table, c, field)
                                : FpPoly::variable(slice_table, k - 1, field).scaled(c));
      }
      images[v] = image;
      trial.substitution.emplace_back(v, std::move(coeffs));
    }
    std::vector<FpPoly> sliced;
    for (const auto& g : reduced) {
      auto s = g.substitute(images);
      if (!s.is_zero()) sliced.push_back(std::move(s));
    }
    if (sliced.empty()) {
      trial.note = "every generator vanished on the slice";
    } else {
      const auto basis = buchberger(sliced, MonomialOrder::grevlex(spec.codim), limits);
      if (basis.report.hit) {
        trial.note = "limit hit: " + basis.report.reason;
      } else {
        std::vector<Monomial> leads;
        for (const auto& g : basis.generators) leads.push_back(g.terms().front().monomial);
        const auto count = count_standard_monomials(leads, spec.codim);
        if (count) {
          trial.zero_dimensional = true;
          trial.degree = *count;
          ++histogram[*count];
          if (*count == 0) trial.note = "slice misses the variety; codimension may be too small";
        } else {
          trial.note = "slice is not zero-dimensional";
        }
      }
    }
    if (!trial.zero_dimensional) ++result.discarded;
    result.trials.push_back(std::move(trial));
  }
  std::size_t best = 0;
  for (const auto& [degree, hits] : histogram) {
    if (hits > best) {
      best = hits;
      result.modal_degree = degree;
    }
  }
  return result;
}

}  // namespace fanalg::groebner
