#include <algorithm>
#include <numeric>
#include <type_traits>

#include "engine.hpp"
#include "fanalg/error.hpp"

namespace fanalg::groebner {

namespace detail {

EngineOrder::EngineOrder(const MonomialOrder& order) : n_(order.nvars()) {
  using Kind = MonomialOrder::Kind;
  lex_ = order.kind() == Kind::lex || order.kind() == Kind::circular_lex;
  to_original_ = order.ranking();
  to_engine_.assign(n_, 0);
  for (std::size_t k = 0; k < n_; ++k) to_engine_[to_original_[k]] = k;
  for (std::size_t v : order.first_block()) block_.push_back(to_engine_[v]);
  std::sort(block_.begin(), block_.end());
}

Monomial EngineOrder::permute_in(const Monomial& m) const {
  std::vector<unsigned> e(n_, 0);
  for (const auto& [v, x] : m.support()) {
    if (v >= n_) throw DomainError("monomial uses a variable outside the order");
    e[to_engine_[v]] = x;
  }
  return Monomial::from_exponents(e);
}

Monomial EngineOrder::permute_out(const Monomial& m) const {
  std::vector<unsigned> e(n_, 0);
  for (const auto& [k, x] : m.support()) e[to_original_[k]] = x;
  return Monomial::from_exponents(e);
}

namespace {

template <class R>
constexpr bool is_fp() {
  return std::is_same_v<R, FpRing>;
}

}  // namespace

template <class R>
void Engine<R>::normalize(Poly& p) const {
  if (p.zero()) return;
  if constexpr (is_fp<R>()) {
    const auto inv = ring_.field.inv(p.coeffs[0]);
    if (inv != 1) {
      for (auto& c : p.coeffs) c = ring_.field.mul(c, inv);
    }
  } else {
    poly::Integer g = 0;
    for (const auto& c : p.coeffs) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    if (sgn(p.coeffs[0]) < 0) g = -g;
    if (g != 1) {
      for (auto& c : p.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }
}

template <class R>
typename Engine<R>::Poly Engine<R>::canonical(std::vector<Monomial> mons, std::vector<C> coeffs) const {
  std::vector<std::size_t> idx(mons.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return order_.compare(mons[a], mons[b]) > 0; });
  Poly out;
  for (std::size_t k : idx) {
    if (!out.zero() && out.mons.back() == mons[k]) {
      if constexpr (is_fp<R>()) {
        out.coeffs.back() = ring_.field.add(out.coeffs.back(), coeffs[k]);
      } else {
        out.coeffs.back() += coeffs[k];
      }
      if (out.coeffs.back() == 0) {
        out.mons.pop_back();
        out.coeffs.pop_back();
      }
    } else if (coeffs[k] != 0) {
      out.mons.push_back(mons[k]);
      out.coeffs.push_back(coeffs[k]);
    }
  }
  normalize(out);
  return out;
}

template <class R>
typename Engine<R>::Poly Engine<R>::axpy(const Poly& p, std::size_t from, const C& a, const C& c, const Monomial& m,
                                         const Poly& g) const {
  Poly out;
  out.mons.reserve(p.size() - from + g.size());
  out.coeffs.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 0;
  Monomial mg;
  bool have_mg = false;
  auto scaled_p = [&](std::size_t k) -> C {
    if constexpr (is_fp<R>()) {
      return a == 1 ? p.coeffs[k] : ring_.field.mul(a, p.coeffs[k]);
    } else {
      return a == 1 ? p.coeffs[k] : C(a * p.coeffs[k]);
    }
  };
  auto scaled_g = [&](std::size_t k) -> C {
    if constexpr (is_fp<R>()) {
      return ring_.field.neg(ring_.field.mul(c, g.coeffs[k]));
    } else {
      return C(-(c * g.coeffs[k]));
    }
  };
  while (i < p.size() || j < g.size()) {
    if (j < g.size() && !have_mg) {
      mg = g.mons[j] * m;
      have_mg = true;
    }
    int cmp;
    if (i == p.size()) {
      cmp = -1;
    } else if (j == g.size()) {
      cmp = 1;
    } else {
      cmp = order_.compare(p.mons[i], mg);
    }
    if (cmp > 0) {
      out.mons.push_back(p.mons[i]);
      out.coeffs.push_back(scaled_p(i));
      ++i;
    } else if (cmp < 0) {
      out.mons.push_back(mg);
      out.coeffs.push_back(scaled_g(j));
      ++j;
      have_mg = false;
    } else {
      C sum;
      if constexpr (is_fp<R>()) {
        sum = ring_.field.add(scaled_p(i), scaled_g(j));
      } else {
        sum = scaled_p(i) + scaled_g(j);
      }
      if (sum != 0) {
        out.mons.push_back(mg);
        out.coeffs.push_back(std::move(sum));
      }
      ++i;
      ++j;
      have_mg = false;
    }
  }
  return out;
}

template <class R>
typename Engine<R>::Poly Engine<R>::reduce(Poly p, const std::vector<std::size_t>& by) const {
  Poly done;
  std::size_t pos = 0;
  unsigned steps = 0;
  while (pos < p.size()) {
    const Monomial& lead = p.mons[pos];
    const std::uint64_t mask = divmask(lead);
    const Poly* divisor = nullptr;
    for (std::size_t k : by) {
      if ((masks_[k] & ~mask) == 0 && polys_[k].mons[0].divides(lead)) {
        divisor = &polys_[k];
        break;
      }
    }
    if (!divisor) {
      done.mons.push_back(lead);
      done.coeffs.push_back(p.coeffs[pos]);
      ++pos;
      continue;
    }
    const Monomial m = lead / divisor->mons[0];
    if constexpr (is_fp<R>()) {
      p = axpy(p, pos, 1, p.coeffs[pos], m, *divisor);
    } else {
      C g;
      mpz_gcd(g.get_mpz_t(), divisor->coeffs[0].get_mpz_t(), p.coeffs[pos].get_mpz_t());
      C a, c;
      mpz_divexact(a.get_mpz_t(), divisor->coeffs[0].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(c.get_mpz_t(), p.coeffs[pos].get_mpz_t(), g.get_mpz_t());
      p = axpy(p, pos, a, c, m, *divisor);
      if (a != 1) {
        for (auto& d : done.coeffs) d *= a;
      }
      // Strip content now and then so coefficients stay small.
      if (++steps % 8 == 0 && !done.zero()) {
        C content = 0;
        for (const auto& d : done.coeffs) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), d.get_mpz_t());
        for (const auto& d : p.coeffs) {
          if (content == 1) break;
          mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), d.get_mpz_t());
        }
        if (content > 1) {
          for (auto& d : done.coeffs) mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), content.get_mpz_t());
          for (auto& d : p.coeffs) mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), content.get_mpz_t());
        }
      }
    }
    pos = 0;
  }
  normalize(done);
  return done;
}

template <class R>
typename Engine<R>::Poly Engine<R>::spoly(std::size_t i, std::size_t j) const {
  const Poly& f = polys_[i];
  const Poly& g = polys_[j];
  const Monomial l = Monomial::lcm(f.mons[0], g.mons[0]);
  const Monomial mf = l / f.mons[0];
  const Monomial mg = l / g.mons[0];
  Poly shifted;
  shifted.mons.reserve(f.size());
  for (const auto& mon : f.mons) shifted.mons.push_back(mon * mf);
  if constexpr (is_fp<R>()) {
    shifted.coeffs = f.coeffs;
    return axpy(shifted, 0, 1, 1, mg, g);
  } else {
    C h;
    mpz_gcd(h.get_mpz_t(), f.coeffs[0].get_mpz_t(), g.coeffs[0].get_mpz_t());
    C a, c;
    mpz_divexact(a.get_mpz_t(), g.coeffs[0].get_mpz_t(), h.get_mpz_t());
    mpz_divexact(c.get_mpz_t(), f.coeffs[0].get_mpz_t(), h.get_mpz_t());
    shifted.coeffs = f.coeffs;
    return axpy(shifted, 0, a, c, mg, g);
  }
}

template <class R>
void Engine<R>::update(std::size_t h) {
  const Monomial& lh = polys_[h].mons[0];
  struct Candidate {
    std::size_t g;
    Monomial lcm;
    bool coprime;
    bool keep = true;
  };
  std::vector<Candidate> c;
  for (std::size_t g : active_) {
    const Monomial& lg = polys_[g].mons[0];
    c.push_back({g, Monomial::lcm(lh, lg), lh.coprime(lg)});
  }
  // Chain criterion among the new pairs: drop (h,g1) when another new pair's
  // lcm divides its lcm. Equal lcms keep the first (or a coprime one).
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (c[a].coprime) continue;
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (a == b || !c[b].keep) continue;
      if (!c[b].lcm.divides(c[a].lcm)) continue;
      if (c[b].lcm == c[a].lcm) {
        if (c[b].coprime || b < a) {
          c[a].keep = false;
          break;
        }
      } else {
        c[a].keep = false;
        break;
      }
    }
  }
  // Old pairs made redundant by h.
  for (auto it = pairs_.begin(); it != pairs_.end();) {
    if (lh.divides(it->lcm)) {
      const Monomial li = Monomial::lcm(polys_[it->i].mons[0], lh);
      const Monomial lj = Monomial::lcm(polys_[it->j].mons[0], lh);
      if (!(li == it->lcm) && !(lj == it->lcm)) {
        it = pairs_.erase(it);
        continue;
      }
    }
    ++it;
  }
  for (const auto& cand : c) {
    if (cand.keep && !cand.coprime) pairs_.insert(Pair{cand.g, h, cand.lcm, next_pair_id_++});
  }
  std::vector<std::size_t> next;
  for (std::size_t g : active_) {
    if (!lh.divides(polys_[g].mons[0])) next.push_back(g);
  }
  next.push_back(h);
  active_ = std::move(next);
}

template <class R>
bool Engine<R>::out_of_time() const {
  if (limits_.timeout_secs <= 0) return false;
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
  return elapsed.count() > limits_.timeout_secs;
}

template <class R>
void Engine<R>::run(std::vector<Poly> inputs) {
  start_ = std::chrono::steady_clock::now();
  for (auto& f : inputs) normalize(f);
  inputs.erase(std::remove_if(inputs.begin(), inputs.end(), [](const Poly& f) { return f.zero(); }), inputs.end());
  std::stable_sort(inputs.begin(), inputs.end(),
                   [&](const Poly& a, const Poly& b) { return order_.compare(a.mons[0], b.mons[0]) < 0; });
  auto add = [&](Poly&& r) {
    for (const auto& m : r.mons) report_.largest_degree = std::max(report_.largest_degree, static_cast<int>(m.degree()));
    masks_.push_back(divmask(r.mons[0]));
    polys_.push_back(std::move(r));
    update(polys_.size() - 1);
  };
  for (auto& f : inputs) {
    Poly r = reduce(std::move(f), active_);
    if (!r.zero()) add(std::move(r));
  }
  while (!pairs_.empty()) {
    if (report_.pairs_processed >= limits_.max_pairs) {
      report_.hit = true;
      report_.reason = "max_pairs";
      break;
    }
    if (out_of_time()) {
      report_.hit = true;
      report_.reason = "timeout";
      break;
    }
    const Pair pair = *pairs_.begin();
    if (static_cast<int>(pair.lcm.degree()) > limits_.max_degree) {
      // Pairs come in increasing lcm degree, so every remaining one is too big.
      report_.hit = true;
      report_.reason = "max_degree";
      report_.pairs_skipped = pairs_.size();
      pairs_.clear();
      break;
    }
    pairs_.erase(pairs_.begin());
    Poly r = reduce(spoly(pair.i, pair.j), active_);
    ++report_.pairs_processed;
    if (r.zero()) {
      ++report_.zero_reductions;
    } else {
      add(std::move(r));
    }
  }
  report_.pairs_remaining = pairs_.size();

  std::vector<std::size_t> order = active_;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return order_.compare(polys_[a].mons[0], polys_[b].mons[0]) < 0; });
  result_.clear();
  for (std::size_t k : order) {
    if (report_.hit) {
      result_.push_back(polys_[k]);
      continue;
    }
    std::vector<std::size_t> others;
    for (std::size_t o : order) {
      if (o != k) others.push_back(o);
    }
    result_.push_back(reduce(polys_[k], others));
  }
}

template class Engine<FpRing>;
template class Engine<ZRing>;

}  // namespace detail

namespace {

using detail::EngineOrder;
using detail::EPoly;
using detail::FpRing;
using detail::ZRing;

EPoly<ZRing> to_engine(const poly::QPoly& f, const detail::Engine<ZRing>& engine) {
  poly::Integer den = 1;
  for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  std::vector<poly::Monomial> mons;
  std::vector<poly::Integer> coeffs;
  for (const auto& t : f.terms()) {
    mons.push_back(engine.order().permute_in(t.monomial));
    poly::Rational scaled = t.coeff * den;
    coeffs.push_back(scaled.get_num());
  }
  return engine.canonical(std::move(mons), std::move(coeffs));
}

EPoly<FpRing> to_engine(const poly::FpPoly& f, const detail::Engine<FpRing>& engine) {
  std::vector<poly::Monomial> mons;
  std::vector<std::uint32_t> coeffs;
  for (const auto& t : f.terms()) {
    mons.push_back(engine.order().permute_in(t.monomial));
    coeffs.push_back(t.coeff);
  }
  return engine.canonical(std::move(mons), std::move(coeffs));
}

poly::QPoly from_engine(const EPoly<ZRing>& p, const EngineOrder& order, const poly::TablePtr& table) {
  std::vector<poly::QPoly::Term> terms;
  const poly::Rational lead(p.coeffs[0]);
  for (std::size_t k = 0; k < p.size(); ++k) {
    terms.push_back({order.permute_out(p.mons[k]), poly::Rational(p.coeffs[k]) / lead});
  }
  return poly::QPoly::from_terms(table, std::move(terms));
}

poly::FpPoly from_engine(const EPoly<FpRing>& p, const EngineOrder& order, const poly::TablePtr& table,
                         const poly::PrimeField& field) {
  std::vector<poly::FpPoly::Term> terms;
  for (std::size_t k = 0; k < p.size(); ++k) terms.push_back({order.permute_out(p.mons[k]), p.coeffs[k]});
  return poly::FpPoly::from_terms(table, std::move(terms), field);
}

}  // namespace

template <class F>
Basis<F> buchberger(const std::vector<Polynomial<F>>& generators, const MonomialOrder& order, const Limits& limits) {
  if (generators.empty()) throw DomainError("buchberger needs at least one generator");
  const auto& table = generators[0].table();
  const F field = generators[0].field();
  for (const auto& g : generators) {
    if (!poly::same_table(g.table(), table) || !(g.field() == field)) {
      throw DomainError("generators live in different rings");
    }
  }
  if (order.nvars() != table->size()) throw DomainError("order and ring have different variable counts");
  Basis<F> out{{}, order, BasisStatus::reduced_groebner, {}};
  if constexpr (std::is_same_v<F, poly::RationalField>) {
    detail::Engine<ZRing> engine(ZRing{}, EngineOrder(order), limits);
    std::vector<EPoly<ZRing>> inputs;
    for (const auto& g : generators) inputs.push_back(to_engine(g, engine));
    engine.run(std::move(inputs));
    for (const auto& p : engine.basis()) out.generators.push_back(from_engine(p, engine.order(), table));
    out.report = engine.report();
  } else {
    detail::Engine<FpRing> engine(FpRing{field}, EngineOrder(order), limits);
    std::vector<EPoly<FpRing>> inputs;
    for (const auto& g : generators) inputs.push_back(to_engine(g, engine));
    engine.run(std::move(inputs));
    for (const auto& p : engine.basis()) out.generators.push_back(from_engine(p, engine.order(), table, field));
    out.report = engine.report();
  }
  if (out.report.hit) out.status = BasisStatus::raw;
  return out;
}

template <class F>
Elimination<F> eliminate(const std::vector<Polynomial<F>>& generators, const std::vector<std::size_t>& first_block,
                         const Limits& limits) {
  if (generators.empty()) throw DomainError("eliminate needs at least one generator");
  const auto& table = generators[0].table();
  std::vector<bool> in_block(table->size(), false);
  for (std::size_t v : first_block) {
    if (v >= table->size()) throw DomainError("elimination variable outside the ring");
    in_block[v] = true;
  }
  std::vector<std::size_t> ranking;
  for (std::size_t v = 0; v < table->size(); ++v) {
    if (in_block[v]) ranking.push_back(v);
  }
  for (std::size_t v = 0; v < table->size(); ++v) {
    if (!in_block[v]) ranking.push_back(v);
  }
  const auto order = MonomialOrder::elimination(table->size(), first_block, ranking);
  Elimination<F> out{{}, buchberger(generators, order, limits)};
  for (const auto& g : out.basis.generators) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (const auto& [v, e] : t.monomial.support()) free = free && !in_block[v];
    }
    if (free) out.generators.push_back(g);
  }
  return out;
}

template Basis<poly::RationalField> buchberger(const std::vector<poly::QPoly>&, const MonomialOrder&, const Limits&);
template Basis<poly::PrimeField> buchberger(const std::vector<poly::FpPoly>&, const MonomialOrder&, const Limits&);
template Elimination<poly::RationalField> eliminate(const std::vector<poly::QPoly>&, const std::vector<std::size_t>&,
                                                    const Limits&);
template Elimination<poly::PrimeField> eliminate(const std::vector<poly::FpPoly>&, const std::vector<std::size_t>&,
                                                 const Limits&);

}  // namespace fanalg::groebner
