#pragma once

// Buchberger engine shared by buchberger() and the slicing code. Works on
// monomials whose variables are renumbered so the order's ranking is the
// identity; comparisons are then plain byte scans.

#include <chrono>
#include <cstdint>
#include <set>
#include <vector>

#include "fanalg/groebner/groebner.hpp"
#include "fanalg/polyring/field.hpp"
#include "fanalg/polyring/monomial.hpp"

namespace fanalg::groebner::detail {

using poly::Monomial;

class EngineOrder {
 public:
  explicit EngineOrder(const MonomialOrder& order);

  int compare(const Monomial& a, const Monomial& b) const {
    const std::uint8_t* x = a.data();
    const std::uint8_t* y = b.data();
    if (lex_) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (x[k] != y[k]) return x[k] > y[k] ? 1 : -1;
      }
      return 0;
    }
    if (!block_.empty()) {
      unsigned bx = 0, by = 0;
      for (std::size_t k : block_) {
        bx += x[k];
        by += y[k];
      }
      if (bx != by) return bx > by ? 1 : -1;
    }
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t k = n_; k > 0; --k) {
      if (x[k - 1] != y[k - 1]) return x[k - 1] < y[k - 1] ? 1 : -1;
    }
    return 0;
  }

  // Original variable index -> engine position and back.
  const std::vector<std::size_t>& to_engine() const { return to_engine_; }
  const std::vector<std::size_t>& to_original() const { return to_original_; }

  Monomial permute_in(const Monomial& m) const;
  Monomial permute_out(const Monomial& m) const;

 private:
  bool lex_ = false;
  std::size_t n_ = 0;
  std::vector<std::size_t> block_;  // engine positions of the first block
  std::vector<std::size_t> to_engine_;
  std::vector<std::size_t> to_original_;
};

inline std::uint64_t divmask(const Monomial& m) {
  std::uint64_t mask = 0;
  const std::uint8_t* e = m.data();
  for (std::size_t k = 0; k < poly::kMaxVars; ++k) {
    if (e[k]) mask |= 1ULL << k;
  }
  return mask;
}

// Monic arithmetic over GF(q).
struct FpRing {
  using C = std::uint32_t;
  poly::PrimeField field;
};

// Fraction-free arithmetic over Z; polynomials are kept primitive.
struct ZRing {
  using C = poly::Integer;
};

template <class R>
struct EPoly {
  std::vector<Monomial> mons;
  std::vector<typename R::C> coeffs;

  bool zero() const { return mons.empty(); }
  std::size_t size() const { return mons.size(); }
};

template <class R>
class Engine {
 public:
  using C = typename R::C;
  using Poly = EPoly<R>;

  Engine(R ring, EngineOrder order, Limits limits) : ring_(std::move(ring)), order_(std::move(order)), limits_(limits) {}

  // Runs Buchberger; afterwards basis() holds a reduced basis, or a raw one
  // when report().hit.
  void run(std::vector<Poly> inputs);

  const std::vector<Poly>& basis() const { return result_; }
  const LimitReport& report() const { return report_; }
  const EngineOrder& order() const { return order_; }

  // Sorts terms decreasingly, merges duplicates, normalizes.
  Poly canonical(std::vector<Monomial> mons, std::vector<C> coeffs) const;
  // Full reduction by `by` (indices into polys_), normalized.
  Poly reduce(Poly p, const std::vector<std::size_t>& by) const;

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::size_t id;
  };
  struct PairLess {
    const EngineOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      const int c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return a.id < b.id;
    }
  };

  void normalize(Poly& p) const;
  Poly spoly(std::size_t i, std::size_t j) const;
  // p - c * m * g, starting from term `from` of p; the result drops p's
  // first `from` terms.
  Poly axpy(const Poly& p, std::size_t from, const C& a, const C& c, const Monomial& m, const Poly& g) const;
  void update(std::size_t h);
  bool out_of_time() const;

  R ring_;
  EngineOrder order_;
  Limits limits_;
  std::vector<Poly> polys_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::size_t> active_;
  std::set<Pair, PairLess> pairs_{PairLess{&order_}};
  std::size_t next_pair_id_ = 0;
  std::vector<Poly> result_;
  LimitReport report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace fanalg::groebner::detail
