#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fanalg/polyring/order.hpp"
#include "fanalg/polyring/polynomial.hpp"

namespace fanalg::groebner {

using poly::MonomialOrder;
using poly::Polynomial;

struct Limits {
  int max_degree = 12;
  std::size_t max_pairs = 2'000'000;
  double timeout_secs = 0.0;  // 0 disables the timeout
};

// Why a computation stopped early. `hit` false means it ran to completion.
struct LimitReport {
  bool hit = false;
  std::string reason;  // "max_degree", "max_pairs" or "timeout"
  std::size_t pairs_processed = 0;
  std::size_t pairs_skipped = 0;    // over the degree cap
  std::size_t pairs_remaining = 0;  // still queued when stopped
  std::size_t zero_reductions = 0;
  int largest_degree = 0;
};

enum class BasisStatus { raw, groebner, reduced_groebner };

std::string to_string(BasisStatus status);

template <class F>
struct Basis {
  std::vector<Polynomial<F>> generators;
  MonomialOrder order;
  BasisStatus status = BasisStatus::raw;
  LimitReport report;
};

template <class F>
struct Reduction {
  Polynomial<F> normal_form;
  std::vector<Polynomial<F>> quotients;  // one per basis generator
};

// Full reduction by the generators in the basis order. Exact division
// identity: f == sum quotients[i] * generators[i] + normal_form.
template <class F>
Reduction<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& generators, const MonomialOrder& order);

template <class F>
Reduction<F> reduce(const Polynomial<F>& f, const Basis<F>& basis) {
  return reduce(f, basis.generators, basis.order);
}

// S-polynomial of a pair, scaled to cancel the leading terms.
template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, const MonomialOrder& order);

// Reduced Groebner basis, or a raw partial basis with report.hit set.
template <class F>
Basis<F> buchberger(const std::vector<Polynomial<F>>& generators, const MonomialOrder& order,
                    const Limits& limits = {});

template <class F>
struct Elimination {
  std::vector<Polynomial<F>> generators;  // free of the first block
  Basis<F> basis;                         // the full basis they were taken from
};

// Generators of <gens> intersected with the ring without first_block, via a
// block elimination order whose remaining variables use graded reverse lex.
template <class F>
Elimination<F> eliminate(const std::vector<Polynomial<F>>& generators, const std::vector<std::size_t>& first_block,
                         const Limits& limits = {});

struct GbCertificate {
  bool is_groebner = false;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;
};

// Checks that every S-pair reduces to zero. Pairs with coprime leading
// terms are skipped since they always reduce to zero.
template <class F>
GbCertificate is_groebner_basis(const std::vector<Polynomial<F>>& generators, const MonomialOrder& order);

template <class F>
GbCertificate is_groebner_basis(const Basis<F>& basis) {
  return is_groebner_basis(basis.generators, basis.order);
}

// Throws DomainError for a raw basis.
template <class F>
bool ideal_membership(const Polynomial<F>& f, const Basis<F>& basis);

}  // namespace fanalg::groebner
