#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "fanalg/error.hpp"
#include "fanalg/groebner/basis_io.hpp"
#include "fanalg/groebner/groebner.hpp"
#include "fanalg/groebner/slicing.hpp"
#include "fanalg/invariants/generators.hpp"
#include "fixtures.hpp"

using namespace fanalg;
using namespace fanalg::groebner;
using fanalg::poly::QPoly;
using fanalg::poly::Rational;
using fanalg::poly::RationalField;
using fanalg::poly::VariableTable;

namespace {

std::vector<QPoly> polys_of(const std::vector<inv::InvariantRecord>& records) {
  std::vector<QPoly> out;
  for (const auto& r : records) out.push_back(*r.poly);
  return out;
}

// All k x k minors of the symmetric p x p matrix, one per unordered
// {rows, cols} pair.
std::vector<QPoly> symmetric_minors(int p, int k) {
  const auto table = inv::psi_table(p);
  std::vector<std::vector<int>> sets;
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < p; ++i) {
      if (mask & (1u << i)) s.push_back(i + 1);
    }
    sets.push_back(s);
  }
  std::vector<QPoly> out;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a; b < sets.size(); ++b) out.push_back(inv::psi_determinant(table, sets[a], sets[b]));
  }
  return out;
}

std::vector<std::size_t> diagonal_block(const VariableTable& table) {
  std::vector<std::size_t> out;
  for (int i = 1; i <= table.p(); ++i) out.push_back(table.psi(i, i));
  return out;
}

bool same_up_to_scale(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.scaled(1 / a.terms().front().coeff) == b.scaled(1 / b.terms().front().coeff);
}

bool contains_up_to_sign(const std::vector<QPoly>& set, const QPoly& f) {
  return std::any_of(set.begin(), set.end(), [&](const QPoly& g) { return g == f || g == -f; });
}

QPoly random_poly(Rng& rng, const poly::TablePtr& table, int terms, int max_degree) {
  std::vector<QPoly::Term> out;
  for (int k = 0; k < terms; ++k) {
    std::vector<unsigned> e(table->size(), 0);
    const int d = static_cast<int>(rng.uniform_int(0, max_degree));
    for (int s = 0; s < d; ++s) ++e[rng.uniform_below(table->size())];
    out.push_back({poly::Monomial::from_exponents(e), fixtures::small_rational(rng, 9, 4)});
  }
  return QPoly::from_terms(table, std::move(out));
}

}  // namespace

TEST(Buchberger, LinearSystem) {
  const auto table = VariableTable::plain({"x", "a", "b"});
  const auto x = QPoly::variable(table, 0), a = QPoly::variable(table, 1), b = QPoly::variable(table, 2);
  const auto basis = buchberger<RationalField>({x - a, x - b}, MonomialOrder::lex(3));
  EXPECT_EQ(basis.status, BasisStatus::reduced_groebner);
  ASSERT_EQ(basis.generators.size(), 2u);
  EXPECT_TRUE(contains_up_to_sign(basis.generators, x - b));
  EXPECT_TRUE(contains_up_to_sign(basis.generators, a - b));
}

TEST(Buchberger, TetradsAreTheReducedBasis) {
  for (int p = 4; p <= 6; ++p) {
    const auto table = inv::psi_table(p);
    const auto order = MonomialOrder::circular_lex(*table);
    const auto tp = polys_of(inv::tetrads(p));
    const auto cert = is_groebner_basis(tp, order);
    EXPECT_TRUE(cert.is_groebner) << p;
    EXPECT_TRUE(cert.failing_pairs.empty());
    const auto basis = buchberger(tp, order);
    EXPECT_EQ(basis.status, BasisStatus::reduced_groebner);
    EXPECT_EQ(basis.generators.size(), tp.size()) << p;
    for (const auto& g : basis.generators) EXPECT_TRUE(contains_up_to_sign(tp, g));
  }
}

TEST(Buchberger, SymmetricMinorsSelfConsistent) {
  const auto minors = symmetric_minors(5, 3);
  const auto order = MonomialOrder::grevlex(inv::psi_table(5)->size());
  const auto basis = buchberger(minors, order);
  ASSERT_EQ(basis.status, BasisStatus::reduced_groebner);
  EXPECT_TRUE(is_groebner_basis(basis).is_groebner);
  for (const auto& f : minors) EXPECT_TRUE(reduce(f, basis).normal_form.is_zero());
}

TEST(Buchberger, LimitHitIsLabelled) {
  const auto minors = symmetric_minors(5, 3);
  Limits limits;
  limits.max_pairs = 3;
  const auto basis = buchberger(minors, MonomialOrder::grevlex(inv::psi_table(5)->size()), limits);
  EXPECT_EQ(basis.status, BasisStatus::raw);
  EXPECT_TRUE(basis.report.hit);
  EXPECT_EQ(basis.report.reason, "max_pairs");
  EXPECT_THROW(ideal_membership(minors.front(), basis), DomainError);
}

TEST(Buchberger, OverFiniteField) {
  const poly::PrimeField field(101);
  const auto table = inv::psi_table(5);
  std::vector<poly::FpPoly> gens;
  for (const auto& f : polys_of(inv::tetrads(5))) gens.push_back(poly::reduce_mod(f, field));
  const auto order = MonomialOrder::circular_lex(*table);
  const auto basis = buchberger(gens, order);
  EXPECT_EQ(basis.generators.size(), 10u);
  EXPECT_TRUE(is_groebner_basis(basis).is_groebner);
}

TEST(Reduce, SmallCases) {
  const auto table = inv::psi_table(5);
  const auto order = MonomialOrder::circular_lex(*table);
  const auto t5 = polys_of(inv::tetrads(5));
  const QPoly combo = t5[0] - t5[3] + t5[7] * QPoly::psi(table, 1, 1);
  EXPECT_TRUE(reduce(combo, t5, order).normal_form.is_zero());
  const QPoly psi12 = QPoly::psi(table, 1, 2);
  EXPECT_EQ(reduce(psi12, t5, order).normal_form, psi12);

  const auto table4 = inv::psi_table(4);
  const auto t4 = polys_of(inv::tetrads(4));
  const auto elim = inv::linear_eliminant_poly({1, {2}, {3}, {3}, {4}}, 4, 1);
  ASSERT_FALSE(elim.is_zero());
  EXPECT_TRUE(reduce(elim, t4, MonomialOrder::circular_lex(*table4)).normal_form.is_zero());
}

TEST(Reduce, DivisionIdentityAndIdempotence) {
  Rng rng(99);
  const auto table = inv::psi_table(5);
  const auto order = MonomialOrder::circular_lex(*table);
  const auto t5 = polys_of(inv::tetrads(5));
  for (int rep = 0; rep < 30; ++rep) {
    const QPoly f = random_poly(rng, table, 6, 4);
    const auto r = reduce(f, t5, order);
    QPoly sum = r.normal_form;
    for (std::size_t k = 0; k < t5.size(); ++k) sum += r.quotients[k] * t5[k];
    EXPECT_EQ(sum, f);
    EXPECT_EQ(reduce(r.normal_form, t5, order).normal_form, r.normal_form);
    for (const auto& t : r.normal_form.terms()) {
      for (const auto& g : t5) EXPECT_FALSE(poly::leading_term(g, order).monomial.divides(t.monomial));
    }
  }
}

TEST(Certificate, FailingSubsetAndPrincipal) {
  const auto table = inv::psi_table(5);
  const auto order = MonomialOrder::circular_lex(*table);
  const auto t5 = polys_of(inv::tetrads(5));
  // Three tetrads on overlapping index quadruples do not form a basis.
  const std::vector<QPoly> subset{t5[0], t5[2], t5[4]};
  const auto cert = is_groebner_basis(subset, order);
  EXPECT_FALSE(cert.is_groebner);
  EXPECT_FALSE(cert.failing_pairs.empty());
  EXPECT_TRUE(is_groebner_basis(std::vector<QPoly>{t5[0]}, order).is_groebner);
}

TEST(Eliminate, LinearSystem) {
  const auto table = VariableTable::plain({"x", "a", "b"});
  const auto x = QPoly::variable(table, 0), a = QPoly::variable(table, 1), b = QPoly::variable(table, 2);
  const auto out = eliminate<RationalField>({x - a, x - b}, {0});
  ASSERT_EQ(out.generators.size(), 1u);
  EXPECT_TRUE(same_up_to_scale(out.generators[0], a - b));
}

TEST(Eliminate, TwoByTwoMinorsGiveTetrads) {
  const auto table = inv::psi_table(4);
  const auto out = eliminate(symmetric_minors(4, 2), diagonal_block(*table));
  ASSERT_EQ(out.basis.status, BasisStatus::reduced_groebner);
  const auto t4 = polys_of(inv::tetrads(4));
  const auto order = MonomialOrder::grevlex(table->size());
  const auto t4_basis = buchberger(t4, order);
  const auto elim_basis = buchberger(out.generators, order);
  for (const auto& g : out.generators) {
    EXPECT_TRUE(reduce(g, t4_basis).normal_form.is_zero());
    for (std::size_t v = 0; v < table->size(); ++v) {
      if (table->is_diagonal(v)) {
        EXPECT_TRUE(g.derivative(v).is_zero());
      }
    }
  }
  for (const auto& t : t4) EXPECT_TRUE(reduce(t, elim_basis).normal_form.is_zero());
}

TEST(Eliminate, ThreeByThreeMinorsGivePentad) {
  const auto table = inv::psi_table(5);
  const auto out = eliminate(symmetric_minors(5, 3), diagonal_block(*table));
  ASSERT_EQ(out.basis.status, BasisStatus::reduced_groebner);
  ASSERT_EQ(out.generators.size(), 1u);
  EXPECT_TRUE(same_up_to_scale(out.generators[0], fixtures::parse(fixtures::kPentad, table)));
  // Soundness: the output reduces to zero modulo the full basis.
  EXPECT_TRUE(reduce(out.generators[0], out.basis).normal_form.is_zero());
}

TEST(Membership, SmallCases) {
  const auto table = inv::psi_table(5);
  const auto minors_basis = buchberger(symmetric_minors(5, 3), MonomialOrder::grevlex(table->size()));
  EXPECT_TRUE(ideal_membership(fixtures::parse(fixtures::kPentad, table), minors_basis));
  const auto order = MonomialOrder::circular_lex(*table);
  const auto t5 = buchberger(polys_of(inv::tetrads(5)), order);
  const auto psi = [&](int i, int j) { return QPoly::psi(table, i, j); };
  EXPECT_TRUE(ideal_membership(psi(1, 2) * psi(3, 4) - psi(1, 3) * psi(2, 4), t5));
  EXPECT_FALSE(ideal_membership(psi(1, 2), t5));
}

TEST(Slicing, LinearForm) {
  const auto table = inv::psi_table(3);
  const QPoly f = QPoly::psi(table, 1, 2) + QPoly::psi(table, 1, 3).scaled(3) - QPoly::psi(table, 2, 3);
  const auto result = degree_by_slicing({f}, {1, 101, 5}, 3);
  ASSERT_TRUE(result.modal_degree);
  EXPECT_EQ(*result.modal_degree, 1u);
}

TEST(Slicing, TetradVarietyHasDegreeFour) {
  const auto t4 = polys_of(inv::tetrads(4));
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto result = degree_by_slicing(t4, {2, 101, seed}, 5);
    ASSERT_TRUE(result.modal_degree);
    EXPECT_EQ(*result.modal_degree, 4u) << seed;
    ASSERT_EQ(result.trials.size(), 5u);
    EXPECT_FALSE(result.trials[0].substitution.empty());
  }
}

TEST(Slicing, PentadHasDegreeFive) {
  const auto table = inv::psi_table(5);
  const auto result = degree_by_slicing({fixtures::parse(fixtures::kPentad, table)}, {1, 101, 7}, 5);
  ASSERT_TRUE(result.modal_degree);
  EXPECT_EQ(*result.modal_degree, 5u);
}

TEST(Slicing, WrongCodimIsDiscarded) {
  const auto t4 = polys_of(inv::tetrads(4));
  // Too large: the slice meets the variety in a curve.
  const auto result = degree_by_slicing(t4, {3, 101, 1}, 3);
  EXPECT_FALSE(result.modal_degree);
  EXPECT_EQ(result.discarded, 3u);
  // Too small: a generic line misses it.
  const auto empty = degree_by_slicing(t4, {1, 101, 1}, 3);
  ASSERT_TRUE(empty.modal_degree);
  EXPECT_EQ(*empty.modal_degree, 0u);
}

TEST(Slicing, StandardMonomialCount) {
  using poly::Monomial;
  EXPECT_EQ(count_standard_monomials({Monomial::from_exponents({2, 0}), Monomial::from_exponents({0, 3})}, 2), 6u);
  EXPECT_FALSE(count_standard_monomials({Monomial::from_exponents({2, 0})}, 2));
  EXPECT_EQ(count_standard_monomials({Monomial::from_exponents({0, 0})}, 2), 0u);
}

TEST(BasisIo, RoundTrip) {
  const auto table = inv::psi_table(5);
  const auto basis = buchberger(polys_of(inv::tetrads(5)), MonomialOrder::circular_lex(*table));
  std::stringstream ss;
  write_basis(ss, basis);
  const auto back = read_basis(ss, table);
  EXPECT_EQ(back.generators, basis.generators);
  EXPECT_EQ(back.status, basis.status);
  EXPECT_EQ(back.order.spec(*table), basis.order.spec(*table));

  std::stringstream bad("# order: grevlex\np12*p34 +\n");
  try {
    read_basis(bad, table);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}
