#include <gtest/gtest.h>

#include <set>

#include "fanalg/error.hpp"
#include "fanalg/invariants/generators.hpp"
#include "fanalg/invariants/resultant.hpp"
#include "fanalg/model/factor_model.hpp"
#include "fanalg/polyring/linalg.hpp"
#include "fixtures.hpp"

using namespace fanalg;
using namespace fanalg::inv;
using fixtures::random_symmetric;
using fixtures::small_rational;

namespace {

Rational ratio(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

QPoly psi(const TablePtr& t, int i, int j) { return QPoly::psi(t, i, j); }

Matrix<Rational> scaled(const Matrix<Rational>& m, const Rational& t) {
  return m.map<Rational>([&](const Rational& x) { return Rational(x * t); });
}

// Coefficient rows of n+1 random multilinear forms in n unknowns.
std::vector<std::vector<Rational>> random_system(Rng& rng, int n) {
  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(1u << n));
  for (auto& row : a) {
    for (auto& c : row) c = Rational(rng.uniform_int(-50, 50));
  }
  return a;
}

// Value of sum_idx a[idx] prod x_k^{i_k} with i_1 the high bit.
Rational value_at(const std::vector<Rational>& row, const std::vector<Rational>& x) {
  const int n = static_cast<int>(x.size());
  Rational total = 0;
  for (unsigned idx = 0; idx < row.size(); ++idx) {
    Rational term = row[idx];
    for (int k = 0; k < n; ++k) {
      if ((idx >> (n - 1 - k)) & 1u) term *= x[k];
    }
    total += term;
  }
  return total;
}

// Random system sharing the common root x: the constant slot is chosen so
// that every form vanishes there.
std::vector<std::vector<Rational>> system_with_root(Rng& rng, const std::vector<Rational>& x) {
  const int n = static_cast<int>(x.size());
  auto a = random_system(rng, n);
  for (auto& row : a) {
    row[0] = 0;
    row[0] = -value_at(row, x);
  }
  return a;
}

bool equal_up_to_sign(const QPoly& a, const QPoly& b) { return a == b || a == -b; }

}  // namespace

TEST(Tetrads, Counts) {
  EXPECT_TRUE(tetrads(3).empty());
  EXPECT_EQ(tetrads(4).size(), 2u);
  EXPECT_EQ(tetrads(5).size(), 10u);
  EXPECT_EQ(tetrads(6).size(), 30u);
}

TEST(Tetrads, AreTheRecordedDeterminants) {
  const auto table = psi_table(6);
  for (const auto& rec : tetrads(6)) {
    EXPECT_EQ(*rec.poly, psi_determinant(table, rec.indices.at("rows"), rec.indices.at("cols")));
    EXPECT_EQ(rec.degree, 2);
    EXPECT_TRUE(rec.poly->is_homogeneous());
    EXPECT_TRUE(rec.is_two_by_two());
  }
  const auto t4 = tetrads(4);
  const auto table4 = psi_table(4);
  EXPECT_EQ(*t4[0].poly, psi(table4, 1, 2) * psi(table4, 3, 4) - psi(table4, 1, 3) * psi(table4, 2, 4));
  EXPECT_EQ(*t4[1].poly, psi(table4, 1, 4) * psi(table4, 2, 3) - psi(table4, 1, 3) * psi(table4, 2, 4));
}

TEST(OffDiagonalMinors, Counts) {
  EXPECT_EQ(off_diagonal_minors(4, 1).size(), 3u);
  EXPECT_EQ(off_diagonal_minors(6, 1).size(), 45u);
  EXPECT_EQ(off_diagonal_minors(7, 2).size(), 70u);
  EXPECT_TRUE(off_diagonal_minors(5, 2).empty());
}

TEST(OffDiagonalMinors, NormalizedAndExact) {
  const auto table = psi_table(7);
  std::set<std::string> seen;
  for (const auto& rec : off_diagonal_minors(7, 2)) {
    const QPoly det = psi_determinant(table, rec.indices.at("rows"), rec.indices.at("cols"));
    EXPECT_EQ(*rec.poly, det);
    EXPECT_EQ(rec.poly->terms().front().coeff, 1);
    EXPECT_EQ(rec.degree, 3);
    EXPECT_TRUE(seen.insert(poly::format_polynomial(*rec.poly)).second);
  }
}

TEST(LinearEliminant, OneFactorFormula) {
  // m = 1: -psi_rc psi_{i rb} psi_{i cb} + psi_{rb cb} psi_{ir} psi_{ic}.
  const int p = 6;
  const auto table = psi_table(p);
  Rng rng(3);
  int checked = 0;
  while (checked < 40) {
    std::vector<int> idx;
    for (int k = 0; k < 5; ++k) idx.push_back(static_cast<int>(rng.uniform_int(1, p)));
    const int i = idx[0], r = idx[1], c = idx[2], rb = idx[3], cb = idx[4];
    if (r == c || rb == cb || r == i || c == i || rb == i || cb == i) continue;
    EliminantChoice ch{i, {r}, {c}, {rb}, {cb}};
    const QPoly expected = -psi(table, r, c) * psi(table, i, rb) * psi(table, i, cb) +
                           psi(table, rb, cb) * psi(table, i, r) * psi(table, i, c);
    EXPECT_EQ(linear_eliminant_poly(ch, p, 1), expected);
    ++checked;
  }
}

TEST(LinearEliminant, PentadForEveryChoice) {
  const auto table = psi_table(5);
  const QPoly pentad = fixtures::parse(fixtures::kPentad, table);
  int nonzero = 0, zero = 0;
  for (int i = 1; i <= 5; ++i) {
    std::vector<int> rest;
    for (int k = 1; k <= 5; ++k) {
      if (k != i) rest.push_back(k);
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        std::vector<int> r{rest[a], rest[b]}, c;
        for (int k : rest) {
          if (k != rest[a] && k != rest[b]) c.push_back(k);
        }
        splits.emplace_back(r, c);
      }
    }
    for (const auto& [r, c] : splits) {
      for (const auto& [rb, cb] : splits) {
        const QPoly f = linear_eliminant_poly({i, r, c, rb, cb}, 5, 2);
        if (f.is_zero()) {
          // Only the degenerate choices {Rb, Cb} = {R, C} cancel.
          EXPECT_TRUE((rb == r && cb == c) || (rb == c && cb == r));
          ++zero;
          continue;
        }
        ++nonzero;
        EXPECT_TRUE(equal_up_to_sign(f, pentad)) << f;
        EXPECT_EQ(f.size(), 12u);
        for (const auto& t : f.terms()) EXPECT_TRUE(t.coeff == 1 || t.coeff == -1);
      }
    }
  }
  EXPECT_GT(nonzero, 0);
  EXPECT_EQ(zero, 5 * 12);
}

TEST(LinearEliminant, MinorCombinationIdentity) {
  Rng rng(11);
  for (int m = 1; m <= 3; ++m) {
    for (int p = 2 * m + 1; p <= 7; ++p) {
      for (int rep = 0; rep < 3; ++rep) {
        // Random admissible choice.
        std::vector<int> pool;
        for (int k = 1; k <= p; ++k) pool.push_back(k);
        for (std::size_t k = pool.size(); k > 1; --k) std::swap(pool[k - 1], pool[rng.uniform_below(k)]);
        const int i = pool[0];
        std::vector<int> others(pool.begin() + 1, pool.end());
        auto pick = [&](std::vector<int>& r, std::vector<int>& c) {
          std::vector<int> o = others;
          for (std::size_t k = o.size(); k > 1; --k) std::swap(o[k - 1], o[rng.uniform_below(k)]);
          r.assign(o.begin(), o.begin() + m);
          c.assign(o.begin() + m, o.begin() + 2 * m);
        };
        EliminantChoice ch;
        ch.i = i;
        pick(ch.r, ch.c);
        pick(ch.r_bar, ch.c_bar);
        EXPECT_EQ(eliminant_minor_combination(ch, p, m), linear_eliminant_poly(ch, p, m)) << "p=" << p << " m=" << m;
      }
    }
  }
}

TEST(LinearEliminant, RejectsBadIndexSets) {
  EXPECT_THROW(linear_eliminant_poly({1, {1, 2}, {3, 4}, {2, 3}, {4, 5}}, 5, 2), DomainError);
  EXPECT_THROW(linear_eliminant_poly({1, {2, 3}, {3, 4}, {2, 3}, {4, 5}}, 5, 2), DomainError);
  EXPECT_THROW(linear_eliminant_poly({1, {2}, {3, 4}, {2, 3}, {4, 5}}, 5, 2), DomainError);
  EXPECT_THROW(linear_eliminant_poly({1, {2, 3}, {4, 6}, {2, 4}, {3, 5}}, 5, 2), DomainError);
}

TEST(KAds, Counts) {
  EXPECT_EQ(k_ads(5, 2).size(), 1u);
  EXPECT_EQ(k_ads(6, 2).size(), 6u);
  EXPECT_EQ(k_ads(7, 2).size(), 21u);
  EXPECT_TRUE(k_ads(6, 3).empty());
}

TEST(KAds, SeptadsHave168Terms) {
  const auto septads = k_ads(7, 3);
  ASSERT_FALSE(septads.empty());
  for (const auto& rec : septads) {
    EXPECT_EQ(rec.kind, InvariantKind::k_ad);
    EXPECT_EQ(rec.degree, 7);
    EXPECT_EQ(rec.poly->size(), 168u);
    EXPECT_TRUE(rec.poly->is_homogeneous());
  }
}

TEST(KAds, SeptadSpan) {
  std::vector<QPoly> polys;
  for (const auto& ch : all_k_ad_choices(7, 3)) {
    QPoly f = linear_eliminant_poly(ch, 7, 3);
    if (!f.is_zero()) polys.push_back(std::move(f));
  }
  EXPECT_EQ(span_rank(polys), 15u);
}

TEST(KAds, PentadSpanMatchesCount) {
  for (int p : {5, 6, 7}) {
    std::vector<QPoly> polys;
    for (const auto& ch : all_k_ad_choices(p, 2)) polys.push_back(linear_eliminant_poly(ch, p, 2));
    EXPECT_EQ(span_rank(polys), k_ads(p, 2).size()) << p;
  }
}

TEST(Resultant, OneVariable) {
  // f0 = 2 + 3x, f1 = 1 + 4x.
  EXPECT_EQ(multilinear_resultant<Rational>(1, {{2, 3}, {1, 4}}), 5);
}

TEST(Resultant, BilinearCommonRootAtOnes) {
  Rng rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    auto a = random_system(rng, 2);
    for (auto& row : a) row[3] = -(row[0] + row[1] + row[2]);
    EXPECT_EQ(multilinear_resultant<Rational>(2, a), 0);
  }
}

TEST(Resultant, CommonRootForcesZero) {
  Rng rng(7);
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<Rational> x;
      for (int k = 0; k < n; ++k) x.push_back(small_rational(rng, 5, 3));
      EXPECT_EQ(multilinear_resultant<Rational>(n, system_with_root(rng, x)), 0) << "n=" << n;
      EXPECT_NE(multilinear_resultant<Rational>(n, random_system(rng, n)), 0) << "n=" << n;
    }
  }
}

TEST(Resultant, RootAtInfinityForcesZero) {
  // x_1 at infinity: the forms' x_1-parts share a root in the other unknowns.
  Rng rng(8);
  for (int n = 2; n <= 3; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<Rational> rest;
      for (int k = 1; k < n; ++k) rest.push_back(small_rational(rng, 5, 3));
      auto a = random_system(rng, n);
      const unsigned high = 1u << (n - 1);
      for (auto& row : a) {
        std::vector<Rational> part(row.begin() + high, row.end());
        part[0] = 0;
        row[high] = -value_at(part, rest);
      }
      EXPECT_EQ(multilinear_resultant<Rational>(n, a), 0) << "n=" << n;
    }
  }
}

TEST(Resultant, SymmetricUnderRelabeling) {
  Rng rng(9);
  for (int n = 2; n <= 3; ++n) {
    const auto a = random_system(rng, n);
    const Rational r = multilinear_resultant<Rational>(n, a);
    ASSERT_NE(r, 0);
    auto swapped_forms = a;
    std::swap(swapped_forms[0], swapped_forms[n]);
    const Rational r1 = multilinear_resultant<Rational>(n, swapped_forms);
    EXPECT_TRUE(r1 == r || r1 == -r);
    // Exchange the unknowns x_1 and x_n.
    auto swapped_vars = a;
    for (int j = 0; j <= n; ++j) {
      for (unsigned idx = 0; idx < (1u << n); ++idx) {
        const unsigned hi = (idx >> (n - 1)) & 1u, lo = idx & 1u;
        unsigned moved = idx & ~((1u << (n - 1)) | 1u);
        moved |= (lo << (n - 1)) | hi;
        swapped_vars[j][moved] = a[j][idx];
      }
    }
    const Rational r2 = multilinear_resultant<Rational>(n, swapped_vars);
    EXPECT_TRUE(r2 == r || r2 == -r) << "n=" << n;
    // Substituting x_1 -> x_1 + 1 keeps common roots and the resultant.
    auto shifted = a;
    const unsigned high = 1u << (n - 1);
    for (int j = 0; j <= n; ++j) {
      for (unsigned idx = 0; idx < high; ++idx) shifted[j][idx] += a[j][idx | high];
    }
    EXPECT_EQ(multilinear_resultant<Rational>(n, shifted), r) << "n=" << n;
  }
}

TEST(Resultant, MultiHomogeneity) {
  Rng rng(13);
  const int fact[] = {1, 1, 2, 6};
  for (int n = 1; n <= 3; ++n) {
    const auto a = random_system(rng, n);
    const Rational r = multilinear_resultant<Rational>(n, a);
    for (int j = 0; j <= n; ++j) {
      const Rational t = ratio(rng.uniform_int(2, 9), rng.uniform_int(1, 5));
      auto b = a;
      for (auto& c : b[j]) c *= t;
      Rational expected = r;
      for (int k = 0; k < fact[n]; ++k) expected *= t;
      EXPECT_EQ(multilinear_resultant<Rational>(n, b), expected) << "n=" << n << " j=" << j;
    }
  }
}

TEST(Resultant, FloatMatchesExact) {
  Rng rng(21);
  for (int n = 1; n <= 3; ++n) {
    const auto a = random_system(rng, n);
    std::vector<std::vector<double>> d;
    for (const auto& row : a) {
      d.emplace_back();
      for (const auto& c : row) d.back().push_back(c.get_d());
    }
    const double exact = multilinear_resultant<Rational>(n, a).get_d();
    EXPECT_NEAR(multilinear_resultant<double>(n, d), exact, 1e-9 * std::max(1.0, std::abs(exact)));
  }
}

TEST(Resultant, RejectsUnsupportedSizes) {
  EXPECT_THROW(multilinear_resultant<Rational>(4, std::vector<std::vector<Rational>>(5, std::vector<Rational>(16))),
               DomainError);
  EXPECT_THROW(multilinear_resultant<Rational>(2, {{1, 2, 3, 4}, {1, 2, 3, 4}}), DomainError);
}

TEST(Resultant, ExpectedDegree) {
  for (int m = 1; m <= 6; ++m) {
    EXPECT_EQ(expected_degree(1, m), 2 * m + 1);
    EXPECT_EQ(expected_degree(2, m), 6 * m);
  }
  EXPECT_EQ(expected_degree(3, 5), 108);
  EXPECT_THROW(expected_degree(0, 2), DomainError);
}

TEST(ResultantInvariant, RecoversPentad) {
  const ResultantSelection sel{{1}, {{2, 3}, {2, 4}}, {{4, 5}, {3, 5}}};
  const auto rec = resultant_invariant(sel, 5, 2);
  const QPoly pentad = fixtures::parse(fixtures::kPentad, psi_table(5));
  ASSERT_TRUE(rec.poly);
  EXPECT_TRUE(equal_up_to_sign(*rec.poly, pentad));
  EXPECT_EQ(rec.degree, 5);
}

TEST(ResultantInvariant, OneUnknownMatchesEliminant) {
  Rng rng(17);
  for (int m = 1; m <= 3; ++m) {
    for (int p = 2 * m + 1; p <= std::min(7, 2 * m + 3); ++p) {
      for (int rep = 0; rep < 4; ++rep) {
        std::vector<int> pool;
        for (int k = 1; k <= p; ++k) pool.push_back(k);
        for (std::size_t k = pool.size(); k > 1; --k) std::swap(pool[k - 1], pool[rng.uniform_below(k)]);
        const int d = pool[0];
        std::vector<int> others(pool.begin() + 1, pool.end());
        ResultantSelection sel{{d}, {}, {}};
        for (int k = 0; k < 2; ++k) {
          auto o = others;
          for (std::size_t s = o.size(); s > 1; --s) std::swap(o[s - 1], o[rng.uniform_below(s)]);
          std::vector<int> r(o.begin(), o.begin() + m), c(o.begin() + m, o.begin() + 2 * m);
          std::sort(r.begin(), r.end());
          std::sort(c.begin(), c.end());
          sel.rows.push_back(r);
          sel.cols.push_back(c);
        }
        const auto res = resultant_invariant(sel, p, m);
        QPoly elim = linear_eliminant_poly({d, sel.rows[0], sel.cols[0], sel.rows[1], sel.cols[1]}, p, m);
        normalize_grevlex(elim);
        EXPECT_EQ(*res.poly, elim) << "p=" << p << " m=" << m;
        if (!elim.is_zero()) {
          EXPECT_EQ(res.poly->degree(), 2 * m + 1);
        }
      }
    }
  }
}

TEST(ResultantInvariant, SymbolicAndEvaluableAgree) {
  const ResultantSelection sel{{1}, {{2, 3}, {2, 4}}, {{4, 5}, {3, 5}}};
  const auto symbolic = resultant_invariant(sel, 5, 2);
  const auto evaluable = resultant_invariant(sel, 5, 2, {ResultantMode::evaluable});
  EXPECT_TRUE(evaluable.evaluable_only());
  Rng rng(4);
  for (int rep = 0; rep < 5; ++rep) {
    const auto m = random_symmetric(rng, 5);
    EXPECT_EQ(evaluate(symbolic, m), symbolic.scale * evaluate(evaluable, m));
    EXPECT_NEAR(evaluate(evaluable, m.map<double>([](const Rational& q) { return q.get_d(); })),
                evaluate(evaluable, m).get_d(), 1e-9 * std::max(1.0, std::abs(evaluate(evaluable, m).get_d())));
  }
}

TEST(ResultantInvariant, RefusesHugeExpansion) {
  const ResultantSelection sel{{1, 2}, {{3, 4, 5}, {3, 4, 6}, {3, 5, 7}}, {{6, 7, 8}, {5, 7, 8}, {4, 6, 8}}};
  try {
    resultant_invariant(sel, 8, 4);
    FAIL() << "expected refusal";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("terms predicted"), std::string::npos);
  }
  EXPECT_GT(estimated_terms(8, 24), 1e6);
}

TEST(ResultantInvariant, ValidatesSelection) {
  EXPECT_THROW(validate({{1}, {{1, 3}, {2, 4}}, {{4, 5}, {3, 5}}}, 5, 2), DomainError);
  EXPECT_THROW(validate({{1}, {{2, 3}, {2, 4}}, {{3, 5}, {3, 5}}}, 5, 2), DomainError);
  EXPECT_THROW(validate({{1}, {{2, 3}}, {{4, 5}}}, 5, 2), DomainError);
  EXPECT_THROW(validate({{1, 2, 3, 4}, {}, {}}, 9, 5), DomainError);
  EXPECT_NO_THROW(validate({{1}, {{2, 3}, {2, 4}}, {{4, 5}, {3, 5}}}, 5, 2));
}

TEST(ResultantInvariant, DegreeTwentyFourVanishesOnModel) {
  const ResultantSelection sel{{1, 2}, {{3, 4, 5}, {3, 4, 6}, {3, 5, 7}}, {{6, 7, 8}, {5, 7, 8}, {4, 6, 8}}};
  const auto rec = resultant_invariant(sel, 8, 4, {ResultantMode::evaluable});
  EXPECT_EQ(rec.degree, 24);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    EXPECT_EQ(evaluate(rec, model::sample_model_point({8, 4}, seed).psi), 0);
  }
  Rng rng(2);
  EXPECT_NE(evaluate(rec, random_symmetric(rng, 8)), 0);
}

TEST(Invariants, VanishOnModelPoints) {
  const std::pair<int, int> grid[] = {{4, 1}, {5, 1}, {6, 2}, {7, 2}, {7, 3}};
  for (const auto& [p, m] : grid) {
    std::vector<InvariantRecord> all;
    if (m == 1) all = tetrads(p);
    for (auto& r : off_diagonal_minors(p, m)) all.push_back(std::move(r));
    for (auto& r : k_ads(p, m)) all.push_back(std::move(r));
    ASSERT_FALSE(all.empty());
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto point = model::sample_model_point({p, m}, seed);
      for (const auto& rec : all) EXPECT_EQ(evaluate(rec, point.psi), 0) << poly::format_polynomial(*rec.poly);
    }
  }
}

TEST(Invariants, Homogeneity) {
  Rng rng(31);
  std::vector<InvariantRecord> all = tetrads(5);
  for (auto& r : k_ads(6, 2)) all.push_back(std::move(r));
  for (auto& r : off_diagonal_minors(6, 2)) all.push_back(std::move(r));
  for (const auto& rec : all) {
    const auto m = random_symmetric(rng, rec.p);
    const Rational t = ratio(rng.uniform_int(2, 7), rng.uniform_int(1, 5));
    Rational power = 1;
    for (int k = 0; k < rec.degree; ++k) power *= t;
    EXPECT_EQ(evaluate(rec, scaled(m, t)), power * evaluate(rec, m));
  }
}

TEST(Restriction, GcdWithItselfAndCoprime) {
  const auto pentad_rec = k_ads(5, 2).front();
  Rng rng(41);
  const auto base = random_symmetric(rng, 5), dir = random_symmetric(rng, 5);
  const auto r = restriction(pentad_rec, base, dir);
  EXPECT_EQ(r.degree(), 5);
  EXPECT_EQ(gcd_of_restrictions(pentad_rec, pentad_rec, base, dir), r.monic());

  // Powers of two distinct linear forms.
  const auto table = psi_table(4);
  InvariantRecord a, b;
  a.p = b.p = 4;
  a.poly = psi(table, 1, 2) * psi(table, 1, 2) * psi(table, 1, 2);
  a.degree = 3;
  b.poly = (psi(table, 1, 3) + psi(table, 2, 4)) * (psi(table, 1, 3) + psi(table, 2, 4));
  b.degree = 2;
  const auto base4 = random_symmetric(rng, 4), dir4 = random_symmetric(rng, 4);
  EXPECT_EQ(gcd_of_restrictions(a, b, base4, dir4).degree(), 0);
  EXPECT_EQ(gcd_of_restrictions(a, a, base4, dir4).degree(), 3);
}

TEST(Restriction, DegenerateLineIsAnError) {
  const auto pentad_rec = k_ads(5, 2).front();
  const auto point = model::sample_model_point({5, 2}, 1).psi;
  EXPECT_THROW(restriction(pentad_rec, point, Matrix<Rational>(5, 5, Rational(0))), DomainError);
}

TEST(Records, Json) {
  const auto rec = k_ads(5, 2).front();
  const auto j = to_json(rec);
  EXPECT_EQ(j["kind"], "k-ad");
  EXPECT_EQ(j["degree"], 5);
  EXPECT_EQ(j["normalization"], "grevlex-monic");
  EXPECT_TRUE(j["poly"].is_string());
  const ResultantSelection sel{{1}, {{2, 3}, {2, 4}}, {{4, 5}, {3, 5}}};
  EXPECT_TRUE(to_json(resultant_invariant(sel, 5, 2, {ResultantMode::evaluable}))["poly"].is_null());
}
