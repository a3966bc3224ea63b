// Acceptance run: one line per criterion, exit status 0 only if all pass.
// `acceptance N` runs criterion N alone.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../fixtures.hpp"
#include "fanalg/error.hpp"
#include "fanalg/groebner/groebner.hpp"
#include "fanalg/groebner/slicing.hpp"
#include "fanalg/invariants/generators.hpp"
#include "fanalg/invariants/resultant.hpp"
#include "fanalg/model/factor_model.hpp"
#include "fanalg/random.hpp"
#include "fanalg/stats/calibration.hpp"
#include "fanalg/stats/normal.hpp"
#include "fanalg/stats/statistics.hpp"

using namespace fanalg;
using groebner::MonomialOrder;
using inv::InvariantRecord;
using inv::ResultantSelection;
using poly::Matrix;
using poly::QPoly;
using poly::Rational;

namespace {

struct Outcome {
  bool pass = true;
  bool stretch_flag = false;  // a stretch target missed; reported, not failing
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

struct Criterion {
  int number;
  std::string name;
  double budget_secs;
  std::function<void(Outcome&)> body;
};

Rational rational(Rng& rng, long span, long den) {
  Rational q(rng.uniform_int(-span, span), rng.uniform_int(1, den));
  q.canonicalize();
  return q;
}

Matrix<Rational> symmetric(Rng& rng, int p, long span = 20, long den = 7) {
  Matrix<Rational> m(p, p, Rational(0));
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j) {
      m(i, j) = rational(rng, span, den);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

std::vector<QPoly> polys_of(const std::vector<InvariantRecord>& records) {
  std::vector<QPoly> out;
  for (const auto& r : records) out.push_back(*r.poly);
  return out;
}

bool equal_up_to_sign(const QPoly& a, const QPoly& b) { return a == b || a == -b; }

std::vector<std::pair<std::vector<int>, std::vector<int>>> splits(const std::vector<int>& items, std::size_t k) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  const std::size_t n = items.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<int> a, b;
    for (std::size_t t = 0; t < n; ++t) ((mask >> t) & 1u ? a : b).push_back(items[t]);
    out.emplace_back(a, b);
  }
  return out;
}

// ---- 1 ----
void tetrad_basis(Outcome& o) {
  for (int p = 4; p <= 6; ++p) {
    const auto table = inv::psi_table(p);
    const auto order = MonomialOrder::circular_lex(*table);
    const auto tp = polys_of(inv::tetrads(p));
    const auto cert = groebner::is_groebner_basis(tp, order);
    o.check(cert.is_groebner, "T_" + std::to_string(p) + " S-pairs");
    const auto basis = groebner::buchberger(tp, order);
    bool unchanged = !basis.report.hit && basis.generators.size() == tp.size();
    for (const auto& g : basis.generators) {
      unchanged = unchanged && std::any_of(tp.begin(), tp.end(), [&](const QPoly& t) { return equal_up_to_sign(t, g); });
    }
    o.check(unchanged, "buchberger(T_" + std::to_string(p) + ") changed the set");
    o.detail << "p=" << p << ": " << tp.size() << " tetrads, " << cert.pairs_checked << " pairs; ";
  }
}

// ---- 2 ----
void pentad_identity(Outcome& o) {
  const auto table = inv::psi_table(5);
  const QPoly pentad = fixtures::parse(fixtures::kPentad, table);
  int nonzero = 0, degenerate = 0;
  for (int i = 1; i <= 5; ++i) {
    std::vector<int> rest;
    for (int k = 1; k <= 5; ++k) {
      if (k != i) rest.push_back(k);
    }
    for (const auto& [r, c] : splits(rest, 2)) {
      for (const auto& [rb, cb] : splits(rest, 2)) {
        const inv::EliminantChoice choice{i, r, c, rb, cb};
        const bool trivial = (rb == r && cb == c) || (rb == c && cb == r);
        const QPoly f = inv::linear_eliminant_poly(choice, 5, 2);
        if (trivial) {
          o.check(f.is_zero(), "degenerate choice nonzero");
          ++degenerate;
          continue;
        }
        ++nonzero;
        bool unit = f.size() == 12;
        for (const auto& t : f.terms()) unit = unit && (t.coeff == 1 || t.coeff == -1);
        o.check(unit && equal_up_to_sign(f, pentad), "eliminant differs from the 12-term pentad");
        o.check(inv::eliminant_minor_combination(choice, 5, 2) == f, "minor-combination identity");
      }
    }
  }
  o.detail << nonzero << " admissible choices give +-pentad with the minor identity; " << degenerate
           << " degenerate choices vanish";
}

// ---- 3 ----
void elimination(Outcome& o) {
  const auto table = inv::psi_table(5);
  groebner::Limits limits;
  limits.timeout_secs = 1800;
  const auto out = groebner::eliminate(inv::all_minors(5, 3), inv::diagonal_symbols(*table), limits);
  if (out.basis.report.hit) {
    o.stretch_flag = true;
    o.detail << "limits hit (" << out.basis.report.reason << "); criterion 2 stands in";
    return;
  }
  const QPoly pentad = fixtures::parse(fixtures::kPentad, table);
  const auto order = MonomialOrder::grevlex(table->size());
  const std::vector<QPoly> principal = {pentad};
  for (const auto& g : out.generators) {
    o.check(groebner::reduce(g, principal, order).normal_form.is_zero(), "generator outside <pentad>");
  }
  const auto elim_basis = groebner::buchberger(out.generators, order);
  o.check(groebner::reduce(pentad, elim_basis).normal_form.is_zero(), "pentad outside the elimination ideal");
  o.detail << out.generators.size() << " generator(s) from a basis of " << out.basis.generators.size()
           << "; ideals equal";
}

// ---- 4 ----
void septad_count(Outcome& o) {
  const auto choices = inv::all_k_ad_choices(7, 3);
  std::size_t terms = 0;
  for (const auto& c : choices) {
    const QPoly f = inv::linear_eliminant_poly(c, 7, 3);
    if (f.is_zero()) continue;
    terms = f.size();
    break;
  }
  o.check(terms == 168, "septad has " + std::to_string(terms) + " terms");
  for (const auto& k : inv::k_ads(7, 3)) o.check(k.poly->size() == 168, "k_ads(7,3) term count");
  const std::size_t n52 = inv::k_ads(5, 2).size(), n62 = inv::k_ads(6, 2).size(), n72 = inv::k_ads(7, 2).size();
  o.check(n52 == 1 && n62 == 6 && n72 == 21, "k-ad counts");
  o.detail << "septad terms " << terms << "; k-ads (5,2)=" << n52 << " (6,2)=" << n62 << " (7,2)=" << n72;
}

// ---- 5 ----
void vanishing_grid(Outcome& o) {
  const std::pair<int, int> grid[] = {{4, 1}, {5, 1}, {6, 1}, {7, 1}, {5, 2}, {6, 2}, {7, 2}, {7, 3}};
  Rng rng(2024);
  for (const auto& [p, m] : grid) {
    std::vector<InvariantRecord> all;
    if (m == 1) all = inv::tetrads(p);
    for (auto& r : inv::off_diagonal_minors(p, m)) all.push_back(std::move(r));
    for (auto& r : inv::k_ads(p, m)) all.push_back(std::move(r));
    o.check(!all.empty(), "no generators");
    bool vanish = true;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto psi = model::sample_model_point({p, m}, seed).psi;
      for (const auto& rec : all) vanish = vanish && inv::evaluate(rec, psi) == 0;
    }
    std::vector<int> nonzero(all.size(), 0);
    for (int k = 0; k < 100; ++k) {
      const auto psi = symmetric(rng, p, 1000000, 1000);
      for (std::size_t r = 0; r < all.size(); ++r) nonzero[r] += inv::evaluate(all[r], psi) != 0;
    }
    const int worst = *std::min_element(nonzero.begin(), nonzero.end());
    o.check(vanish, "nonzero on a model point");
    o.check(worst >= 99, "off-model nonzero " + std::to_string(worst) + "/100");
    o.detail << "(" << p << "," << m << ") " << all.size() << " inv, off-model >= " << worst << "/100; ";
  }
}

// ---- 6 ----
void dimensions(Outcome& o) {
  const long codim[7][5] = {{0, 0, 0, 0, 0},  {2, 0, 0, 0, 0},   {5, 1, 0, 0, 0},   {9, 4, 0, 0, 0},
                            {14, 8, 3, 0, 0}, {20, 13, 7, 2, 0}, {27, 19, 12, 6, 1}};
  int cells = 0;
  for (int p = 3; p <= 9; ++p) {
    for (int m = 1; m <= 5; ++m) {
      const model::FactorSpec spec{p, m};
      o.check(model::model_dimension(spec).codim == codim[p - 3][m - 1],
              "codim (" + std::to_string(p) + "," + std::to_string(m) + ")");
      const auto point =
          model::assemble_covariance(std::vector<Rational>(p, Rational(1)), model::build_lambda0(p, m));
      o.check(model::jacobian_rank(spec, point).full_rank,
              "Jacobian rank (" + std::to_string(p) + "," + std::to_string(m) + ")");
      ++cells;
    }
  }
  const auto transposed = [](std::vector<std::vector<int>> rows) {
    Matrix<Rational> out(rows[0].size(), rows.size(), Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < rows[r].size(); ++c) out(c, r) = rows[r][c];
    }
    return out;
  };
  o.check(model::build_lambda0(7, 4) ==
              transposed({{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 0, 0, 0}}),
          "lambda0 (7,4)");
  o.check(model::build_lambda0(8, 4) == transposed({{1, 0, 0, 0, 1, 1, 0, 0},
                                                     {0, 1, 0, 0, 1, 0, 1, 0},
                                                     {0, 0, 1, 0, 1, 0, 0, 1},
                                                     {0, 0, 0, 1, 0, 1, 1, 0}}),
          "lambda0 (8,4)");
  o.detail << cells << " cells: codims match, Jacobian full rank; displayed (7,4), (8,4) certificates reproduced";
}

const ResultantSelection kSel84{{1, 2}, {{3, 4, 5}, {3, 4, 6}, {3, 5, 7}}, {{6, 7, 8}, {5, 7, 8}, {4, 6, 8}}};
const ResultantSelection kSel95a{
    {1, 2, 3}, {{4, 5, 6}, {4, 5, 7}, {4, 6, 8}, {4, 7, 9}}, {{7, 8, 9}, {6, 8, 9}, {5, 7, 9}, {5, 6, 8}}};
const ResultantSelection kSel95b{
    {1, 2, 3}, {{4, 5, 6}, {4, 5, 8}, {4, 6, 7}, {4, 8, 9}}, {{7, 8, 9}, {6, 7, 9}, {5, 8, 9}, {5, 6, 7}}};

// ---- 7 ----
void resultant_degrees(Outcome& o) {
  Rng rng(7);
  int symbolic_checked = 0;
  for (int m = 1; m <= 3; ++m) {
    const int p = m == 1 ? 4 : 2 * m + 1;
    std::vector<int> rest;
    for (int k = 2; k <= p; ++k) rest.push_back(k);
    int per_m = 0;
    for (const auto& [r0, c0] : splits(std::vector<int>(rest.begin(), rest.begin() + 2 * m), m)) {
      if (per_m >= 4) break;
      for (const auto& [r1, c1] : splits(std::vector<int>(rest.end() - 2 * m, rest.end()), m)) {
        if (per_m >= 4) break;
        ResultantSelection sel{{1}, {r0, r1}, {c0, c1}};
        try {
          inv::validate(sel, p, m);
        } catch (const DomainError&) {
          continue;
        }
        QPoly elim = inv::linear_eliminant_poly({1, r0, c0, r1, c1}, p, m);
        if (elim.is_zero()) continue;
        const auto rec = inv::resultant_invariant(sel, p, m);
        o.check(rec.poly && equal_up_to_sign(*rec.poly, elim), "n=1 resultant differs from the eliminant");
        const long deg = inv::restriction(rec, symmetric(rng, p), symmetric(rng, p)).degree();
        o.check(deg == 2 * m + 1, "n=1 restriction degree " + std::to_string(deg));
        ++symbolic_checked;
        ++per_m;
      }
    }
  }
  const auto r84 = inv::resultant_invariant(kSel84, 8, 4, {inv::ResultantMode::evaluable});
  const long d84 = inv::restriction(r84, symmetric(rng, 8), symmetric(rng, 8)).degree();
  o.check(d84 == 24, "(8,4,2) degree " + std::to_string(d84));
  const auto r95 = inv::resultant_invariant(kSel95a, 9, 5, {inv::ResultantMode::evaluable});
  const long d95 = inv::restriction(r95, symmetric(rng, 9), symmetric(rng, 9)).degree();
  o.check(d95 == 108, "(9,5,3) degree " + std::to_string(d95));
  for (int n = 1; n <= 3; ++n) {
    int factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<std::vector<Rational>> system(n + 1, std::vector<Rational>(std::size_t{1} << n));
      for (auto& f : system) {
        for (auto& a : f) a = rational(rng, 20, 7);
      }
      const Rational base = inv::multilinear_resultant(n, system);
      for (int k = 0; k <= n; ++k) {
        const Rational t = rational(rng, 9, 5);
        auto scaled = system;
        for (auto& a : scaled[k]) a *= t;
        Rational power = 1;
        for (int e = 0; e < factorial; ++e) power *= t;
        o.check(inv::multilinear_resultant(n, scaled) == power * base, "multi-homogeneity n=" + std::to_string(n));
      }
    }
  }
  o.detail << symbolic_checked << " n=1 selections match eliminants with degree 2m+1; (8,4,2) degree " << d84
           << "; (9,5,3) degree " << d95 << "; t^{n!} scaling exact for n=1,2,3";
}

// ---- 8 ----
void hypersurface_95(Outcome& o) {
  const auto a = inv::resultant_invariant(kSel95a, 9, 5, {inv::ResultantMode::evaluable});
  const auto b = inv::resultant_invariant(kSel95b, 9, 5, {inv::ResultantMode::evaluable});
  for (std::uint64_t line = 0; line < 3; ++line) {
    Rng rng(derive_seed(95, line));
    const auto base = symmetric(rng, 9), dir = symmetric(rng, 9);
    const auto g = inv::gcd_of_restrictions(a, b, base, dir);
    o.check(g.degree() == 54, "gcd degree " + std::to_string(g.degree()));
    o.detail << "line " << line << " gcd degree " << g.degree() << "; ";
  }
  // A second (8,4) invariant by relabeling the variables.
  const int perm[9] = {0, 3, 1, 8, 5, 2, 7, 4, 6};
  ResultantSelection relabeled = kSel84;
  const auto apply = [&](std::vector<int>& v) {
    for (int& x : v) x = perm[x];
    std::sort(v.begin(), v.end());
  };
  apply(relabeled.d);
  for (auto& v : relabeled.rows) apply(v);
  for (auto& v : relabeled.cols) apply(v);
  const InvariantRecord r84[2] = {inv::resultant_invariant(kSel84, 8, 4, {inv::ResultantMode::evaluable}),
                                  inv::resultant_invariant(relabeled, 8, 4, {inv::ResultantMode::evaluable})};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto psi = model::sample_model_point({8, 4}, seed).psi;
    for (const auto& r : r84) o.check(inv::evaluate(r, psi) == 0, "degree-24 invariant nonzero on F_{8,4}");
  }
  Rng rng(84);
  const auto off = symmetric(rng, 8);
  for (const auto& r : r84) o.check(inv::evaluate(r, off) != 0, "degree-24 invariant vanishes off the model");
  o.detail << "two degree-24 invariants vanish on 20 F_{8,4} points";
}

// ---- 9 ----
void slicing(Outcome& o) {
  const auto t4 = polys_of(inv::tetrads(4));
  const auto r41 = groebner::degree_by_slicing(t4, {2, 101, 1}, 5);
  o.check(r41.modal_degree && *r41.modal_degree == 4, "I_{4,1} degree");
  const auto pentad = polys_of(inv::k_ads(5, 2));
  const auto r52 = groebner::degree_by_slicing(pentad, {1, 101, 1}, 5);
  o.check(r52.modal_degree && *r52.modal_degree == 5, "I_{5,2} degree");
  o.detail << "I_{4,1}: " << (r41.modal_degree ? std::to_string(*r41.modal_degree) : "-")
           << ", I_{5,2}: " << (r52.modal_degree ? std::to_string(*r52.modal_degree) : "-");
  const auto start = std::chrono::steady_clock::now();
  groebner::Limits stretch;
  stretch.timeout_secs = 600;
  const auto r51 = groebner::degree_by_slicing(polys_of(inv::tetrads(5)), {5, 101, 1}, 3, stretch);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool hit = r51.modal_degree && *r51.modal_degree == 11;
  if (!hit) o.stretch_flag = true;
  o.detail << ", stretch I_{5,1}: " << (r51.modal_degree ? std::to_string(*r51.modal_degree) : "-") << " in "
           << secs << " s";
}

// ---- 10 ----
void wishart_variance(Outcome& o) {
  const stats::Quad q{1, 2, 3, 4};
  const Matrix<double> off_model{
      {2.0, 0.5, 0.6, 0.1}, {0.5, 1.5, 0.2, 0.5}, {0.6, 0.2, 1.0, 0.3}, {0.1, 0.5, 0.3, 1.2}};
  const Matrix<double> fixtures_psi[2] = {model::sample_model_point_float({4, 1}, 3).psi, off_model};
  for (int f = 0; f < 2; ++f) {
    const auto& psi = fixtures_psi[f];
    const auto mc = stats::monte_carlo_tetrad_moments(psi, 50, 100000, q, 1000 + f);
    const double exact = stats::wishart_tetrad_variance(psi, 50, q);
    const double population = psi(0, 2) * psi(1, 3) - psi(0, 3) * psi(1, 2);
    const double zv = (mc.variance - exact) / mc.variance_se;
    const double zm = (mc.mean - population) / mc.mean_se;
    o.check(std::abs(zv) <= 3, "variance off by " + std::to_string(zv) + " se");
    o.check(std::abs(zm) <= 3, "mean off by " + std::to_string(zm) + " se");
    o.detail << (f == 0 ? "model" : "off-model") << " fixture: variance " << mc.variance << " vs " << exact << " ("
             << zv << " se), mean " << mc.mean << " vs " << population << " (" << zm << " se); ";
  }
}

// ---- 11 ----
void calibration(Outcome& o) {
  struct Case {
    const char* label;
    int p, m;
    InvariantRecord record;
  };
  const Case cases[] = {{"tetrad", 4, 1, inv::tetrads(4).front()}, {"pentad", 5, 2, inv::k_ads(5, 2).front()}};
  for (const auto& c : cases) {
    // one factor: all loadings and noise variances 1; two factors: a sampled point
    const auto psi = c.m == 1 ? model::to_double(model::assemble_covariance(std::vector<Rational>(4, Rational(1)),
                                                                          Matrix<Rational>(4, 1, Rational(1))))
                                    .psi
                              : model::sample_model_point_float({c.p, c.m}, 1).psi;
    const auto s = stats::monte_carlo_null_calibration(psi, 500, 2000, c.record, 11, 1);
    const auto again = stats::monte_carlo_null_calibration(psi, 500, 2000, c.record, 11, 3);
    o.check(s.z == again.z, std::string(c.label) + " not deterministic across thread counts");
    o.check(std::abs(s.mean) <= 0.1, std::string(c.label) + " mean");
    o.check(s.variance >= 0.9 && s.variance <= 1.1, std::string(c.label) + " variance");
    o.check(s.ks_distance < 0.05, std::string(c.label) + " KS");
    char line[200];
    std::snprintf(line, sizeof line, "%s: mean %.3f var %.3f KS %.3f (%zu degenerate); ", c.label, s.mean, s.variance,
                  s.ks_distance, s.degenerate);
    o.detail << line;
  }
}

// ---- 12 ----
void bonferroni(Outcome& o) {
  const auto tetrads6 = inv::tetrads(6);
  const auto null_psi = model::sample_model_point_float({6, 1}, 1).psi;
  Matrix<double> lambda(6, 2, 0.0);
  for (int i = 0; i < 3; ++i) lambda(i, 0) = 1.0;
  for (int i = 3; i < 6; ++i) lambda(i, 1) = 1.0;
  const auto anti_psi = model::assemble_covariance(std::vector<double>(6, 1.0), lambda).psi;
  const int runs = 200;
  const double alpha = 0.05;
  int null_rejections = 0, anti_rejections = 0;
  const auto chol_null = stats::cholesky(null_psi), chol_anti = stats::cholesky(anti_psi);
  for (int r = 0; r < runs; ++r) {
    Rng a(derive_seed(12, r)), b(derive_seed(13, r));
    const auto s0 = stats::sample_covariance(stats::sample_gaussian(chol_null, 1000, a));
    const auto s1 = stats::sample_covariance(stats::sample_gaussian(chol_anti, 1000, b));
    null_rejections += stats::bonferroni_fit_test(s0, tetrads6, alpha).verdict == stats::Verdict::rejected;
    anti_rejections += stats::bonferroni_fit_test(s1, tetrads6, alpha).verdict == stats::Verdict::rejected;
  }
  const double level = static_cast<double>(null_rejections) / runs;
  const double bound = alpha + 2 * std::sqrt(alpha * (1 - alpha) / runs);
  const double power = static_cast<double>(anti_rejections) / runs;
  o.check(level <= bound, "null rejection rate");
  o.check(power >= 0.95, "anti-model rejection rate");
  o.detail << "null rate " << level << " (bound " << bound << "), anti-model rate " << power;
}

// ---- 13 ----
void membership(Outcome& o) {
  int reduced = 0;
  for (int p = 4; p <= 6; ++p) {
    const auto table = inv::psi_table(p);
    const auto basis = groebner::buchberger(polys_of(inv::tetrads(p)), MonomialOrder::circular_lex(*table));
    for (int i = 1; i <= p; ++i) {
      for (int r = 1; r <= p; ++r) {
        for (int c = 1; c <= p; ++c) {
          for (int rb = 1; rb <= p; ++rb) {
            for (int cb = 1; cb <= p; ++cb) {
              std::optional<QPoly> f;
              try {
                f = inv::linear_eliminant_poly({i, {r}, {c}, {rb}, {cb}}, p, 1);
              } catch (const DomainError&) {
                continue;
              }
              o.check(groebner::reduce(*f, basis).normal_form.is_zero(), "m=1 eliminant outside the tetrad ideal");
              ++reduced;
            }
          }
        }
      }
    }
  }
  const bool no_minors = inv::off_diagonal_minors(5, 2).empty();
  const bool pentad_nonzero = !inv::k_ads(5, 2).front().poly->is_zero();
  o.check(no_minors && pentad_nonzero, "(5,2) non-membership fixture");
  o.detail << reduced << " m=1 eliminants (p<=6) reduce to zero; (5,2): no off-diagonal 3x3 minors, pentad nonzero";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "tetrad Groebner basis", 10, tetrad_basis},
      {2, "pentad identity", 1, pentad_identity},
      {3, "elimination to the pentad", 1800, elimination},
      {4, "septad term count and k-ad counts", 10, septad_count},
      {5, "vanishing grid", 120, vanishing_grid},
      {6, "dimension and codimension", 60, dimensions},
      {7, "resultant degree law", 300, resultant_degrees},
      {8, "(9,5) hypersurface and (8,4) invariants", 900, hypersurface_95},
      {9, "degree by slicing", 60 + 600, slicing},
      {10, "Wishart tetrad variance", 120, wishart_variance},
      {11, "asymptotic calibration", 180, calibration},
      {12, "Bonferroni fit test", 300, bonferroni},
      {13, "membership experiments", 60, membership},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.number != only) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.check(secs <= c.budget_secs, "over the time budget");
    all_pass = all_pass && o.pass;
    char head[160];
    std::snprintf(head, sizeof head, "criterion %2d %-44s %s%s (%.2f s) ", c.number, c.name.c_str(),
                  o.pass ? "PASS" : "FAIL", o.stretch_flag ? " [stretch flagged]" : "", secs);
    std::cout << head << o.detail.str() << std::endl;
  }
  return all_pass ? 0 : 1;
}
