#include "fanalg/cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fanalg/error.hpp"
#include "fanalg/groebner/groebner.hpp"
#include "fanalg/invariants/generators.hpp"
#include "fanalg/invariants/resultant.hpp"
#include "fanalg/model/factor_model.hpp"
#include "fanalg/polyring/text_format.hpp"
#include "fanalg/random.hpp"

namespace fanalg::cli {

namespace {

using groebner::BasisStatus;
using groebner::MonomialOrder;
using inv::InvariantRecord;
using inv::ResultantSelection;
using poly::Matrix;
using poly::QPoly;
using poly::Rational;

Rational small_rational(Rng& rng, long span = 20, long den = 7) {
  Rational q(rng.uniform_int(-span, span), rng.uniform_int(1, den));
  q.canonicalize();
  return q;
}

Matrix<Rational> random_symmetric(Rng& rng, int p, long span = 20, long den = 7) {
  Matrix<Rational> out(p, p, Rational(0));
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j) {
      out(i, j) = small_rational(rng, span, den);
      out(j, i) = out(i, j);
    }
  }
  return out;
}

bool equal_up_to_sign(const QPoly& a, const QPoly& b) { return a == b || a == -b; }

bool equal_up_to_scale(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.scaled(1 / a.terms().front().coeff) == b.scaled(1 / b.terms().front().coeff);
}

std::vector<QPoly> polys_of(const std::vector<InvariantRecord>& records) {
  std::vector<QPoly> out;
  for (const auto& r : records) {
    if (r.poly) out.push_back(*r.poly);
  }
  return out;
}

Range or_default(const Range& r, Range fallback) { return r.set() ? r : fallback; }

void fail(SuiteReport& report) { report.status = SuiteStatus::fail; }

void partial(SuiteReport& report) {
  if (report.status == SuiteStatus::pass) report.status = SuiteStatus::partial;
}

std::string pass_word(bool ok) { return ok ? "pass" : "FAIL"; }

SuiteReport tetrad_gb(const RunConfig& config) {
  SuiteReport report;
  report.name = "tetrad-gb";
  const Range p = or_default(config.p, {4, 6});
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (int n = std::max(p.lo, 4); n <= p.hi; ++n) {
    const auto table = inv::psi_table(n);
    const auto order = MonomialOrder::circular_lex(*table);
    const auto tp = polys_of(inv::tetrads(n));
    const auto cert = groebner::is_groebner_basis(tp, order);
    const auto basis = groebner::buchberger(tp, order, config.limits);
    nlohmann::ordered_json c = {{"p", n},
                                {"generators", tp.size()},
                                {"is_groebner", cert.is_groebner},
                                {"pairs_checked", cert.pairs_checked},
                                {"pairs_skipped_coprime", cert.pairs_skipped_coprime}};
    if (!cert.is_groebner) {
      const auto [a, b] = cert.failing_pairs.front();
      c["failing_pair"] = {poly::format_polynomial(tp[a]), poly::format_polynomial(tp[b])};
      fail(report);
    }
    std::string line = "p=" + std::to_string(n) + ": S-pair check " + pass_word(cert.is_groebner);
    if (basis.report.hit) {
      c["buchberger"] = "limit hit: " + basis.report.reason;
      partial(report);
      line += ", buchberger stopped (" + basis.report.reason + ")";
    } else {
      bool unchanged = basis.generators.size() == tp.size();
      for (const auto& g : basis.generators) {
        unchanged = unchanged && std::any_of(tp.begin(), tp.end(), [&](const QPoly& t) { return equal_up_to_sign(t, g); });
      }
      c["buchberger_unchanged"] = unchanged;
      if (!unchanged) fail(report);
      line += ", reduced basis unchanged " + pass_word(unchanged);
    }
    checks.push_back(c);
    report.lines.push_back(line);
  }
  report.details["checks"] = checks;
  return report;
}

SuiteReport eliminant_identity(const RunConfig& config) {
  SuiteReport report;
  report.name = "eliminant-identity";
  const int p = config.p.set() ? config.p.lo : 5;
  const int m = config.m.set() ? config.m.lo : 2;
  const auto choices = inv::all_k_ad_choices(p, m);
  if (choices.empty()) throw DomainError("no eliminant choices for p=" + std::to_string(p) + ", m=" + std::to_string(m));
  std::size_t zero = 0, identity_ok = 0;
  std::vector<QPoly> distinct;
  for (const auto& c : choices) {
    const QPoly direct = inv::linear_eliminant_poly(c, p, m);
    const QPoly via_minors = inv::eliminant_minor_combination(c, p, m);
    if (direct == via_minors) {
      ++identity_ok;
    } else if (report.status == SuiteStatus::pass) {
      fail(report);
      report.details["failing_choice"] = {{"i", c.i}, {"r", c.r}, {"c", c.c}, {"r_bar", c.r_bar}, {"c_bar", c.c_bar}};
    }
    if (direct.is_zero()) {
      ++zero;
      continue;
    }
    QPoly normalized = direct;
    inv::normalize_grevlex(normalized);
    if (std::none_of(distinct.begin(), distinct.end(), [&](const QPoly& d) { return d == normalized; })) {
      distinct.push_back(normalized);
    }
  }
  report.details["p"] = p;
  report.details["m"] = m;
  report.details["choices"] = choices.size();
  report.details["identity_holds"] = identity_ok;
  report.details["zero_eliminants"] = zero;
  report.details["distinct_nonzero"] = distinct.size();
  report.lines.push_back(std::to_string(identity_ok) + "/" + std::to_string(choices.size()) +
                         " choices satisfy the minor identity (" + std::to_string(zero) + " zero, " +
                         std::to_string(distinct.size()) + " distinct up to scale)");
  if (p == 2 * m + 1 && m == 2) {
    const bool unique = distinct.size() == 1 && distinct[0].size() == 12;
    report.details["single_pentad"] = unique;
    report.lines.push_back("every nonzero eliminant is the 12-term pentad: " + pass_word(unique));
    if (!unique) fail(report);
  }
  return report;
}

SuiteReport vanishing_grid(const RunConfig& config) {
  SuiteReport report;
  report.name = "vanishing-grid";
  std::vector<std::pair<int, int>> grid;
  if (config.p.set() || config.m.set()) {
    const Range p = or_default(config.p, {4, 7});
    const Range m = or_default(config.m, {1, 3});
    for (int a = p.lo; a <= p.hi; ++a) {
      for (int b = m.lo; b <= m.hi; ++b) grid.emplace_back(a, b);
    }
  } else {
    grid = {{4, 1}, {5, 1}, {6, 1}, {7, 1}, {5, 2}, {6, 2}, {7, 2}, {7, 3}};
  }
  const bool floating = config.mode == Mode::floating;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& [p, m] : grid) {
    std::vector<InvariantRecord> all;
    if (m == 1) all = inv::tetrads(p);
    for (auto& r : inv::off_diagonal_minors(p, m)) all.push_back(std::move(r));
    for (auto& r : inv::k_ads(p, m)) all.push_back(std::move(r));
    nlohmann::ordered_json c = {{"p", p}, {"m", m}, {"invariants", all.size()}};
    if (all.empty()) {
      c["note"] = "no generators for this (p, m)";
      checks.push_back(c);
      report.lines.push_back("(" + std::to_string(p) + "," + std::to_string(m) + "): no generators");
      continue;
    }
    bool vanish = true;
    std::size_t worst_nonzero = config.points;
    for (std::size_t k = 0; k < config.points && vanish; ++k) {
      const auto point = model::sample_model_point({p, m}, derive_seed(config.seed, k));
      const auto fpoint = model::to_double(point);
      for (const auto& rec : all) {
        bool zero = true;
        if (floating) {
          double scale = 1.0;
          for (std::size_t i = 0; i < fpoint.psi.rows(); ++i) scale = std::max(scale, std::abs(fpoint.psi(i, i)));
          zero = std::abs(inv::evaluate(rec, fpoint.psi)) <= 1e-9 * std::pow(scale, rec.degree);
        } else {
          zero = inv::evaluate(rec, point.psi) == 0;
        }
        if (!zero) {
          vanish = false;
          c["nonzero_on_model"] = {{"invariant", inv::to_json(rec)}, {"point_seed", derive_seed(config.seed, k)}};
          break;
        }
      }
    }
    std::vector<std::size_t> nonzero(all.size(), 0);
    Rng rng(derive_seed(config.seed, 1'000'003));
    for (std::size_t k = 0; k < config.points; ++k) {
      const auto psi = random_symmetric(rng, p, 1000000, 1000);
      for (std::size_t r = 0; r < all.size(); ++r) {
        if (inv::evaluate(all[r], psi) != 0) ++nonzero[r];
      }
    }
    worst_nonzero = *std::min_element(nonzero.begin(), nonzero.end());
    const bool separating = worst_nonzero * 100 >= 99 * config.points;
    c["vanish_on_model"] = vanish;
    c["min_nonzero_off_model"] = worst_nonzero;
    c["points"] = config.points;
    if (!vanish || !separating) fail(report);
    checks.push_back(c);
    report.lines.push_back("(" + std::to_string(p) + "," + std::to_string(m) + "): " + std::to_string(all.size()) +
                           " invariants, vanish on model " + pass_word(vanish) + ", nonzero off model " +
                           std::to_string(worst_nonzero) + "/" + std::to_string(config.points) + " " +
                           pass_word(separating));
  }
  report.details["checks"] = checks;
  report.details["arithmetic"] = floating ? "float" : "exact";
  return report;
}

// A selection for one unknown whose eliminant is nonzero.
ResultantSelection one_unknown_selection(int m) {
  if (m == 1) return {{1}, {{2}, {2}}, {{3}, {4}}};
  const int p = 2 * m + 1;
  for (const auto& c : inv::all_k_ad_choices(p, m)) {
    if (!inv::linear_eliminant_poly(c, p, m).is_zero()) return {{c.i}, {c.r, c.r_bar}, {c.c, c.c_bar}};
  }
  throw DomainError("no nonzero eliminant for m=" + std::to_string(m));
}

const ResultantSelection kSelection84{{1, 2}, {{3, 4, 5}, {3, 4, 6}, {3, 5, 7}}, {{6, 7, 8}, {5, 7, 8}, {4, 6, 8}}};
const ResultantSelection kSelection95a{
    {1, 2, 3}, {{4, 5, 6}, {4, 5, 7}, {4, 6, 8}, {4, 7, 9}}, {{7, 8, 9}, {6, 8, 9}, {5, 7, 9}, {5, 6, 8}}};
const ResultantSelection kSelection95b{
    {1, 2, 3}, {{4, 5, 6}, {4, 5, 8}, {4, 6, 7}, {4, 8, 9}}, {{7, 8, 9}, {6, 7, 9}, {5, 8, 9}, {5, 6, 7}}};

}  // namespace

std::vector<ResultantSelection> embedded_resultant_selections(int p, int m) {
  if (p == 5 && m == 2) return {{{1}, {{2, 3}, {2, 4}}, {{4, 5}, {3, 5}}}};
  if (p == 8 && m == 4) return {kSelection84};
  if (p == 9 && m == 5) return {kSelection95a, kSelection95b};
  return {};
}

namespace {

SuiteReport resultant_degrees(const RunConfig& config) {
  SuiteReport report;
  report.name = "resultant-degrees";
  Rng rng(config.seed);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  const auto degree_check = [&](const InvariantRecord& rec, int p, int n, long expected) {
    const auto base = random_symmetric(rng, p), dir = random_symmetric(rng, p);
    const long got = inv::restriction(rec, base, dir).degree();
    const bool ok = got == expected;
    if (!ok) fail(report);
    checks.push_back({{"p", p}, {"m", rec.m}, {"n", n}, {"restriction_degree", got}, {"expected", expected}});
    report.lines.push_back("(p,m,n)=(" + std::to_string(p) + "," + std::to_string(rec.m) + "," + std::to_string(n) +
                           "): restriction degree " + std::to_string(got) + ", expected " + std::to_string(expected) +
                           " " + pass_word(ok));
  };
  for (int m = 1; m <= 3; ++m) {
    const int p = m == 1 ? 4 : 2 * m + 1;
    const auto sel = one_unknown_selection(m);
    const auto rec = inv::resultant_invariant(sel, p, m);
    QPoly elim = inv::linear_eliminant_poly({sel.d[0], sel.rows[0], sel.cols[0], sel.rows[1], sel.cols[1]}, p, m);
    inv::normalize_grevlex(elim);
    const bool same = rec.poly && equal_up_to_sign(*rec.poly, elim);
    if (!same) fail(report);
    checks.push_back({{"p", p}, {"m", m}, {"n", 1}, {"equals_eliminant", same}});
    report.lines.push_back("m=" + std::to_string(m) + ": one-unknown resultant equals the eliminant " + pass_word(same));
    degree_check(rec, p, 1, 2 * m + 1);
  }
  degree_check(inv::resultant_invariant(kSelection84, 8, 4, {inv::ResultantMode::evaluable}), 8, 2, 24);
  degree_check(inv::resultant_invariant(kSelection95a, 9, 5, {inv::ResultantMode::evaluable}), 9, 3, 108);
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::vector<Rational>> system(n + 1, std::vector<Rational>(std::size_t{1} << n));
    for (auto& f : system) {
      for (auto& a : f) a = small_rational(rng);
    }
    const Rational base = inv::multilinear_resultant(n, system);
    const Rational t(3, 2);
    int factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    bool ok = true;
    for (int k = 0; k <= n; ++k) {
      auto scaled = system;
      for (auto& a : scaled[k]) a *= t;
      Rational power = 1;
      for (int e = 0; e < factorial; ++e) power *= t;
      ok = ok && inv::multilinear_resultant(n, scaled) == power * base;
    }
    if (!ok) fail(report);
    checks.push_back({{"n", n}, {"homogeneous_degree", factorial}, {"holds", ok}});
    report.lines.push_back("n=" + std::to_string(n) + ": homogeneous of degree " + std::to_string(factorial) +
                           " in each polynomial " + pass_word(ok));
  }
  report.details["checks"] = checks;
  return report;
}

SuiteReport gcd_95(const RunConfig& config) {
  SuiteReport report;
  report.name = "gcd-95";
  const auto a = inv::resultant_invariant(kSelection95a, 9, 5, {inv::ResultantMode::evaluable});
  const auto b = inv::resultant_invariant(kSelection95b, 9, 5, {inv::ResultantMode::evaluable});
  const std::size_t lines = 3;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < lines; ++k) {
    Rng rng(derive_seed(config.seed, k));
    const auto base = random_symmetric(rng, 9), dir = random_symmetric(rng, 9);
    const auto ra = inv::restriction(a, base, dir);
    const auto rb = inv::restriction(b, base, dir);
    const int g = poly::gcd(ra, rb).degree();
    const bool ok = ra.degree() == 108 && rb.degree() == 108 && g == 54;
    if (!ok) fail(report);
    checks.push_back({{"line", k}, {"degree_a", ra.degree()}, {"degree_b", rb.degree()}, {"gcd_degree", g}});
    report.lines.push_back("line " + std::to_string(k) + ": restriction degrees " + std::to_string(ra.degree()) + ", " +
                           std::to_string(rb.degree()) + ", gcd degree " + std::to_string(g) + " " + pass_word(ok));
  }
  report.details["checks"] = checks;
  return report;
}

SuiteReport elimination_52(const RunConfig& config) {
  SuiteReport report;
  report.name = "elimination-52";
  const auto table = inv::psi_table(5);
  const auto out = groebner::eliminate(inv::all_minors(5, 3), inv::diagonal_symbols(*table), config.limits);
  report.details["basis_size"] = out.basis.generators.size();
  report.details["status"] = groebner::to_string(out.basis.status);
  if (out.basis.report.hit) {
    partial(report);
    report.details["limit"] = out.basis.report.reason;
    report.lines.push_back("elimination stopped: " + out.basis.report.reason);
    return report;
  }
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& g : out.generators) gens.push_back(poly::format_polynomial(g));
  report.details["generators"] = gens;
  const QPoly pentad = *inv::k_ads(5, 2).front().poly;
  const bool single = out.generators.size() == 1 && equal_up_to_scale(out.generators[0], pentad);
  if (!single) fail(report);
  report.lines.push_back("eliminating the diagonal from the 3x3 minors leaves " +
                         std::to_string(out.generators.size()) + " generator(s); single pentad " + pass_word(single));
  return report;
}

}  // namespace

std::string to_string(SuiteStatus status) {
  switch (status) {
    case SuiteStatus::pass:
      return "pass";
    case SuiteStatus::fail:
      return "fail";
    case SuiteStatus::partial:
      return "partial";
  }
  return "fail";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tetrad-gb",         "eliminant-identity", "vanishing-grid",
                                                 "resultant-degrees", "gcd-95",             "elimination-52"};
  return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& config) {
  if (name == "tetrad-gb") return tetrad_gb(config);
  if (name == "eliminant-identity") return eliminant_identity(config);
  if (name == "vanishing-grid") return vanishing_grid(config);
  if (name == "resultant-degrees") return resultant_degrees(config);
  if (name == "gcd-95") return gcd_95(config);
  if (name == "elimination-52") return elimination_52(config);
  std::ostringstream msg;
  msg << "unknown suite '" << name << "' (expected";
  for (const auto& n : suite_names()) msg << " " << n;
  msg << ")";
  throw DomainError(msg.str());
}

}  // namespace fanalg::cli
