#include "fanalg/invariants/generators.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "fanalg/error.hpp"
#include "fanalg/polyring/determinant.hpp"
#include "fanalg/polyring/linalg.hpp"

namespace fanalg::inv {

using poly::RationalField;

namespace {

std::vector<std::vector<int>> subsets(const std::vector<int>& items, std::size_t k) {
  std::vector<std::vector<int>> out;
  if (k > items.size()) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t a = 0; a < k; ++a) pick[a] = a;
  while (true) {
    std::vector<int> s;
    for (auto a : pick) s.push_back(items[a]);
    out.push_back(std::move(s));
    std::size_t a = k;
    while (a > 0 && pick[a - 1] == items.size() - k + a - 1) --a;
    if (a == 0) break;
    ++pick[a - 1];
    for (std::size_t b = a; b < k; ++b) pick[b] = pick[b - 1] + 1;
  }
  return out;
}

std::vector<int> range(int p) {
  std::vector<int> out;
  for (int k = 1; k <= p; ++k) out.push_back(k);
  return out;
}

std::vector<int> without(const std::vector<int>& items, const std::vector<int>& drop) {
  std::vector<int> out;
  for (int x : items) {
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  }
  return out;
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  }
  return true;
}

std::vector<int> prepend(int i, const std::vector<int>& s) {
  std::vector<int> out{i};
  out.insert(out.end(), s.begin(), s.end());
  return out;
}

void check_choice(const EliminantChoice& c, int p, int m) {
  if (m < 1 || c.i < 1 || c.i > p) throw DomainError("eliminant needs m >= 1 and 1 <= i <= p");
  for (const auto* s : {&c.r, &c.c, &c.r_bar, &c.c_bar}) {
    if (static_cast<int>(s->size()) != m) throw DomainError("eliminant index sets must have m elements");
    std::set<int> seen(s->begin(), s->end());
    if (seen.size() != s->size()) throw DomainError("eliminant index sets must not repeat indices");
    for (int x : *s) {
      if (x < 1 || x > p || x == c.i) throw DomainError("eliminant index sets must lie in [p] minus {i}");
    }
  }
  if (!disjoint(c.r, c.c) || !disjoint(c.r_bar, c.c_bar)) {
    throw DomainError("eliminant needs R, C disjoint and Rbar, Cbar disjoint");
  }
}

}  // namespace

QPoly psi_determinant(const TablePtr& table, const std::vector<int>& rows, const std::vector<int>& cols) {
  return poly::determinant(poly::psi_submatrix<RationalField>(table, rows, cols));
}

QPoly psi0_determinant(const TablePtr& table, const std::vector<int>& rows, const std::vector<int>& cols) {
  auto m = poly::psi_submatrix<RationalField>(table, rows, cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (rows[r] == cols[c]) m(r, c) = QPoly(table);
    }
  }
  return poly::determinant(m);
}

Rational normalize_grevlex(QPoly& f) {
  if (f.is_zero()) return 1;
  const Rational scale = 1 / f.terms().front().coeff;
  f = f.scaled(scale);
  return scale;
}

std::vector<InvariantRecord> tetrads(int p) {
  std::vector<InvariantRecord> out;
  if (p < 4) return out;
  const auto table = psi_table(p);
  auto psi = [&](int a, int b) { return QPoly::psi(table, a, b); };
  for (const auto& q : subsets(range(p), 4)) {
    const int i = q[0], j = q[1], k = q[2], l = q[3];
    InvariantRecord first;
    first.kind = InvariantKind::tetrad;
    first.p = p;
    first.m = 1;
    first.degree = 2;
    first.normalization = "circular-lex-monic";
    first.indices = {{"quad", q}, {"rows", {i, l}}, {"cols", {j, k}}};
    first.poly = psi(i, j) * psi(k, l) - psi(i, k) * psi(j, l);
    InvariantRecord second = first;
    second.indices = {{"quad", q}, {"rows", {i, j}}, {"cols", {l, k}}};
    second.poly = psi(i, l) * psi(j, k) - psi(i, k) * psi(j, l);
    out.push_back(std::move(first));
    out.push_back(std::move(second));
  }
  return out;
}

std::vector<InvariantRecord> off_diagonal_minors(int p, int m) {
  std::vector<InvariantRecord> out;
  const int k = m + 1;
  if (m < 1 || p < 2 * k) return out;
  const auto table = psi_table(p);
  for (const auto& rows : subsets(range(p), k)) {
    for (auto cols : subsets(without(range(p), rows), k)) {
      if (cols.front() < rows.front()) continue;  // unordered pairs
      QPoly det = psi_determinant(table, rows, cols);
      if (det.terms().front().coeff < 0) {
        std::swap(cols[0], cols[1]);
        det = -det;
      }
      InvariantRecord rec;
      rec.kind = InvariantKind::offdiag_minor;
      rec.p = p;
      rec.m = m;
      rec.degree = k;
      rec.normalization = "grevlex-monic";
      rec.indices = {{"rows", rows}, {"cols", cols}};
      rec.poly = std::move(det);
      out.push_back(std::move(rec));
    }
  }
  return out;
}

QPoly linear_eliminant_poly(const EliminantChoice& c, int p, int m) {
  check_choice(c, p, m);
  const auto table = psi_table(p);
  return psi_determinant(table, c.r, c.c) * psi0_determinant(table, prepend(c.i, c.r_bar), prepend(c.i, c.c_bar)) -
         psi_determinant(table, c.r_bar, c.c_bar) * psi0_determinant(table, prepend(c.i, c.r), prepend(c.i, c.c));
}

QPoly eliminant_minor_combination(const EliminantChoice& c, int p, int m) {
  check_choice(c, p, m);
  const auto table = psi_table(p);
  return psi_determinant(table, c.r, c.c) * psi_determinant(table, prepend(c.i, c.r_bar), prepend(c.i, c.c_bar)) -
         psi_determinant(table, c.r_bar, c.c_bar) * psi_determinant(table, prepend(c.i, c.r), prepend(c.i, c.c));
}

InvariantRecord linear_eliminant(const EliminantChoice& c, int p, int m) {
  InvariantRecord rec;
  QPoly f = linear_eliminant_poly(c, p, m);
  rec.scale = normalize_grevlex(f);
  rec.kind = sorted_union(c.r, c.c) == sorted_union(c.r_bar, c.c_bar) ? InvariantKind::k_ad
                                                                        : InvariantKind::linear_eliminant;
  rec.p = p;
  rec.m = m;
  rec.degree = f.is_zero() ? 0 : 2 * m + 1;
  rec.normalization = "grevlex-monic";
  rec.indices = {{"i", {c.i}}, {"R", c.r}, {"C", c.c}, {"Rbar", c.r_bar}, {"Cbar", c.c_bar}};
  rec.poly = std::move(f);
  return rec;
}

std::vector<InvariantRecord> k_ads(int p, int m) {
  std::vector<InvariantRecord> out;
  if (m < 1 || p < 2 * m + 1) return out;
  for (int i = 1; i <= p; ++i) {
    for (const auto& u : subsets(without(range(p), {i}), 2 * m)) {
      EliminantChoice c;
      c.i = i;
      c.r.assign(u.begin(), u.begin() + m);
      c.c.assign(u.begin() + m, u.end());
      c.r_bar.assign(u.begin(), u.begin() + (m - 1));
      c.r_bar.push_back(u[m]);
      c.c_bar.push_back(u[m - 1]);
      c.c_bar.insert(c.c_bar.end(), u.begin() + (m + 1), u.end());
      auto rec = linear_eliminant(c, p, m);
      if (rec.poly->is_zero()) continue;
      const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& o) { return *o.poly == *rec.poly; });
      if (!seen) out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<EliminantChoice> all_k_ad_choices(int p, int m) {
  std::vector<EliminantChoice> out;
  if (m < 1 || p < 2 * m + 1) return out;
  for (int i = 1; i <= p; ++i) {
    for (const auto& u : subsets(without(range(p), {i}), 2 * m)) {
      // Splits with u[0] in R: swapping R and C leaves the eliminant unchanged.
      std::vector<std::pair<std::vector<int>, std::vector<int>>> splits;
      for (const auto& r : subsets(u, m)) {
        if (r.front() != u.front()) continue;
        splits.emplace_back(r, without(u, r));
      }
      for (std::size_t a = 0; a < splits.size(); ++a) {
        for (std::size_t b = a + 1; b < splits.size(); ++b) {
          out.push_back({i, splits[a].first, splits[a].second, splits[b].first, splits[b].second});
        }
      }
    }
  }
  return out;
}

std::vector<QPoly> all_minors(int p, int k) {
  const auto table = psi_table(p);
  const auto sets = subsets(range(p), k);
  std::vector<QPoly> out;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a; b < sets.size(); ++b) out.push_back(psi_determinant(table, sets[a], sets[b]));
  }
  return out;
}

std::vector<std::size_t> diagonal_symbols(const poly::VariableTable& table) {
  std::vector<std::size_t> out;
  for (int i = 1; i <= table.p(); ++i) out.push_back(table.psi(i, i));
  return out;
}

std::size_t span_rank(const std::vector<QPoly>& polys) {
  // Rank modulo two large primes; each is a lower bound for the rational rank
  // and they agree with it unless a prime divides every maximal minor.
  std::unordered_map<poly::Monomial, std::size_t, poly::MonomialHash> column;
  for (const auto& f : polys) {
    for (const auto& t : f.terms()) column.try_emplace(t.monomial, column.size());
  }
  std::size_t best = 0;
  for (std::uint32_t q : {2147483647u, 2147483629u}) {
    const poly::PrimeField field(q);
    Matrix<std::uint32_t> m(polys.size(), column.size(), 0);
    for (std::size_t r = 0; r < polys.size(); ++r) {
      for (const auto& t : polys[r].terms()) m(r, column.at(t.monomial)) = field.from_rational(t.coeff);
    }
    best = std::max(best, poly::rank_mod(m, field));
  }
  return best;
}

}  // namespace fanalg::inv
