#include "fanalg/invariants/resultant.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fanalg/error.hpp"
#include "fanalg/invariants/generators.hpp"
#include "fanalg/polyring/determinant.hpp"
#include "fanalg/polyring/linalg.hpp"

namespace fanalg::inv {

namespace {

Rational det(const Matrix<Rational>& m) { return poly::determinant(m); }
QPoly det(const Matrix<QPoly>& m) { return poly::determinant(m); }

double det(Matrix<double> m) {
  const std::size_t n = m.rows();
  double d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(m(r, k)) > std::abs(m(pivot, k))) pivot = r;
    }
    if (m(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double factor = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= factor * m(k, c);
    }
  }
  return d;
}

template <class T>
T zero_like(const T& x) {
  if constexpr (std::is_same_v<T, QPoly>) {
    return QPoly(x.table());
  } else {
    return T(0);
  }
}

// Matrix with the given columns of the coefficient rows.
template <class T>
Matrix<T> columns(const std::vector<std::vector<T>>& a, const std::vector<int>& cols) {
  Matrix<T> out(a.size(), cols.size(), zero_like(a[0][0]));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = a[r][cols[c]];
  }
  return out;
}

// Entry of the 6x6 bracket matrix: sum of signed brackets [ijkl].
struct BracketTerm {
  int sign;
  int cols[4];
};

// The 6x6 matrix of brackets whose determinant is the third multilinear
// resultant. Brackets are 4x4 minors of the 4x8 coefficient matrix.
const std::vector<std::vector<std::vector<BracketTerm>>>& bracket_matrix() {
  static const std::vector<std::vector<std::vector<BracketTerm>>> m = {
      {{{1, {0, 1, 2, 4}}},
       {{1, {0, 2, 3, 4}}},
       {{1, {0, 1, 4, 6}}, {-1, {0, 2, 4, 5}}},
       {{1, {0, 3, 4, 6}}, {-1, {0, 2, 4, 7}}},
       {{1, {0, 4, 5, 6}}},
       {{1, {0, 4, 6, 7}}}},
      {{{1, {0, 1, 2, 5}}, {1, {0, 1, 3, 4}}},
       {{1, {1, 2, 3, 4}}, {1, {0, 2, 3, 5}}},
       {{1, {0, 1, 4, 7}}, {1, {0, 1, 5, 6}}, {-1, {0, 3, 4, 5}}, {-1, {1, 2, 4, 5}}},
       {{-1, {1, 2, 4, 7}}, {1, {0, 3, 5, 6}}, {-1, {0, 2, 5, 7}}, {1, {1, 3, 4, 6}}},
       {{1, {1, 4, 5, 6}}, {1, {0, 4, 5, 7}}},
       {{1, {1, 4, 6, 7}}, {1, {0, 5, 6, 7}}}},
      {{{1, {0, 1, 3, 5}}},
       {{1, {1, 2, 3, 5}}},
       {{1, {0, 1, 5, 7}}, {-1, {1, 3, 4, 5}}},
       {{-1, {1, 2, 5, 7}}, {1, {1, 3, 5, 6}}},
       {{1, {1, 4, 5, 7}}},
       {{1, {1, 5, 6, 7}}}},
      {{{1, {0, 1, 2, 6}}},
       {{1, {0, 2, 3, 6}}},
       {{-1, {1, 2, 4, 6}}, {1, {0, 2, 5, 6}}},
       {{1, {2, 3, 4, 6}}, {-1, {0, 2, 6, 7}}},
       {{1, {2, 4, 5, 6}}},
       {{1, {2, 4, 6, 7}}}},
      {{{1, {0, 1, 3, 6}}, {1, {0, 1, 2, 7}}},
       {{1, {1, 2, 3, 6}}, {1, {0, 2, 3, 7}}},
       {{-1, {1, 2, 4, 7}}, {-1, {1, 3, 4, 6}}, {1, {0, 2, 5, 7}}, {1, {0, 3, 5, 6}}},
       {{-1, {0, 3, 6, 7}}, {-1, {1, 2, 6, 7}}, {1, {2, 3, 5, 6}}, {1, {2, 3, 4, 7}}},
       {{1, {3, 4, 5, 6}}, {1, {2, 4, 5, 7}}},
       {{1, {2, 5, 6, 7}}, {1, {3, 4, 6, 7}}}},
      {{{1, {0, 1, 3, 7}}},
       {{1, {1, 2, 3, 7}}},
       {{-1, {1, 3, 4, 7}}, {1, {0, 3, 5, 7}}},
       {{-1, {1, 3, 6, 7}}, {1, {2, 3, 5, 7}}},
       {{1, {3, 4, 5, 7}}},
       {{1, {3, 5, 6, 7}}}},
  };
  return m;
}

template <class T>
T resultant3(const std::vector<std::vector<T>>& a) {
  // All 70 brackets once.
  std::map<int, T> brackets;
  auto key = [](const int* c) { return ((c[0] * 8 + c[1]) * 8 + c[2]) * 8 + c[3]; };
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      for (int k = j + 1; k < 8; ++k) {
        for (int l = k + 1; l < 8; ++l) {
          const int c[4] = {i, j, k, l};
          brackets.emplace(key(c), det(columns(a, {i, j, k, l})));
        }
      }
    }
  }
  const T zero = zero_like(a[0][0]);
  Matrix<T> m(6, 6, zero);
  const auto& shape = bracket_matrix();
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) {
      T entry = zero;
      for (const auto& term : shape[r][c]) {
        const T& b = brackets.at(key(term.cols));
        if (term.sign > 0) {
          entry += b;
        } else {
          entry -= b;
        }
      }
      m(r, c) = entry;
    }
  }
  return det(m);
}

}  // namespace

template <class T>
T multilinear_resultant(int n, const std::vector<std::vector<T>>& a) {
  if (n < 1 || n > 3) throw DomainError("multilinear resultants are implemented for n = 1, 2, 3 only");
  if (a.size() != static_cast<std::size_t>(n + 1)) throw DomainError("multilinear system needs n+1 polynomials");
  for (const auto& row : a) {
    if (row.size() != (1u << n)) throw DomainError("multilinear system needs 2^n coefficients per polynomial");
  }
  if (n == 1) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  if (n == 2) {
    // Index i1*2 + i2: a00 = 0, a01 = 1, a10 = 2, a11 = 3.
    const int a00 = 0, a01 = 1, a10 = 2, a11 = 3;
    return det(columns(a, {a00, a10, a01})) * det(columns(a, {a10, a01, a11})) -
           det(columns(a, {a00, a01, a11})) * det(columns(a, {a00, a10, a11}));
  }
  return resultant3(a);
}

long expected_degree(int n, int m) {
  long fact = 1;
  for (int k = 2; k <= n + 1; ++k) fact *= k;
  const long twice = static_cast<long>(2 * m - n + 2) * fact;
  if (n < 1 || m < 1 || twice <= 0) throw DomainError("degree formula needs n >= 1, m >= 1 and a positive degree");
  return twice / 2;
}

void validate(const ResultantSelection& sel, int p, int m) {
  const int n = static_cast<int>(sel.d.size());
  if (n < 1 || n > 3) throw DomainError("resultant invariants need |D| in {1, 2, 3}");
  const int k = m + 1 - n;
  if (k < 1) throw DomainError("resultant invariants need m + 1 - n >= 1");
  if (p < n + 2 * k) throw DomainError("resultant invariants need p >= n + 2(m + 1 - n)");
  if (sel.rows.size() != static_cast<std::size_t>(n + 1) || sel.cols.size() != sel.rows.size()) {
    throw DomainError("resultant invariants need n + 1 row sets and column sets");
  }
  const std::set<int> d(sel.d.begin(), sel.d.end());
  if (d.size() != sel.d.size()) throw DomainError("D must not repeat indices");
  auto check = [&](const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != k) throw DomainError("row and column sets need m + 1 - n elements");
    const std::set<int> u(s.begin(), s.end());
    if (u.size() != s.size()) throw DomainError("row and column sets must not repeat indices");
    for (int x : s) {
      if (x < 1 || x > p || d.count(x)) throw DomainError("row and column sets must lie in [p] minus D");
    }
  };
  for (int x : sel.d) {
    if (x < 1 || x > p) throw DomainError("D must lie in [p]");
  }
  for (std::size_t j = 0; j < sel.rows.size(); ++j) {
    check(sel.rows[j]);
    check(sel.cols[j]);
    for (int x : sel.rows[j]) {
      if (std::find(sel.cols[j].begin(), sel.cols[j].end(), x) != sel.cols[j].end()) {
        throw DomainError("R_k and C_k must be disjoint");
      }
    }
  }
}

namespace {

// Coefficient of prod_{j in S} x_j in det(M_{DR_k x DC_k}) where the first n
// diagonal positions hold x: delete rows/cols of S, zero the other x's.
template <class T, class Entry>
std::vector<std::vector<T>> system_from(const ResultantSelection& sel, Entry entry, const T& zero) {
  const int n = static_cast<int>(sel.d.size());
  std::vector<std::vector<T>> out(n + 1, std::vector<T>(1u << n, zero));
  for (int k = 0; k <= n; ++k) {
    std::vector<int> rows = sel.d, cols = sel.d;
    rows.insert(rows.end(), sel.rows[k].begin(), sel.rows[k].end());
    cols.insert(cols.end(), sel.cols[k].begin(), sel.cols[k].end());
    for (unsigned idx = 0; idx < (1u << n); ++idx) {
      // Bit for x_j (j = 1..n) is 2^{n-j}.
      std::vector<bool> in_s(n);
      for (int j = 0; j < n; ++j) in_s[j] = (idx >> (n - 1 - j)) & 1u;
      std::vector<std::size_t> keep;
      for (std::size_t t = 0; t < rows.size(); ++t) {
        if (t < static_cast<std::size_t>(n) && in_s[t]) continue;
        keep.push_back(t);
      }
      if (keep.empty()) {
        if constexpr (std::is_same_v<T, QPoly>) {
          out[k][idx] = QPoly::constant(zero.table(), 1);
        } else {
          out[k][idx] = T(1);
        }
        continue;
      }
      Matrix<T> m(keep.size(), keep.size(), zero);
      for (std::size_t r = 0; r < keep.size(); ++r) {
        for (std::size_t c = 0; c < keep.size(); ++c) {
          const bool diagonal_x = keep[r] == keep[c] && keep[r] < static_cast<std::size_t>(n);
          m(r, c) = diagonal_x ? zero : entry(rows[keep[r]], cols[keep[c]]);
        }
      }
      out[k][idx] = det(m);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<QPoly>> resultant_system(const ResultantSelection& sel, int p) {
  const auto table = psi_table(p);
  return system_from<QPoly>(sel, [&](int i, int j) { return QPoly::psi(table, i, j); }, QPoly(table));
}

std::vector<std::vector<Rational>> resultant_system(const ResultantSelection& sel, const Matrix<Rational>& psi) {
  return system_from<Rational>(sel, [&](int i, int j) { return psi(i - 1, j - 1); }, Rational(0));
}

std::vector<std::vector<double>> resultant_system(const ResultantSelection& sel, const Matrix<double>& psi) {
  return system_from<double>(sel, [&](int i, int j) { return psi(i - 1, j - 1); }, 0.0);
}

double estimated_terms(int p, long degree) {
  // C(v + d - 1, d) with v off-diagonal symbols, via lgamma.
  const double v = p * (p - 1) / 2.0;
  const double d = static_cast<double>(degree);
  return std::exp(std::lgamma(v + d) - std::lgamma(d + 1) - std::lgamma(v));
}

InvariantRecord resultant_invariant(const ResultantSelection& sel, int p, int m, const ResultantOptions& options) {
  validate(sel, p, m);
  const int n = static_cast<int>(sel.d.size());
  InvariantRecord rec;
  rec.kind = InvariantKind::resultant;
  rec.p = p;
  rec.m = m;
  rec.degree = static_cast<int>(expected_degree(n, m));
  rec.selection = sel;
  rec.indices["D"] = sel.d;
  for (int k = 0; k <= n; ++k) {
    rec.indices["R" + std::to_string(k)] = sel.rows[k];
    rec.indices["C" + std::to_string(k)] = sel.cols[k];
  }
  if (options.mode == ResultantMode::evaluable) {
    rec.normalization = "unnormalized";
    return rec;
  }
  const double estimate = estimated_terms(p, rec.degree);
  if (estimate > options.term_cap) {
    throw DomainError("symbolic expansion refused: about " + std::to_string(static_cast<long long>(estimate)) +
                      " terms predicted for degree " + std::to_string(rec.degree) + ", cap " +
                      std::to_string(static_cast<long long>(options.term_cap)));
  }
  QPoly f = multilinear_resultant<QPoly>(n, resultant_system(sel, p));
  rec.scale = normalize_grevlex(f);
  if (f.is_zero()) rec.degree = 0;
  rec.normalization = "grevlex-monic";
  rec.poly = std::move(f);
  return rec;
}

template Rational multilinear_resultant(int, const std::vector<std::vector<Rational>>&);
template double multilinear_resultant(int, const std::vector<std::vector<double>>&);
template QPoly multilinear_resultant(int, const std::vector<std::vector<QPoly>>&);

}  // namespace fanalg::inv
