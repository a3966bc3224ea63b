#include "fanalg/polyring/determinant.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "fanalg/error.hpp"

namespace fanalg::poly {

namespace {

template <class F>
Polynomial<F> cofactor(const Matrix<Polynomial<F>>& m) {
  const std::size_t n = m.rows();
  if (n > 63) throw DomainError("matrix too large for cofactor expansion");
  const TablePtr& table = m(0, 0).table();
  const F& field = m(0, 0).field();
  // minors[S] = det of the last |S| rows restricted to the columns in S.
  std::unordered_map<std::uint64_t, Polynomial<F>> minors;
  minors.emplace(0, Polynomial<F>::constant(table, field.one(), field));
  std::vector<std::uint64_t> current{0};
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    std::unordered_map<std::uint64_t, Polynomial<F>> next;
    std::vector<std::uint64_t> next_keys;
    for (std::uint64_t base : current) {
      for (std::size_t c = 0; c < n; ++c) {
        if (base & (1ULL << c)) continue;
        const std::uint64_t set = base | (1ULL << c);
        if (next.count(set)) continue;
        Polynomial<F> total(table, field);
        // Expand along `row`; the sign is the parity of the column's rank inside `set`.
        int position = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (!(set & (1ULL << k))) continue;
          const auto& entry = m(row, k);
          if (!entry.is_zero()) {
            const auto& minor = minors.at(set & ~(1ULL << k));
            if (!minor.is_zero()) {
              const auto term = entry * minor;
              total = position % 2 == 0 ? total + term : total - term;
            }
          }
          ++position;
        }
        next.emplace(set, std::move(total));
        next_keys.push_back(set);
      }
    }
    minors = std::move(next);
    current = std::move(next_keys);
  }
  return minors.at(n == 64 ? ~0ULL : (1ULL << n) - 1);
}

template <class F>
Polynomial<F> fraction_free(Matrix<Polynomial<F>> m) {
  const std::size_t n = m.rows();
  const TablePtr& table = m(0, 0).table();
  const F field = m(0, 0).field();
  Polynomial<F> previous = Polynomial<F>::constant(table, field.one(), field);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return Polynomial<F>(table, field);
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        m(r, c) = (m(k, k) * m(r, c) - m(r, k) * m(k, c)).exact_divide(previous);
      }
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace

template <class F>
Polynomial<F> determinant(const Matrix<Polynomial<F>>& m, DetMethod method) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) throw DomainError("determinant of an empty matrix");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!same_table(m(r, c).table(), m(0, 0).table()) || !(m(r, c).field() == m(0, 0).field())) {
        throw DomainError("matrix entries live in different rings");
      }
    }
  }
  return method == DetMethod::cofactor ? cofactor(m) : fraction_free(m);
}

template <class F>
Matrix<Polynomial<F>> psi_submatrix(const TablePtr& table, const std::vector<int>& rows, const std::vector<int>& cols,
                                    F field) {
  Matrix<Polynomial<F>> out(rows.size(), cols.size(), Polynomial<F>(table, field));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = Polynomial<F>::psi(table, rows[r], cols[c], field);
  }
  return out;
}

template QPoly determinant(const Matrix<QPoly>&, DetMethod);
template FpPoly determinant(const Matrix<FpPoly>&, DetMethod);
template Matrix<QPoly> psi_submatrix(const TablePtr&, const std::vector<int>&, const std::vector<int>&, RationalField);
template Matrix<FpPoly> psi_submatrix(const TablePtr&, const std::vector<int>&, const std::vector<int>&, PrimeField);

}  // namespace fanalg::poly
