#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fanalg/polyring/field.hpp"
#include "fanalg/polyring/matrix.hpp"

namespace fanalg::poly {

// Exact determinant by Gaussian elimination with rational pivots.
Rational determinant(const Matrix<Rational>& m);
// Fraction-free (Bareiss) determinant of an integer matrix.
Integer bareiss_determinant(const Matrix<Integer>& m);
// Determinant by cofactor expansion over any commutative ring element type.
template <class T>
T cofactor_determinant(const Matrix<T>& m);

std::size_t rank(const Matrix<Rational>& m);
std::size_t rank_mod(const Matrix<std::uint32_t>& m, const PrimeField& field);

// Solves m x = b exactly; throws DomainError when m is singular.
std::vector<Rational> solve(const Matrix<Rational>& m, const std::vector<Rational>& b);

template <class T>
T cofactor_determinant(const Matrix<T>& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T total(0);
  std::vector<std::size_t> rows(n - 1);
  for (std::size_t r = 1; r < n; ++r) rows[r - 1] = r;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != c) cols.push_back(k);
    }
    T minor = cofactor_determinant(m.submatrix(rows, cols));
    T term = m(0, c) * minor;
    if (c % 2 == 0) {
      total = total + term;
    } else {
      total = total - term;
    }
  }
  return total;
}

}  // namespace fanalg::poly
