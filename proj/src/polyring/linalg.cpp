#include "fanalg/polyring/linalg.hpp"

#include <utility>

namespace fanalg::poly {

Rational determinant(const Matrix<Rational>& input) {
  if (!input.square()) throw DomainError("determinant of a non-square matrix");
  Matrix<Rational> m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(m(r, k)) == 0) continue;
      const Rational factor = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= factor * m(k, c);
    }
  }
  return det;
}

Integer bareiss_determinant(const Matrix<Integer>& input) {
  if (!input.square()) throw DomainError("determinant of a non-square matrix");
  Matrix<Integer> m = input;
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
      if (pivot == n) return 0;
      m.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        Integer v = m(k, k) * m(r, c) - m(r, k) * m(k, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m(r, c) = std::move(v);
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const Matrix<Rational>& input) {
  Matrix<Rational> m = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, r);
    for (std::size_t k = r + 1; k < m.rows(); ++k) {
      if (sgn(m(k, c)) == 0) continue;
      const Rational factor = m(k, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(k, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank_mod(const Matrix<std::uint32_t>& input, const PrimeField& field) {
  Matrix<std::uint32_t> m = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, r);
    const auto inv = field.inv(m(r, c));
    for (std::size_t k = r + 1; k < m.rows(); ++k) {
      if (m(k, c) == 0) continue;
      const auto factor = field.mul(m(k, c), inv);
      for (std::size_t j = c; j < m.cols(); ++j) m(k, j) = field.sub(m(k, j), field.mul(factor, m(r, j)));
    }
    ++r;
  }
  return r;
}

std::vector<Rational> solve(const Matrix<Rational>& input, const std::vector<Rational>& b) {
  if (!input.square() || b.size() != input.rows()) throw DomainError("solve needs a square system");
  const std::size_t n = input.rows();
  Matrix<Rational> m(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = input(r, c);
    m(r, n) = b[r];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
    if (pivot == n) throw DomainError("singular system");
    m.swap_rows(pivot, k);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || sgn(m(r, k)) == 0) continue;
      const Rational factor = m(r, k) / m(k, k);
      for (std::size_t c = k; c <= n; ++c) m(r, c) -= factor * m(k, c);
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = m(r, n) / m(r, r);
  return x;
}

}  // namespace fanalg::poly
