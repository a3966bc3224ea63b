#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <utility>
#include <vector>

namespace fanalg::poly {

// Largest variable count a ring may have. Enough for the symmetric 10x10
// matrix (55 symbols) plus a handful of auxiliary symbols.
inline constexpr std::size_t kMaxVars = 64;

// Power product x^e. Exponents are stored densely (one byte per variable);
// support() gives the sparse view. Zero exponents are simply absent from the
// support, so the "no stored zero exponent" rule holds by construction.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned exponent = 1);
  static Monomial from_exponents(const std::vector<unsigned>& exponents);

  unsigned operator[](std::size_t index) const { return exp_[index]; }
  unsigned degree() const { return degree_; }
  const std::uint8_t* data() const { return exp_.data(); }
  bool is_one() const { return degree_ == 0; }

  // Throws DomainError when an exponent would exceed 255.
  Monomial operator*(const Monomial& other) const;
  // Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    }
    return true;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b);

  // Derivative bookkeeping: exponent of `index` lowered by one.
  Monomial lowered(std::size_t index) const;

  std::vector<std::pair<std::size_t, unsigned>> support() const;
  // Highest variable index with nonzero exponent plus one.
  std::size_t span() const;

  std::size_t hash() const;

  bool operator==(const Monomial& other) const {
    return degree_ == other.degree_ && std::memcmp(exp_.data(), other.exp_.data(), kMaxVars) == 0;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Graded reverse lexicographic comparison with variable 0 largest. This is
// the canonical storage order of Polynomial.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

}  // namespace fanalg::poly
