#include "fanalg/polyring/monomial.hpp"

#include <string_view>

#include "fanalg/error.hpp"

namespace fanalg::poly {

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  if (index >= kMaxVars) throw DomainError("variable index out of range");
  if (exponent > 255) throw DomainError("exponent exceeds 255");
  Monomial m;
  m.exp_[index] = static_cast<std::uint8_t>(exponent);
  m.degree_ = static_cast<std::uint16_t>(exponent);
  return m;
}

Monomial Monomial::from_exponents(const std::vector<unsigned>& exponents) {
  if (exponents.size() > kMaxVars) throw DomainError("too many exponents for a monomial");
  Monomial m;
  unsigned total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 255) throw DomainError("exponent exceeds 255");
    m.exp_[i] = static_cast<std::uint8_t>(exponents[i]);
    total += exponents[i];
  }
  m.degree_ = static_cast<std::uint16_t>(total);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  unsigned overflow = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned s = static_cast<unsigned>(exp_[i]) + other.exp_[i];
    overflow |= s;
    r.exp_[i] = static_cast<std::uint8_t>(s);
  }
  if (overflow > 255) throw DomainError("exponent exceeds 255");
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = static_cast<std::uint8_t>(exp_[i] - other.exp_[i]);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned total = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
    total += r.exp_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(total);
  return r;
}

Monomial Monomial::lowered(std::size_t index) const {
  Monomial r = *this;
  --r.exp_[index];
  --r.degree_;
  return r;
}

std::vector<std::pair<std::size_t, unsigned>> Monomial::support() const {
  std::vector<std::pair<std::size_t, unsigned>> out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0) out.emplace_back(i, exp_[i]);
  }
  return out;
}

std::size_t Monomial::span() const {
  for (std::size_t i = kMaxVars; i > 0; --i) {
    if (exp_[i - 1] != 0) return i;
  }
  return 0;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t e : exp_) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = kMaxVars; i > 0; --i) {
    const unsigned ea = a[i - 1];
    const unsigned eb = b[i - 1];
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

}  // namespace fanalg::poly
