#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace fanalg::poly {

using Integer = mpz_class;
using Rational = mpq_class;

// Exact rationals. gmpxx keeps every value canonical (gcd 1, positive
// denominator) after each arithmetic operation.
struct RationalField {
  using Element = Rational;

  static Element zero() { return Element(0); }
  static Element one() { return Element(1); }
  static Element from_int(long v) { return Element(v); }
  static Element from_rational(const Rational& r) { return r; }
  static Rational to_rational(const Element& a) { return a; }

  static bool is_zero(const Element& a) { return sgn(a) == 0; }
  static bool is_one(const Element& a) { return a == 1; }
  static Element add(const Element& a, const Element& b) { return Element(a + b); }
  static Element sub(const Element& a, const Element& b) { return Element(a - b); }
  static Element mul(const Element& a, const Element& b) { return Element(a * b); }
  static Element neg(const Element& a) { return Element(-a); }
  static Element inv(const Element& a);
  static Element div(const Element& a, const Element& b);

  static std::string name() { return "QQ"; }
  bool operator==(const RationalField&) const = default;
};

// GF(q) for a prime q < 2^31. Elements are residues in [0, q).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t modulus = 101);

  std::uint32_t modulus() const { return q_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const;
  // Throws DomainError when the denominator vanishes mod q.
  Element from_rational(const Rational& r) const;
  Rational to_rational(Element a) const { return Rational(static_cast<unsigned long>(a)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  Element add(Element a, Element b) const {
    const std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + q_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % q_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : q_ - a; }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t n);

// "n" or "n/d" in lowest terms.
std::string to_string(const Rational& r);

// Integer, "n/d" or plain decimal ("-0.125", "3e-2"); decimals are read
// exactly. Throws DomainError.
Rational parse_rational(const std::string& text);

}  // namespace fanalg::poly
