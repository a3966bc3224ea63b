#include "fanalg/polyring/field.hpp"

#include "fanalg/error.hpp"

namespace fanalg::poly {

RationalField::Element RationalField::inv(const Element& a) {
  if (sgn(a) == 0) throw DomainError("division by zero in QQ");
  return Element(1 / a);
}

RationalField::Element RationalField::div(const Element& a, const Element& b) {
  if (sgn(b) == 0) throw DomainError("division by zero in QQ");
  return Element(a / b);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : q_(modulus) {
  if (modulus >= (1u << 31) || !is_prime(modulus)) {
    throw DomainError("GF(q) requires a prime q < 2^31, got " + std::to_string(modulus));
  }
}

PrimeField::Element PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(q_);
  if (r < 0) r += q_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_rational(const Rational& r) const {
  const Integer qz(static_cast<unsigned long>(q_));
  Integer num = r.get_num() % qz;
  if (num < 0) num += qz;
  Integer den = r.get_den() % qz;
  if (den == 0) throw DomainError("denominator vanishes in " + name());
  return div(static_cast<Element>(num.get_ui()), static_cast<Element>(den.get_ui()));
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw DomainError("division by zero in " + name());
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q_, new_r = a;
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t -= quotient * new_t;
    std::swap(t, new_t);
    r -= quotient * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += q_;
  return static_cast<Element>(t);
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  auto bad = [&]() { return DomainError("not a number: '" + text + "'"); };
  if (text.empty()) throw bad();
  if (text.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw bad();
    if (r.get_den() == 0) throw bad();
    r.canonicalize();
    return r;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_point = false, seen_digit = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits += c;
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw bad();
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw bad();
    const std::string rest = text.substr(pos + 1);
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(rest, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != rest.size() || e > 4000 || e < -4000) throw bad();
    exponent += e;
  }
  mpz_class num(digits, 10), scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace fanalg::poly
