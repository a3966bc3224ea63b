#pragma once

#include <string>
#include <vector>

#include "fanalg/polyring/field.hpp"

namespace fanalg::poly {

// Dense univariate polynomial over Q; coeffs()[k] multiplies t^k. The
// coefficient vector never ends in zero, so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  UniPoly operator+(const UniPoly& other) const;
  UniPoly operator-(const UniPoly& other) const;
  UniPoly operator*(const UniPoly& other) const;
  UniPoly monic() const;
  bool operator==(const UniPoly&) const = default;

  std::string str(const std::string& var = "t") const;

 private:
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) is 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
// Unique polynomial of degree < xs.size() through the points (Newton form).
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace fanalg::poly
