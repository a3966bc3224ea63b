#include "fanalg/polyring/univariate.hpp"

#include <sstream>
#include <utility>

#include "fanalg/error.hpp"

namespace fanalg::poly {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

// Integer coefficients with gcd 1 and positive leading coefficient.
std::vector<Integer> primitive(const UniPoly& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    Rational scaled = c * den;
    out.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g != 0) {
    if (sgn(out.back()) < 0) g = -g;
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

UniPoly from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> q;
  q.reserve(c.size());
  for (const auto& v : c) q.emplace_back(v);
  return UniPoly(std::move(q));
}

// Pseudo-remainder of a by b over Z.
std::vector<Integer> pseudo_remainder(std::vector<Integer> a, const std::vector<Integer>& b) {
  const Integer& lead = b.back();
  while (a.size() >= b.size()) {
    const Integer top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& v : a) v *= lead;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= top * b[k];
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
  }
  return a;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) c[k] += other.coeffs_[k];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) c[k] -= other.coeffs_[k];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coeffs_;
  const Rational lead = c.back();
  for (auto& v : c) v /= lead;
  return UniPoly(std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0 || c != 1) os << to_string(c) << (k > 0 ? "*" : "");
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> quot(a.degree() - b.degree() + 1, 0);
  for (int k = a.degree(); k >= b.degree(); --k) {
    const Rational factor = rem[k] / b.leading();
    quot[k - b.degree()] = factor;
    if (sgn(factor) == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[k - b.degree() + j] -= factor * b.coeffs()[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  // Primitive remainder sequence over Z keeps coefficient growth in check.
  std::vector<Integer> x = primitive(a);
  std::vector<Integer> y = primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<Integer> r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.empty() ? r : primitive(from_integers(r));
  }
  return from_integers(x).monic();
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw DomainError("interpolation needs matching nonempty point lists");
  const std::size_t n = xs.size();
  std::vector<Rational> diff = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational gap = xs[i] - xs[i - level];
      if (sgn(gap) == 0) throw DomainError("interpolation nodes must be distinct");
      diff[i] = (diff[i] - diff[i - 1]) / gap;
    }
  }
  UniPoly result({diff[n - 1]});
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * UniPoly({Rational(-xs[i]), Rational(1)}) + UniPoly({diff[i]});
  }
  return result;
}

}  // namespace fanalg::poly
