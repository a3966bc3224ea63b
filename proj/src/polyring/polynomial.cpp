#include "fanalg/polyring/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>
#include <unordered_map>

#include "fanalg/error.hpp"

namespace fanalg::poly {

namespace {

template <class Term>
void sort_canonical(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_compare(a.monomial, b.monomial) > 0;
  });
}

}  // namespace

template <class F>
Polynomial<F>::Polynomial(TablePtr table, F field) : table_(std::move(table)), field_(std::move(field)) {
  if (!table_) throw DomainError("polynomial needs a variable table");
}

template <class F>
Polynomial<F> Polynomial<F>::constant(TablePtr table, const Coeff& c, F field) {
  return monomial(std::move(table), Monomial(), c, std::move(field));
}

template <class F>
Polynomial<F> Polynomial<F>::variable(TablePtr table, std::size_t index, F field) {
  if (index >= table->size()) throw DomainError("variable index out of range");
  const Coeff one = field.one();
  return monomial(std::move(table), Monomial::variable(index), one, std::move(field));
}

template <class F>
Polynomial<F> Polynomial<F>::psi(TablePtr table, int i, int j, F field) {
  const std::size_t index = table->psi(i, j);
  return variable(std::move(table), index, std::move(field));
}

template <class F>
Polynomial<F> Polynomial<F>::monomial(TablePtr table, const Monomial& m, const Coeff& c, F field) {
  Polynomial out(std::move(table), std::move(field));
  if constexpr (std::is_same_v<F, RationalField>) {
    if (!out.field_.is_zero(c)) {
      Coeff canonical = c;
      canonical.canonicalize();
      out.terms_.push_back({m, canonical});
      if (m.span() > out.table_->size()) throw DomainError("monomial uses a variable outside the table");
      return out;
    }
  }
  if (m.span() > out.table_->size()) throw DomainError("monomial uses a variable outside the table");
  if (!out.field_.is_zero(c)) out.terms_.push_back({m, c});
  return out;
}

template <class F>
Polynomial<F> Polynomial<F>::from_terms(TablePtr table, std::vector<Term> terms, F field) {
  Polynomial out(std::move(table), std::move(field));
  sort_canonical(terms);
  for (auto& t : terms) {
    if constexpr (std::is_same_v<F, RationalField>) t.coeff.canonicalize();
    if (t.monomial.span() > out.table_->size()) throw DomainError("monomial uses a variable outside the table");
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coeff = out.field_.add(out.terms_.back().coeff, t.coeff);
      if (out.field_.is_zero(out.terms_.back().coeff)) out.terms_.pop_back();
    } else if (!out.field_.is_zero(t.coeff)) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

template <class F>
int Polynomial<F>::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

template <class F>
bool Polynomial<F>::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

template <class F>
std::vector<std::size_t> Polynomial<F>::variables() const {
  std::vector<bool> seen(table_->size(), false);
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.monomial.support()) seen[v] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

template <class F>
void Polynomial<F>::check_compatible(const Polynomial& other) const {
  if (!same_table(table_, other.table_)) throw DomainError("polynomials live in different rings");
  if (!(field_ == other.field_)) {
    throw DomainError("coefficient fields differ: " + field_.name() + " vs " + other.field_.name());
  }
}

template <class F>
Polynomial<F> Polynomial<F>::operator+(const Polynomial& other) const {
  check_compatible(other);
  Polynomial out(table_, field_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    const auto c = grevlex_compare(terms_[i].monomial, other.terms_[j].monomial);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(other.terms_[j++]);
    } else {
      Coeff s = field_.add(terms_[i].coeff, other.terms_[j].coeff);
      if (!field_.is_zero(s)) out.terms_.push_back({terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
  return out;
}

template <class F>
Polynomial<F> Polynomial<F>::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = field_.neg(t.coeff);
  return out;
}

template <class F>
Polynomial<F> Polynomial<F>::operator-(const Polynomial& other) const {
  return *this + (-other);
}

template <class F>
Polynomial<F> Polynomial<F>::operator*(const Polynomial& other) const {
  check_compatible(other);
  if (is_zero() || other.is_zero()) return Polynomial(table_, field_);
  if (terms_.size() == 1) return other.times(terms_[0].monomial, terms_[0].coeff);
  if (other.terms_.size() == 1) return times(other.terms_[0].monomial, other.terms_[0].coeff);
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      const Monomial m = a.monomial * b.monomial;
      auto [it, inserted] = acc.try_emplace(m, field_.mul(a.coeff, b.coeff));
      if (!inserted) it->second = field_.add(it->second, field_.mul(a.coeff, b.coeff));
    }
  }
  Polynomial out(table_, field_);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!field_.is_zero(c)) out.terms_.push_back({m, std::move(c)});
  }
  sort_canonical(out.terms_);
  return out;
}

template <class F>
Polynomial<F> Polynomial<F>::scaled(const Coeff& c) const {
  if (field_.is_zero(c)) return Polynomial(table_, field_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = field_.mul(t.coeff, c);
  return out;
}

template <class F>
Polynomial<F> Polynomial<F>::times(const Monomial& m, const Coeff& c) const {
  if (field_.is_zero(c)) return Polynomial(table_, field_);
  if (m.span() > table_->size()) throw DomainError("monomial uses a variable outside the table");
  Polynomial out(table_, field_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, field_.mul(t.coeff, c)});
  return out;
}

template <class F>
Polynomial<F> Polynomial<F>::pow(unsigned exponent) const {
  Polynomial result = constant(table_, field_.one(), field_);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

template <class F>
Polynomial<F> Polynomial<F>::derivative(std::size_t var) const {
  if (var >= table_->size()) throw DomainError("derivative with respect to an unknown variable");
  Polynomial out(table_, field_);
  for (const auto& t : terms_) {
    const unsigned e = t.monomial[var];
    if (e == 0) continue;
    Coeff c = field_.mul(t.coeff, field_.from_int(static_cast<long>(e)));
    if (!field_.is_zero(c)) out.terms_.push_back({t.monomial.lowered(var), std::move(c)});
  }
  return out;
}

template <class F>
Polynomial<F> Polynomial<F>::exact_divide(const Polynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  const Term& lead = divisor.terms_.front();
  const Coeff lead_inv = field_.inv(lead.coeff);
  std::vector<Term> quotient;
  Polynomial rest = *this;
  while (!rest.is_zero()) {
    const Term& top = rest.terms_.front();
    if (!lead.monomial.divides(top.monomial)) throw DomainError("polynomial division is not exact");
    const Monomial m = top.monomial / lead.monomial;
    const Coeff c = field_.mul(top.coeff, lead_inv);
    quotient.push_back({m, c});
    rest = rest - divisor.times(m, c);
  }
  Polynomial out(table_, field_);
  out.terms_ = std::move(quotient);  // produced in decreasing order
  return out;
}

template <class F>
Polynomial<F> Polynomial<F>::substitute(const std::vector<std::optional<Polynomial<F>>>& images) const {
  TablePtr target;
  for (const auto& img : images) {
    if (!img) continue;
    if (!target) {
      target = img->table();
    } else if (!same_table(target, img->table())) {
      throw DomainError("substitution images live in different rings");
    }
    if (!(img->field() == field_)) throw DomainError("substitution images use a different field");
  }
  if (!target) target = table_;
  // Powers of each image are cached since the same variable recurs often.
  std::vector<std::vector<Polynomial>> powers(table_->size());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    if (v >= images.size() || !images[v]) throw DomainError("no image for variable " + table_->name(v));
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, field_.one(), field_));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[v]);
    return cache[e];
  };
  Polynomial out(target, field_);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff, field_);
    for (const auto& [v, e] : t.monomial.support()) term = term * power(v, e);
    out = out + term;
  }
  return out;
}

template <class F>
typename Polynomial<F>::Coeff Polynomial<F>::evaluate(const Assignment<Coeff>& values) const {
  Coeff total = field_.zero();
  for (const auto& t : terms_) {
    Coeff term = t.coeff;
    for (const auto& [v, e] : t.monomial.support()) {
      if (v >= values.size() || !values[v]) throw DomainError("no value for variable " + table_->name(v));
      for (unsigned k = 0; k < e; ++k) term = field_.mul(term, *values[v]);
    }
    total = field_.add(total, term);
  }
  return total;
}

template <class F>
FloatEvaluation Polynomial<F>::evaluate_float(const Assignment<double>& values) const {
  double total = 0.0;
  double magnitude = 0.0;
  for (const auto& t : terms_) {
    double term = field_.to_rational(t.coeff).get_d();
    for (const auto& [v, e] : t.monomial.support()) {
      if (v >= values.size() || !values[v]) throw DomainError("no value for variable " + table_->name(v));
      for (unsigned k = 0; k < e; ++k) term *= *values[v];
    }
    total += term;
    magnitude += std::abs(term);
  }
  const double steps = static_cast<double>(terms_.size()) + std::max(degree(), 0) + 1;
  const double u = std::numeric_limits<double>::epsilon() / 2;
  const double gamma = steps * u / (1.0 - steps * u);
  return {total, gamma * magnitude};
}

template <class F>
Polynomial<F> Polynomial<F>::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading_term(*this, order).coeff));
}

template <class F>
bool Polynomial<F>::operator==(const Polynomial& other) const {
  if (!same_table(table_, other.table_) || !(field_ == other.field_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial) || terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

FpPoly reduce_mod(const QPoly& f, const PrimeField& field) {
  std::vector<FpPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.monomial, field.from_rational(t.coeff)});
  return FpPoly::from_terms(f.table(), std::move(terms), field);
}

template <class F>
typename Polynomial<F>::Term leading_term(const Polynomial<F>& f, const MonomialOrder& order) {
  if (f.is_zero()) throw DomainError("the zero polynomial has no leading term");
  if (order.kind() == MonomialOrder::Kind::grevlex && order.ranking().front() == 0) {
    bool identity = true;
    for (std::size_t i = 0; i < order.ranking().size(); ++i) identity = identity && order.ranking()[i] == i;
    if (identity) return f.terms().front();
  }
  const auto* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

template <class F>
std::vector<typename Polynomial<F>::Term> sorted_terms(const Polynomial<F>& f, const MonomialOrder& order) {
  auto terms = f.terms();
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.greater(a.monomial, b.monomial); });
  return terms;
}

QPoly primitive_part(const QPoly& f) {
  if (f.is_zero()) return f;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(f.terms().front().coeff) < 0) scale = -scale;
  return f.scaled(scale);
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = f.field().to_rational(t.coeff);
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == 1 && !t.monomial.is_one();
    if (!unit) os << to_string(c);
    bool first_factor = unit;
    for (const auto& [v, e] : t.monomial.support()) {
      if (!first_factor) os << "*";
      first_factor = false;
      os << f.table()->name(v);
      if (e > 1) os << "^" << e;
    }
  }
  return os;
}

template class Polynomial<RationalField>;
template class Polynomial<PrimeField>;
template Polynomial<RationalField>::Term leading_term(const Polynomial<RationalField>&, const MonomialOrder&);
template Polynomial<PrimeField>::Term leading_term(const Polynomial<PrimeField>&, const MonomialOrder&);
template std::vector<Polynomial<RationalField>::Term> sorted_terms(const Polynomial<RationalField>&,
                                                                   const MonomialOrder&);
template std::vector<Polynomial<PrimeField>::Term> sorted_terms(const Polynomial<PrimeField>&, const MonomialOrder&);
template std::ostream& operator<<(std::ostream&, const Polynomial<RationalField>&);
template std::ostream& operator<<(std::ostream&, const Polynomial<PrimeField>&);

}  // namespace fanalg::poly
