#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "fanalg/polyring/field.hpp"
#include "fanalg/polyring/monomial.hpp"
#include "fanalg/polyring/order.hpp"
#include "fanalg/polyring/variable_table.hpp"

namespace fanalg::poly {

// Values for (some of) the variables of a table, indexed by variable.
template <class T>
using Assignment = std::vector<std::optional<T>>;

struct FloatEvaluation {
  double value = 0.0;
  // |value - exact| <= error_bound, from the standard summation bound
  // gamma_{n+d} * sum_k |term_k| with n terms of degree at most d.
  double error_bound = 0.0;
};

// Sparse multivariate polynomial over F (RationalField or PrimeField).
//
// Terms are kept in canonical form: strictly decreasing under graded reverse
// lex with variable 0 largest, no zero coefficients. Equal polynomials
// therefore have identical term vectors. Values are immutable once built;
// every operation returns a new polynomial.
template <class F>
class Polynomial {
 public:
  using Field = F;
  using Coeff = typename F::Element;
  struct Term {
    Monomial monomial;
    Coeff coeff;
  };

  explicit Polynomial(TablePtr table, F field = F());

  static Polynomial constant(TablePtr table, const Coeff& c, F field = F());
  static Polynomial variable(TablePtr table, std::size_t index, F field = F());
  static Polynomial psi(TablePtr table, int i, int j, F field = F());
  static Polynomial monomial(TablePtr table, const Monomial& m, const Coeff& c, F field = F());
  // Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(TablePtr table, std::vector<Term> terms, F field = F());

  const TablePtr& table() const { return table_; }
  const F& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  std::vector<std::size_t> variables() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scaled(const Coeff& c) const;
  Polynomial times(const Monomial& m, const Coeff& c) const;
  Polynomial pow(unsigned exponent) const;

  // Formal partial derivative; throws DomainError for a variable outside the table.
  Polynomial derivative(std::size_t var) const;
  // Quotient when `divisor` divides *this; throws DomainError otherwise.
  Polynomial exact_divide(const Polynomial& divisor) const;

  // Substitutes images[v] for every variable v occurring in the polynomial.
  // All images live in one target ring over the same field.
  Polynomial<F> substitute(const std::vector<std::optional<Polynomial<F>>>& images) const;

  // Exact evaluation in F. Throws DomainError when a variable occurring in
  // the polynomial has no value.
  Coeff evaluate(const Assignment<Coeff>& values) const;
  FloatEvaluation evaluate_float(const Assignment<double>& values) const;

  // Scalar multiple making the leading coefficient under `order` one.
  Polynomial monic(const MonomialOrder& order) const;

  bool operator==(const Polynomial& other) const;

 private:
  void check_compatible(const Polynomial& other) const;

  TablePtr table_;
  F field_;
  std::vector<Term> terms_;
};

using QPoly = Polynomial<RationalField>;
using FpPoly = Polynomial<PrimeField>;

// Coefficients mapped into GF(q); throws if a denominator vanishes mod q.
FpPoly reduce_mod(const QPoly& f, const PrimeField& field);

// Leading term of f under order; f must be nonzero.
template <class F>
typename Polynomial<F>::Term leading_term(const Polynomial<F>& f, const MonomialOrder& order);

// The terms of f sorted decreasingly under order.
template <class F>
std::vector<typename Polynomial<F>::Term> sorted_terms(const Polynomial<F>& f, const MonomialOrder& order);

// Scale by a nonzero rational so the coefficients are coprime integers with a
// positive leading coefficient in canonical order.
QPoly primitive_part(const QPoly& f);

template <class F>
std::ostream& operator<<(std::ostream& os, const Polynomial<F>& f);

}  // namespace fanalg::poly
