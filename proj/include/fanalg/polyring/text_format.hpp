#pragma once

#include <string>
#include <string_view>

#include "fanalg/polyring/polynomial.hpp"

namespace fanalg::poly {

// Text form: terms joined by + and -, coefficients as integers or n/d,
// variables by table name, * for products, ^ for powers. Whitespace is
// ignored. Example: "p12*p34 - p13*p24".
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const TablePtr& table, F field = F());

// Inverse of parse_polynomial: parse(format(f)) == f.
template <class F>
std::string format_polynomial(const Polynomial<F>& f);

}  // namespace fanalg::poly
