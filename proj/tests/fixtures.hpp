#pragma once

#include <string>

#include "fanalg/polyring/matrix.hpp"
#include "fanalg/polyring/polynomial.hpp"
#include "fanalg/polyring/text_format.hpp"
#include "fanalg/random.hpp"

namespace fixtures {

using fanalg::poly::Matrix;
using fanalg::poly::Rational;

// The five-variable pentad written out term by term.
inline const char* kPentad =
    "p12*p13*p24*p35*p45 - p12*p13*p25*p34*p45 - p12*p14*p23*p35*p45 + p12*p14*p25*p34*p35"
    " + p12*p15*p23*p34*p45 - p12*p15*p24*p34*p35 + p13*p14*p23*p25*p45 - p13*p14*p24*p25*p35"
    " - p13*p15*p23*p24*p45 + p13*p15*p24*p25*p34 - p14*p15*p23*p25*p34 + p14*p15*p23*p24*p35";

inline fanalg::poly::QPoly parse(const std::string& s, const fanalg::poly::TablePtr& t) {
  return fanalg::poly::parse_polynomial(s, t, fanalg::poly::RationalField());
}

inline Rational small_rational(fanalg::Rng& rng, long span = 20, long den = 7) {
  Rational q(rng.uniform_int(-span, span), rng.uniform_int(1, den));
  q.canonicalize();
  return q;
}

// Symmetric p x p with independent small rational entries; almost surely
// off every model.
inline Matrix<Rational> random_symmetric(fanalg::Rng& rng, int p) {
  Matrix<Rational> m(p, p, Rational(0));
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j) {
      m(i, j) = small_rational(rng);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

}  // namespace fixtures
