#include "fanalg/error.hpp"
#include "fanalg/invariants/resultant.hpp"

namespace fanalg::inv {

poly::UniPoly restriction(const InvariantRecord& f, const Matrix<Rational>& base, const Matrix<Rational>& dir) {
  if (base.rows() != dir.rows() || base.cols() != dir.cols()) throw DomainError("line endpoints differ in size");
  const int d = f.degree > 0 ? f.degree : (f.poly ? f.poly->degree() : 0);
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= d; ++k) {
    const Rational t(k);
    Matrix<Rational> point = base;
    for (std::size_t r = 0; r < base.rows(); ++r) {
      for (std::size_t c = 0; c < base.cols(); ++c) point(r, c) = base(r, c) + t * dir(r, c);
    }
    xs.push_back(t);
    ys.push_back(evaluate(f, point));
  }
  poly::UniPoly g = poly::interpolate(xs, ys);
  if (g.is_zero()) throw DomainError("invariant vanishes on the whole line; choose another direction");
  return g;
}

poly::UniPoly gcd_of_restrictions(const InvariantRecord& a, const InvariantRecord& b, const Matrix<Rational>& base,
                                  const Matrix<Rational>& dir) {
  return poly::gcd(restriction(a, base, dir), restriction(b, base, dir));
}

}  // namespace fanalg::inv
