#pragma once

#include <cstddef>
#include <vector>

#include "fanalg/polyring/matrix.hpp"
#include "fanalg/polyring/polynomial.hpp"

namespace fanalg::poly {

enum class DetMethod { cofactor, fraction_free };

// Exact determinant of a square matrix of polynomials. Cofactor expansion
// memoizes minors by column subset; fraction-free elimination divides each
// step exactly by the previous pivot.
template <class F>
Polynomial<F> determinant(const Matrix<Polynomial<F>>& m, DetMethod method = DetMethod::cofactor);

// Psi restricted to rows x cols (1-based indices), entries are the symbols.
template <class F>
Matrix<Polynomial<F>> psi_submatrix(const TablePtr& table, const std::vector<int>& rows,
                                    const std::vector<int>& cols, F field = F());

}  // namespace fanalg::poly
