#pragma once

#include <cstdint>
#include <vector>

#include "fanalg/invariants/record.hpp"
#include "fanalg/polyring/univariate.hpp"

namespace fanalg::inv {

// Coefficients of f_0..f_n, n in {1,2,3}: system[j][idx] multiplies
// x_1^{i_1}...x_n^{i_n} where idx = sum_k i_k 2^{n-k} (i_1 is the high bit).
template <class T>
T multilinear_resultant(int n, const std::vector<std::vector<T>>& system);

// (m - n/2 + 1)(n+1)!
long expected_degree(int n, int m);

// Throws DomainError when the index sets do not satisfy the requirements.
void validate(const ResultantSelection& sel, int p, int m);

enum class ResultantMode { symbolic, evaluable };

struct ResultantOptions {
  ResultantMode mode = ResultantMode::symbolic;
  double term_cap = 1e6;
};

// Estimated term count of a dense degree-d form in the off-diagonal symbols.
double estimated_terms(int p, long degree);

// Throws DomainError in symbolic mode when estimated_terms exceeds the cap.
InvariantRecord resultant_invariant(const ResultantSelection& sel, int p, int m, const ResultantOptions& options = {});

// Coefficients a^k_S of f_k = det(Psi_{DR_k x DC_k}) as polynomials in x_j = psi_{d_j d_j}.
std::vector<std::vector<QPoly>> resultant_system(const ResultantSelection& sel, int p);
std::vector<std::vector<Rational>> resultant_system(const ResultantSelection& sel, const Matrix<Rational>& psi);
std::vector<std::vector<double>> resultant_system(const ResultantSelection& sel, const Matrix<double>& psi);

// f restricted to base + t*dir, by exact evaluation at degree+1 points.
// Throws DomainError when the restriction is identically zero.
poly::UniPoly restriction(const InvariantRecord& f, const Matrix<Rational>& base, const Matrix<Rational>& dir);

poly::UniPoly gcd_of_restrictions(const InvariantRecord& a, const InvariantRecord& b, const Matrix<Rational>& base,
                                  const Matrix<Rational>& dir);

}  // namespace fanalg::inv
