#pragma once

#include <vector>

#include "fanalg/invariants/record.hpp"

namespace fanalg::inv {

// det(Psi_{rows x cols}) over the symbols of `table` (1-based indices).
QPoly psi_determinant(const TablePtr& table, const std::vector<int>& rows, const std::vector<int>& cols);
// Same with every diagonal entry replaced by zero.
QPoly psi0_determinant(const TablePtr& table, const std::vector<int>& rows, const std::vector<int>& cols);

// For i<j<k<l: psi_ij psi_kl - psi_ik psi_jl and psi_il psi_jk - psi_ik psi_jl,
// kept exactly in this form (leading term under circular lex first, +1).
std::vector<InvariantRecord> tetrads(int p);

// One record per unordered pair of disjoint (m+1)-sets. Empty when p < 2(m+1).
std::vector<InvariantRecord> off_diagonal_minors(int p, int m);

struct EliminantChoice {
  int i = 0;
  std::vector<int> r, c, r_bar, c_bar;
};

// det(Psi_{RxC}) det(Psi0_{(i,Rb)x(i,Cb)}) - det(Psi_{RbxCb}) det(Psi0_{(i,R)x(i,C)}),
// unnormalized. Throws DomainError on bad index sets.
QPoly linear_eliminant_poly(const EliminantChoice& choice, int p, int m);
// The same element written through full (m+1)-minors of Psi, which
// certifies membership in the minor ideal.
QPoly eliminant_minor_combination(const EliminantChoice& choice, int p, int m);
// Normalized record; kind k_ad when R u C == Rb u Cb.
InvariantRecord linear_eliminant(const EliminantChoice& choice, int p, int m);

// One representative per i and 2m-set R u C, zero results dropped and
// duplicates up to sign removed.
std::vector<InvariantRecord> k_ads(int p, int m);

// Every admissible choice with R u C == Rb u Cb (up to the symmetries that
// cannot change the polynomial), for span computations.
std::vector<EliminantChoice> all_k_ad_choices(int p, int m);

// Every k x k minor of the symmetric p x p matrix, one per unordered
// {rows, cols} pair of k-sets.
std::vector<QPoly> all_minors(int p, int k);

// Table indices of psi_11, ..., psi_pp.
std::vector<std::size_t> diagonal_symbols(const poly::VariableTable& table);

// Rank of the Q-span of a set of polynomials.
std::size_t span_rank(const std::vector<QPoly>& polys);

// Multiplies f by the scalar making its graded-reverse-lex leading
// coefficient +1; returns that scalar.
Rational normalize_grevlex(QPoly& f);

}  // namespace fanalg::inv
