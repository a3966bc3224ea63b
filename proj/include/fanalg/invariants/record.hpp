#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanalg/polyring/matrix.hpp"
#include "fanalg/polyring/polynomial.hpp"

#include "json.hpp"

namespace fanalg::inv {

using poly::Matrix;
using poly::QPoly;
using poly::Rational;
using poly::TablePtr;

enum class InvariantKind { tetrad, offdiag_minor, linear_eliminant, k_ad, resultant };

std::string to_string(InvariantKind kind);

// Index sets of a resultant invariant: D plus row/column sets R_k, C_k for
// k = 0..n, all 1-based.
struct ResultantSelection {
  std::vector<int> d;
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols;
};

// An invariant of F_{p,m} with how it was built. `poly` is empty for
// evaluable-only records (resultants too large to expand); those are
// evaluated through their determinantal formula times `scale`.
//
// Determinant-type records (tetrads, off-diagonal minors) satisfy
// poly == det(Psi_{rows x cols}) exactly; normalization reorders cols
// rather than negating.
struct InvariantRecord {
  InvariantKind kind = InvariantKind::tetrad;
  int p = 0;
  int m = 0;
  std::map<std::string, std::vector<int>> indices;
  int degree = 0;
  std::optional<QPoly> poly;
  std::string normalization;
  std::optional<ResultantSelection> selection;
  Rational scale = 1;

  bool evaluable_only() const { return !poly.has_value(); }
  // 2x2 determinant of Psi (rows, cols), if this record is one.
  bool is_two_by_two() const;
};

// Shared symmetric table for size p, so invariants of one p compare cheaply.
TablePtr psi_table(int p);

// Values of Psi (1-based symmetric p x p) for the symbols of `table`.
poly::Assignment<Rational> assignment_from(const Matrix<Rational>& psi, const poly::VariableTable& table);
poly::Assignment<double> assignment_from(const Matrix<double>& psi, const poly::VariableTable& table);

Rational evaluate(const InvariantRecord& record, const Matrix<Rational>& psi);
double evaluate(const InvariantRecord& record, const Matrix<double>& psi);

nlohmann::ordered_json to_json(const InvariantRecord& record);

}  // namespace fanalg::inv
