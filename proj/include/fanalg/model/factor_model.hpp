#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "fanalg/polyring/field.hpp"
#include "fanalg/polyring/matrix.hpp"

#include "json.hpp"

namespace fanalg::model {

using poly::Matrix;
using poly::Rational;

struct FactorSpec {
  int p = 1;
  int m = 0;
};

// Throws DomainError unless p >= 1 and m >= 0.
void check(const FactorSpec& spec);

// Psi = diag(sigma) + lambda lambda^T. Matrices are 0-based here; the
// psi symbols are 1-based elsewhere.
template <class T>
struct FactorPoint {
  std::vector<T> sigma;
  Matrix<T> lambda;
  Matrix<T> psi;
};

FactorPoint<Rational> assemble_covariance(const std::vector<Rational>& sigma, const Matrix<Rational>& lambda);
FactorPoint<double> assemble_covariance(const std::vector<double>& sigma, const Matrix<double>& lambda);

struct SampleOptions {
  // Zero lambda above the diagonal (the reduced parametrization).
  bool lower_triangular = false;
};

// sigma_i = k/64 with k uniform in [32, 128]; lambda entries k/64 with k
// uniform in [-128, 128]. Same seed, same point.
FactorPoint<Rational> sample_model_point(const FactorSpec& spec, std::uint64_t seed, const SampleOptions& options = {});
// The rational point rounded to double.
FactorPoint<double> sample_model_point_float(const FactorSpec& spec, std::uint64_t seed,
                                             const SampleOptions& options = {});

FactorPoint<double> to_double(const FactorPoint<Rational>& point);

struct Dimension {
  long dim = 0;
  long codim = 0;
};

Dimension model_dimension(const FactorSpec& spec);

// Smallest p with positive codimension.
int min_p_positive_codim(int m);

// The 0/1 certificate matrix (p x m) whose Jacobian has full rank.
Matrix<Rational> build_lambda0(int p, int m);

struct JacobianReport {
  long rank = 0;
  long expected = 0;
  bool full_rank = false;
};

// Exact rank of the Jacobian of (sigma, lambda) -> Psi with lambda lower
// triangular; columns are sigma then the free lambda entries, rows are the
// upper-triangle psi entries. Throws DomainError if lambda is not lower
// triangular.
JacobianReport jacobian_rank(const FactorSpec& spec, const FactorPoint<Rational>& point);
Matrix<Rational> jacobian(const FactorSpec& spec, const Matrix<Rational>& lambda);

struct Identification {
  bool ok = false;
  std::string reason;  // "negative square", "unidentifiable pattern"
  std::vector<Rational> sigma;
  std::vector<Rational> abs_lambda_squared;
  // Present when every lambda_i^2 is a rational square.
  std::optional<std::vector<Rational>> abs_lambda;
};

// One-factor recovery from a 3x3 covariance: lambda_i^2 = psi_ij psi_ik / psi_jk.
Identification one_factor_identify_3x3(const Matrix<Rational>& psi);

// Whitespace-separated rows of rationals ("3", "-1/2", "0.25"); blank lines
// and '#' comments skipped. Throws ParseError.
Matrix<Rational> read_matrix(std::istream& is);

nlohmann::ordered_json to_json(const FactorSpec& spec, const FactorPoint<Rational>& point);

}  // namespace fanalg::model
