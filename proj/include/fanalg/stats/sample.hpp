#pragma once

#include <cstddef>
#include <vector>

#include "fanalg/polyring/field.hpp"
#include "fanalg/polyring/matrix.hpp"
#include "fanalg/random.hpp"

namespace fanalg::stats {

using poly::Matrix;
using poly::Rational;

// n observations, their mean and the 1/(n-1) sample covariance.
template <class T>
struct SampleStats {
  std::size_t n = 0;
  std::vector<T> mean;
  Matrix<T> s;
  // Columns with zero sample variance.
  std::vector<std::size_t> constant_columns;
};

// Rows are observations. Throws DomainError for fewer than two rows.
SampleStats<double> sample_covariance(const Matrix<double>& data);
SampleStats<Rational> sample_covariance(const Matrix<Rational>& data);

// Lower-triangular L with L L^T = psi; throws DomainError unless psi is
// positive definite.
Matrix<double> cholesky(const Matrix<double>& psi);

// n draws from N(0, L L^T), one per row.
Matrix<double> sample_gaussian(const Matrix<double>& chol, std::size_t n, Rng& rng);

}  // namespace fanalg::stats
