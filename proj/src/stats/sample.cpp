#include "fanalg/stats/sample.hpp"

#include <cmath>

#include "fanalg/error.hpp"

namespace fanalg::stats {

namespace {

template <class T>
SampleStats<T> covariance(const Matrix<T>& data) {
  const std::size_t n = data.rows(), p = data.cols();
  if (n < 2) throw DomainError("sample covariance needs at least two observations");
  SampleStats<T> out;
  out.n = n;
  out.mean.assign(p, T(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < p; ++c) out.mean[c] += data(r, c);
  }
  for (auto& m : out.mean) m /= static_cast<long>(n);
  out.s = Matrix<T>(p, p, T(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < p; ++i) {
      const T di = data(r, i) - out.mean[i];
      for (std::size_t j = i; j < p; ++j) out.s(i, j) += di * (data(r, j) - out.mean[j]);
    }
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      out.s(i, j) /= static_cast<long>(n - 1);
      out.s(j, i) = out.s(i, j);
    }
    if (out.s(i, i) == 0) out.constant_columns.push_back(i);
  }
  return out;
}

}  // namespace

SampleStats<double> sample_covariance(const Matrix<double>& data) {
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t c = 0; c < data.cols(); ++c) {
      if (!std::isfinite(data(r, c))) throw DomainError("data contain a non-finite value");
    }
  }
  return covariance(data);
}

SampleStats<Rational> sample_covariance(const Matrix<Rational>& data) { return covariance(data); }

Matrix<double> cholesky(const Matrix<double>& psi) {
  const std::size_t p = psi.rows();
  if (!psi.square()) throw DomainError("Cholesky needs a square matrix");
  Matrix<double> l(p, p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    double d = psi(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) throw DomainError("covariance matrix is not positive definite");
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < p; ++i) {
      double v = psi(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / l(j, j);
    }
  }
  return l;
}

Matrix<double> sample_gaussian(const Matrix<double>& chol, std::size_t n, Rng& rng) {
  const std::size_t p = chol.rows();
  Matrix<double> out(n, p, 0.0);
  std::vector<double> z(p);
  for (std::size_t r = 0; r < n; ++r) {
    for (auto& v : z) v = rng.normal();
    for (std::size_t i = 0; i < p; ++i) {
      double v = 0.0;
      for (std::size_t k = 0; k <= i; ++k) v += chol(i, k) * z[k];
      out(r, i) = v;
    }
  }
  return out;
}

}  // namespace fanalg::stats
