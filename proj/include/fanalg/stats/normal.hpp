#pragma once

#include <cstddef>
#include <vector>

namespace fanalg::stats {

double normal_cdf(double x);
// Inverse of normal_cdf; throws DomainError outside (0, 1).
double normal_quantile(double prob);

// c with P(|Z| <= c) = 1 - alpha / count for standard normal Z.
double bonferroni_critical(double alpha, std::size_t count);

// Kolmogorov-Smirnov distance between the empirical law of `values` and
// the standard normal. 0 for an empty sample.
double ks_distance_normal(std::vector<double> values);

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

}  // namespace fanalg::stats
