#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fanalg/invariants/record.hpp"
#include "fanalg/stats/statistics.hpp"

namespace fanalg::stats {

// Runs body(k) for k in [0, count) on up to `threads` workers (0 means the
// hardware concurrency). Callers write results by index, so output does not
// depend on scheduling.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

struct CalibrationSummary {
  std::size_t reps = 0;
  std::size_t degenerate = 0;  // replicates without a z value
  double mean = 0.0;
  double variance = 0.0;
  double ks_distance = 0.0;
  std::vector<double> z;
};

// Simulates `reps` samples of size n from N(0, psi) and summarizes the z
// statistic of `record` (the exact tetrad route for 2x2 determinants).
// Replicate k uses the substream derive_seed(seed, k).
CalibrationSummary monte_carlo_null_calibration(const Matrix<double>& psi, std::size_t n, std::size_t reps,
                                                const inv::InvariantRecord& record, std::uint64_t seed,
                                                unsigned threads = 0);

struct MomentEstimate {
  double mean = 0.0;
  double mean_se = 0.0;
  double variance = 0.0;
  double variance_se = 0.0;
};

// Monte Carlo mean and variance of the bias-corrected sample tetrad, with
// their standard errors.
MomentEstimate monte_carlo_tetrad_moments(const Matrix<double>& psi, std::size_t n, std::size_t reps, const Quad& q,
                                          std::uint64_t seed, unsigned threads = 0);

// Mean, variance and standard errors of a sample.
MomentEstimate moments(const std::vector<double>& values);

}  // namespace fanalg::stats
