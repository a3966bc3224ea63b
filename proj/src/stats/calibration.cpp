#include "fanalg/stats/calibration.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <cmath>
#include <thread>

#include "fanalg/error.hpp"
#include "fanalg/random.hpp"
#include "fanalg/stats/normal.hpp"

namespace fanalg::stats {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

MomentEstimate moments(const std::vector<double>& values) {
  MomentEstimate out;
  const double n = static_cast<double>(values.size());
  if (values.size() < 2) return out;
  CompensatedSum sum;
  for (double v : values) sum.add(v);
  out.mean = sum.value() / n;
  CompensatedSum m2, m4;
  for (double v : values) {
    const double d = (v - out.mean) * (v - out.mean);
    m2.add(d);
    m4.add(d * d);
  }
  out.variance = m2.value() / (n - 1);
  out.mean_se = std::sqrt(out.variance / n);
  // Large-sample standard error of the sample variance.
  const double mu4 = m4.value() / n;
  const double mu2 = m2.value() / n;
  out.variance_se = std::sqrt(std::max(0.0, (mu4 - (n - 3) / (n - 1) * mu2 * mu2) / n));
  return out;
}

CalibrationSummary monte_carlo_null_calibration(const Matrix<double>& psi, std::size_t n, std::size_t reps,
                                                const inv::InvariantRecord& record, std::uint64_t seed,
                                                unsigned threads) {
  if (n < 10) throw DomainError("calibration needs samples of size at least 10");
  if (static_cast<int>(psi.rows()) != record.p) throw DomainError("invariant and covariance sizes differ");
  CalibrationSummary out;
  out.reps = reps;
  if (reps == 0) return out;
  const Matrix<double> chol = cholesky(psi);
  std::vector<std::optional<double>> z(reps);
  parallel_for(reps, threads, [&](std::size_t k) {
    Rng rng(derive_seed(seed, k));
    const auto stats = sample_covariance(sample_gaussian(chol, n, rng));
    z[k] = test_invariant(stats, record).z;
  });
  for (const auto& v : z) {
    if (v) {
      out.z.push_back(*v);
    } else {
      ++out.degenerate;
    }
  }
  const auto m = moments(out.z);
  out.mean = m.mean;
  out.variance = m.variance;
  out.ks_distance = ks_distance_normal(out.z);
  return out;
}

MomentEstimate monte_carlo_tetrad_moments(const Matrix<double>& psi, std::size_t n, std::size_t reps, const Quad& q,
                                          std::uint64_t seed, unsigned threads) {
  const Matrix<double> chol = cholesky(psi);
  std::vector<double> values(reps);
  parallel_for(reps, threads, [&](std::size_t k) {
    Rng rng(derive_seed(seed, k));
    const auto stats = sample_covariance(sample_gaussian(chol, n, rng));
    values[k] = tetrad_statistic(stats, q).estimate;
  });
  return moments(values);
}

}  // namespace fanalg::stats
