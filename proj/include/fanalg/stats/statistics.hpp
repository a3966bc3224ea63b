#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanalg/invariants/record.hpp"
#include "fanalg/stats/sample.hpp"

#include "json.hpp"

namespace fanalg::stats {

// Tetrad s_ik s_jl - s_il s_jk, i.e. det(S_{ij x kl}); 1-based indices.
struct Quad {
  int i = 0, j = 0, k = 0, l = 0;
};

// Exact variance of the bias-corrected sample tetrad for samples of size n
// from N(mu, psi).
Rational wishart_tetrad_variance(const Matrix<Rational>& psi, long n, const Quad& q);
double wishart_tetrad_variance(const Matrix<double>& psi, long n, const Quad& q);

enum class Method { wishart_exact_tetrad, delta_method };
std::string to_string(Method method);

struct TestResult {
  inv::InvariantKind kind = inv::InvariantKind::tetrad;
  std::map<std::string, std::vector<int>> indices;
  double estimate = 0.0;
  double variance = 0.0;
  std::optional<double> z;  // empty when degenerate
  bool gradient_nonzero = false;
  Method method = Method::delta_method;
  std::vector<std::string> flags;

  bool degenerate() const { return !z.has_value(); }
};

// (n-1)/(n-2) times the sample tetrad with the two-term plug-in variance.
TestResult tetrad_statistic(const SampleStats<double>& stats, const Quad& q);

// f(S) with the delta-method variance grad^T Gamma grad / n, where
// Gamma holds the Gaussian covariances s_ik s_jl + s_il s_jk of the
// off-diagonal entries. Evaluable-only records use central differences.
TestResult invariant_z(const SampleStats<double>& stats, const inv::InvariantRecord& record);

// tetrad_statistic for 2x2 determinant records, invariant_z otherwise.
TestResult test_invariant(const SampleStats<double>& stats, const inv::InvariantRecord& record);

enum class Verdict { consistent, rejected, inconclusive };
std::string to_string(Verdict verdict);

struct FitReport {
  double alpha = 0.05;
  std::size_t invariant_count = 0;  // non-degenerate tests
  double critical = 0.0;
  std::vector<TestResult> results;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::size_t> rejected;    // indices into results
  std::vector<std::size_t> degenerate;  // indices into results
};

// Rejects when some |z| exceeds the two-sided Bonferroni critical value
// over the non-degenerate tests.
FitReport bonferroni_fit_test(const SampleStats<double>& stats, const std::vector<inv::InvariantRecord>& invariants,
                              double alpha);

nlohmann::ordered_json to_json(const TestResult& result);
nlohmann::ordered_json to_json(const FitReport& report, int p, int m);

}  // namespace fanalg::stats
