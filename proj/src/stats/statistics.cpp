#include "fanalg/stats/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fanalg/error.hpp"
#include "fanalg/polyring/linalg.hpp"
#include "fanalg/stats/normal.hpp"

namespace fanalg::stats {

namespace {

double det(Matrix<double> m) {
  const std::size_t n = m.rows();
  double d = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(m(r, k)) > std::abs(m(pivot, k))) pivot = r;
    }
    if (m(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      m.swap_rows(pivot, k);
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return d;
}

Rational det(const Matrix<Rational>& m) { return poly::determinant(m); }

template <class T>
Matrix<T> sub(const Matrix<T>& m, std::vector<int> rows, std::vector<int> cols) {
  std::vector<std::size_t> r, c;
  for (int x : rows) r.push_back(static_cast<std::size_t>(x - 1));
  for (int x : cols) c.push_back(static_cast<std::size_t>(x - 1));
  return m.submatrix(r, c);
}

void check_quad(const Quad& q, std::size_t p) {
  const int v[] = {q.i, q.j, q.k, q.l};
  for (int a = 0; a < 4; ++a) {
    if (v[a] < 1 || v[a] > static_cast<int>(p)) throw DomainError("tetrad index out of range");
    for (int b = a + 1; b < 4; ++b) {
      if (v[a] == v[b]) throw DomainError("tetrad indices must be distinct");
    }
  }
}

template <class T>
T wishart(const Matrix<T>& psi, long n, const Quad& q) {
  if (n <= 2) throw DomainError("tetrad variance needs a sample size of at least 3");
  check_quad(q, psi.rows());
  const T big(n + 1), nm1(n - 1), nm2(n - 2);
  const T cross = det(sub(psi, {q.i, q.j}, {q.k, q.l}));
  return big / (nm1 * nm2) * det(sub(psi, {q.i, q.j}, {q.i, q.j})) * det(sub(psi, {q.k, q.l}, {q.k, q.l})) -
         det(sub(psi, {q.i, q.j, q.k, q.l}, {q.i, q.j, q.k, q.l})) / nm2 + T(3) * cross * cross / nm2;
}

double max_abs(const Matrix<double>& m) {
  double out = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out = std::max(out, std::abs(m(r, c)));
  }
  return out;
}

void finish(TestResult& r) {
  if (!r.gradient_nonzero) {
    r.flags.push_back("zero gradient at S");
    return;
  }
  if (!(r.variance > 0.0) || !std::isfinite(r.variance)) {
    r.flags.push_back("nonpositive variance estimate");
    return;
  }
  r.z = r.estimate / std::sqrt(r.variance);
}

}  // namespace

Rational wishart_tetrad_variance(const Matrix<Rational>& psi, long n, const Quad& q) { return wishart(psi, n, q); }
double wishart_tetrad_variance(const Matrix<double>& psi, long n, const Quad& q) { return wishart(psi, n, q); }

std::string to_string(Method method) {
  return method == Method::wishart_exact_tetrad ? "wishart-exact-tetrad" : "delta-method";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::consistent: return "consistent";
    case Verdict::rejected: return "rejected";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

TestResult tetrad_statistic(const SampleStats<double>& stats, const Quad& q) {
  const auto& s = stats.s;
  check_quad(q, s.rows());
  const long n = static_cast<long>(stats.n);
  if (n <= 2) throw DomainError("tetrad statistic needs a sample size of at least 3");
  auto at = [&](int a, int b) { return s(a - 1, b - 1); };
  TestResult r;
  r.kind = inv::InvariantKind::tetrad;
  r.indices = {{"rows", {q.i, q.j}}, {"cols", {q.k, q.l}}};
  r.method = Method::wishart_exact_tetrad;
  r.estimate = static_cast<double>(n - 1) / static_cast<double>(n - 2) *
               (at(q.i, q.k) * at(q.j, q.l) - at(q.i, q.l) * at(q.j, q.k));
  // The cross term vanishes under the model and is dropped.
  r.variance = static_cast<double>(n + 1) / (static_cast<double>(n - 1) * (n - 2)) *
                   det(sub(s, {q.i, q.j}, {q.i, q.j})) * det(sub(s, {q.k, q.l}, {q.k, q.l})) -
               det(sub(s, {q.i, q.j, q.k, q.l}, {q.i, q.j, q.k, q.l})) / static_cast<double>(n - 2);
  r.gradient_nonzero = at(q.i, q.k) != 0 || at(q.j, q.l) != 0 || at(q.i, q.l) != 0 || at(q.j, q.k) != 0;
  finish(r);
  return r;
}

TestResult invariant_z(const SampleStats<double>& stats, const inv::InvariantRecord& record) {
  const auto& s = stats.s;
  const int p = static_cast<int>(s.rows());
  if (record.p != p) throw DomainError("invariant and data have different numbers of variables");
  if (stats.n < 3) throw DomainError("invariant statistic needs a sample size of at least 3");
  TestResult r;
  r.kind = record.kind;
  r.indices = record.indices;
  r.method = Method::delta_method;
  r.estimate = inv::evaluate(record, s);

  // Gradient over the off-diagonal coordinates (a < b), 1-based.
  std::vector<std::pair<int, int>> coords;
  std::vector<double> grad;
  if (!record.evaluable_only()) {
    const auto& f = *record.poly;
    const auto& table = *f.table();
    const auto values = inv::assignment_from(s, table);
    for (std::size_t v : f.variables()) {
      if (!table.is_off_diagonal(v)) continue;
      coords.push_back(table.psi_indices(v));
      grad.push_back(f.derivative(v).evaluate_float(values).value);
    }
  } else {
    const double h = 1e-6 * std::max(max_abs(s), std::numeric_limits<double>::min());
    for (int a = 1; a <= p; ++a) {
      for (int b = a + 1; b <= p; ++b) {
        Matrix<double> plus = s, minus = s;
        plus(a - 1, b - 1) += h;
        plus(b - 1, a - 1) += h;
        minus(a - 1, b - 1) -= h;
        minus(b - 1, a - 1) -= h;
        coords.emplace_back(a, b);
        grad.push_back((inv::evaluate(record, plus) - inv::evaluate(record, minus)) / (2 * h));
      }
    }
  }
  r.gradient_nonzero = std::any_of(grad.begin(), grad.end(), [](double g) { return g != 0.0; });
  auto at = [&](int a, int b) { return s(a - 1, b - 1); };
  CompensatedSum quad;
  for (std::size_t x = 0; x < coords.size(); ++x) {
    for (std::size_t y = 0; y < coords.size(); ++y) {
      const auto [i, j] = coords[x];
      const auto [k, l] = coords[y];
      quad.add(grad[x] * grad[y] * (at(i, k) * at(j, l) + at(i, l) * at(j, k)));
    }
  }
  r.variance = quad.value() / static_cast<double>(stats.n);
  finish(r);
  return r;
}

TestResult test_invariant(const SampleStats<double>& stats, const inv::InvariantRecord& record) {
  if (record.is_two_by_two()) {
    const auto& rows = record.indices.at("rows");
    const auto& cols = record.indices.at("cols");
    TestResult r = tetrad_statistic(stats, {rows[0], rows[1], cols[0], cols[1]});
    r.kind = record.kind;
    r.indices = record.indices;
    return r;
  }
  return invariant_z(stats, record);
}

FitReport bonferroni_fit_test(const SampleStats<double>& stats, const std::vector<inv::InvariantRecord>& invariants,
                              double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  if (invariants.empty()) throw DomainError("fit test needs at least one invariant");
  FitReport report;
  report.alpha = alpha;
  for (const auto& rec : invariants) {
    report.results.push_back(test_invariant(stats, rec));
    if (report.results.back().degenerate()) report.degenerate.push_back(report.results.size() - 1);
  }
  report.invariant_count = report.results.size() - report.degenerate.size();
  if (report.invariant_count == 0) {
    report.verdict = Verdict::inconclusive;
    return report;
  }
  report.critical = bonferroni_critical(alpha, report.invariant_count);
  for (std::size_t k = 0; k < report.results.size(); ++k) {
    const auto& z = report.results[k].z;
    if (z && std::abs(*z) > report.critical) report.rejected.push_back(k);
  }
  report.verdict = report.rejected.empty() ? Verdict::consistent : Verdict::rejected;
  return report;
}

nlohmann::ordered_json to_json(const TestResult& r) {
  nlohmann::ordered_json j;
  j["kind"] = inv::to_string(r.kind);
  j["indices"] = r.indices;
  j["method"] = to_string(r.method);
  j["estimate"] = r.estimate;
  j["variance"] = r.variance;
  j["z"] = r.z ? nlohmann::ordered_json(*r.z) : nlohmann::ordered_json(nullptr);
  j["gradient_nonzero"] = r.gradient_nonzero;
  j["flags"] = r.flags;
  return j;
}

nlohmann::ordered_json to_json(const FitReport& report, int p, int m) {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["m"] = m;
  j["alpha"] = report.alpha;
  j["invariant_count"] = report.invariant_count;
  j["critical"] = report.critical;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& r : report.results) results.push_back(to_json(r));
  j["results"] = results;
  j["verdict"] = to_string(report.verdict);
  j["rejected"] = report.rejected;
  j["degenerate"] = report.degenerate;
  return j;
}

}  // namespace fanalg::stats
