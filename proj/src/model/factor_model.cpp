#include "fanalg/model/factor_model.hpp"

#include <sstream>

#include "fanalg/error.hpp"
#include "fanalg/polyring/linalg.hpp"
#include "fanalg/random.hpp"

namespace fanalg::model {

namespace {

long choose2(long n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

template <class T>
FactorPoint<T> assemble(const std::vector<T>& sigma, const Matrix<T>& lambda) {
  const std::size_t p = sigma.size();
  if (lambda.rows() != p) throw DomainError("lambda must have one row per observed variable");
  for (const auto& s : sigma) {
    if (!(s > 0)) throw DomainError("sigma entries must be positive");
  }
  FactorPoint<T> out{sigma, lambda, Matrix<T>(p, p, T(0))};
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      T v(0);
      for (std::size_t r = 0; r < lambda.cols(); ++r) v += lambda(i, r) * lambda(j, r);
      if (i == j) v += sigma[i];
      out.psi(i, j) = v;
      out.psi(j, i) = v;
    }
  }
  return out;
}

// Exact sqrt of a nonnegative rational, if it is a square.
std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

void check(const FactorSpec& spec) {
  if (spec.p < 1 || spec.m < 0) throw DomainError("factor model needs p >= 1 and m >= 0");
}

FactorPoint<Rational> assemble_covariance(const std::vector<Rational>& sigma, const Matrix<Rational>& lambda) {
  return assemble(sigma, lambda);
}

FactorPoint<double> assemble_covariance(const std::vector<double>& sigma, const Matrix<double>& lambda) {
  return assemble(sigma, lambda);
}

FactorPoint<Rational> sample_model_point(const FactorSpec& spec, std::uint64_t seed, const SampleOptions& options) {
  check(spec);
  Rng rng(seed);
  std::vector<Rational> sigma(spec.p);
  for (auto& s : sigma) {
    s = Rational(rng.uniform_int(32, 128), 64);
    s.canonicalize();
  }
  Matrix<Rational> lambda(spec.p, spec.m, Rational(0));
  for (int i = 0; i < spec.p; ++i) {
    for (int r = 0; r < spec.m; ++r) {
      const long k = rng.uniform_int(-128, 128);
      if (options.lower_triangular && r > i) continue;
      lambda(i, r) = Rational(k, 64);
      lambda(i, r).canonicalize();
    }
  }
  return assemble(sigma, lambda);
}

FactorPoint<double> to_double(const FactorPoint<Rational>& point) {
  auto to_d = [](const Rational& q) { return q.get_d(); };
  std::vector<double> sigma;
  for (const auto& s : point.sigma) sigma.push_back(s.get_d());
  return {sigma, point.lambda.map<double>(to_d), point.psi.map<double>(to_d)};
}

FactorPoint<double> sample_model_point_float(const FactorSpec& spec, std::uint64_t seed,
                                             const SampleOptions& options) {
  return to_double(sample_model_point(spec, seed, options));
}

Dimension model_dimension(const FactorSpec& spec) {
  check(spec);
  const long p = spec.p, m = spec.m;
  const long ambient = p * (p + 1) / 2;
  const long dim = std::min(p * (m + 1) - choose2(m), ambient);
  return {dim, ambient - dim};
}

int min_p_positive_codim(int m) {
  if (m < 1) throw DomainError("min_p_positive_codim needs m >= 1");
  int p = m + 1;
  while (choose2(p - m) <= m) ++p;
  return p;
}

Matrix<Rational> build_lambda0(int p, int m) {
  check({p, m});
  Matrix<Rational> lambda(p, m, Rational(0));
  for (int i = 0; i < std::min(p, m); ++i) lambda(i, i) = 1;
  if (p < m + 2) return lambda;
  // Lower-half rows psi_{i,t}, i in m+1..p-1, t > i, in lexicographic order.
  const long count = std::min<long>(m, choose2(p - m));
  long j = 0;
  for (int i = m + 1; i <= p - 1 && j < count; ++i) {
    for (int t = i + 1; t <= p && j < count; ++t, ++j) {
      lambda(i - 1, j) = 1;
      lambda(t - 1, j) = 1;
    }
  }
  return lambda;
}

Matrix<Rational> jacobian(const FactorSpec& spec, const Matrix<Rational>& lambda) {
  check(spec);
  const int p = spec.p, m = spec.m;
  if (static_cast<int>(lambda.rows()) != p || static_cast<int>(lambda.cols()) != m) {
    throw DomainError("lambda must be p x m");
  }
  std::vector<std::pair<int, int>> free;
  for (int s = 0; s < p; ++s) {
    for (int t = 0; t < m; ++t) {
      if (t > s) {
        if (lambda(s, t) != 0) {
          throw DomainError("lambda must be lower triangular (zero above the diagonal); rotate it by an LQ factorization");
        }
        continue;
      }
      free.emplace_back(s, t);
    }
  }
  const std::size_t rows = static_cast<std::size_t>(p) * (p + 1) / 2;
  Matrix<Rational> jac(rows, p + free.size(), Rational(0));
  std::size_t row = 0;
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j, ++row) {
      if (i == j) jac(row, i) = 1;
      for (std::size_t c = 0; c < free.size(); ++c) {
        const auto [s, t] = free[c];
        Rational v(0);
        if (i == s) v += lambda(j, t);
        if (j == s) v += lambda(i, t);
        jac(row, p + c) = v;
      }
    }
  }
  return jac;
}

JacobianReport jacobian_rank(const FactorSpec& spec, const FactorPoint<Rational>& point) {
  JacobianReport report;
  report.rank = static_cast<long>(poly::rank(jacobian(spec, point.lambda)));
  report.expected = model_dimension(spec).dim;
  report.full_rank = report.rank == report.expected;
  return report;
}

Identification one_factor_identify_3x3(const Matrix<Rational>& psi) {
  if (psi.rows() != 3 || psi.cols() != 3) throw DomainError("one-factor identification needs a 3x3 matrix");
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (psi(i, j) != psi(j, i)) throw DomainError("matrix is not symmetric");
    }
    if (psi(i, i) <= 0) throw DomainError("diagonal entries must be positive");
  }
  Identification out;
  const int zeros = (psi(0, 1) == 0) + (psi(0, 2) == 0) + (psi(1, 2) == 0);
  if (zeros == 3) {
    out.ok = true;
    out.abs_lambda_squared.assign(3, Rational(0));
    out.abs_lambda = std::vector<Rational>(3, Rational(0));
    for (int i = 0; i < 3; ++i) out.sigma.push_back(psi(i, i));
    return out;
  }
  if (zeros != 0) {
    // One zero has no one-factor solution; two zeros leave the product of
    // two loadings free.
    out.reason = zeros == 1 ? "unidentifiable pattern" : "underdetermined";
    return out;
  }
  std::vector<Rational> sq(3);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    sq[i] = psi(i, j) * psi(i, k) / psi(j, k);
  }
  out.abs_lambda_squared = sq;
  for (const auto& s : sq) {
    if (s < 0) {
      out.reason = "negative square";
      return out;
    }
  }
  out.ok = true;
  std::vector<Rational> roots;
  for (int i = 0; i < 3; ++i) {
    out.sigma.push_back(psi(i, i) - sq[i]);
    if (auto r = rational_sqrt(sq[i])) roots.push_back(*r);
  }
  if (roots.size() == 3) out.abs_lambda = roots;
  return out;
}

Matrix<Rational> read_matrix(std::istream& is) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<Rational> row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.push_back(poly::parse_rational(tok));
      } catch (const std::exception&) {
        throw ParseError("bad matrix entry '" + tok + "'", lineno, 0);
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged matrix row", lineno, 0);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix", 0, 0);
  Matrix<Rational> out(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) out(r, c) = rows[r][c];
  }
  return out;
}

nlohmann::ordered_json to_json(const FactorSpec& spec, const FactorPoint<Rational>& point) {
  auto matrix = [](const Matrix<Rational>& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(poly::to_string(m(r, c)));
      rows.push_back(row);
    }
    return rows;
  };
  nlohmann::ordered_json sigma = nlohmann::ordered_json::array();
  for (const auto& s : point.sigma) sigma.push_back(poly::to_string(s));
  return {{"p", spec.p}, {"m", spec.m}, {"sigma", sigma}, {"lambda", matrix(point.lambda)}, {"psi", matrix(point.psi)}};
}

}  // namespace fanalg::model
