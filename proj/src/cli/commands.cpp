#include "fanalg/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "fanalg/cli/csv.hpp"
#include "fanalg/cli/reference.hpp"
#include "fanalg/cli/suites.hpp"
#include "fanalg/error.hpp"
#include "fanalg/groebner/basis_io.hpp"
#include "fanalg/groebner/slicing.hpp"
#include "fanalg/invariants/generators.hpp"
#include "fanalg/invariants/resultant.hpp"
#include "fanalg/model/factor_model.hpp"
#include "fanalg/stats/calibration.hpp"
#include "fanalg/stats/statistics.hpp"

namespace fanalg::cli {

namespace {

using inv::InvariantRecord;
using json = nlohmann::ordered_json;

CommandOutput start(const RunConfig& config) {
  CommandOutput out;
  out.report["tool"] = kToolName;
  out.report["version"] = kToolVersion;
  out.report["config"] = to_json(config);
  return out;
}

int single(const Range& r, const char* name) {
  if (!r.set()) throw DomainError(std::string("--") + name + " is required");
  if (!r.single()) throw DomainError(std::string("--") + name + " must be a single value here");
  return r.lo;
}

std::ifstream open_input(const std::string& path, const char* what) {
  if (path.empty()) throw DomainError(std::string(what) + " path is required");
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return in;
}

std::vector<std::string> default_kinds(int m) {
  if (m == 1) return {"tetrads"};
  return {"kads", "minors"};
}

std::string fixed(double x, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

struct KindResult {
  std::string kind;
  std::vector<InvariantRecord> records;
  std::string skipped;  // reason, empty when generated
};

KindResult generate_kind(const std::string& kind, int p, int m, Mode mode) {
  KindResult r;
  r.kind = kind;
  if (kind == "tetrads") {
    if (m != 1) {
      r.skipped = "tetrads are the generators for m = 1";
    } else {
      r.records = inv::tetrads(p);
    }
  } else if (kind == "minors") {
    if (p < 2 * (m + 1)) {
      r.skipped = "p < 2(m+1): no off-diagonal (m+1)-minors";
    } else {
      r.records = inv::off_diagonal_minors(p, m);
    }
  } else if (kind == "kads") {
    if (p < 2 * m + 1) {
      r.skipped = "p < 2m+1: no linear eliminants";
    } else {
      r.records = inv::k_ads(p, m);
    }
  } else if (kind == "resultants") {
    const auto selections = embedded_resultant_selections(p, m);
    if (selections.empty()) {
      r.skipped = "no built-in resultant index sets for this (p, m)";
      return r;
    }
    for (const auto& sel : selections) {
      if (mode == Mode::floating) {
        r.records.push_back(inv::resultant_invariant(sel, p, m, {inv::ResultantMode::evaluable}));
        continue;
      }
      try {
        r.records.push_back(inv::resultant_invariant(sel, p, m));
      } catch (const DomainError& e) {
        if (mode == Mode::exact) {
          r.records.clear();
          r.skipped = e.what();
          return r;
        }
        r.records.push_back(inv::resultant_invariant(sel, p, m, {inv::ResultantMode::evaluable}));
      }
    }
  } else {
    throw DomainError("unknown kind '" + kind + "'");
  }
  return r;
}

std::vector<InvariantRecord> collect(const std::vector<KindResult>& kinds) {
  std::vector<InvariantRecord> out;
  for (const auto& k : kinds) out.insert(out.end(), k.records.begin(), k.records.end());
  return out;
}

std::vector<KindResult> generate_all(const RunConfig& config, int p, int m) {
  const auto kinds = config.kinds.empty() ? default_kinds(m) : config.kinds;
  std::vector<KindResult> out;
  for (const auto& k : kinds) out.push_back(generate_kind(k, p, m, config.mode));
  return out;
}

std::vector<poly::QPoly> polys_of(const std::vector<InvariantRecord>& records) {
  std::vector<poly::QPoly> out;
  for (const auto& r : records) {
    if (r.poly) out.push_back(*r.poly);
  }
  return out;
}

// Published generator counts against what the kinds produce. Minors and
// tetrads are the lowest-degree generators, so the span rank is exactly
// the minimal generator count. Pentads are compared by distinct count;
// septads by span rank only where no lower-degree generators exist.
json compare_table2(const std::vector<KindResult>& kinds, int p, int m, bool& all_match) {
  json rows = json::array();
  const auto published = published_generator_counts(p);
  for (const auto& k : kinds) {
    json row = {{"kind", k.kind}};
    std::optional<long> expected;
    std::string measure;
    long computed = 0;
    if (published && k.kind == "tetrads" && m == 1) {
      expected = published->tetrads;
      measure = "span rank";
      computed = static_cast<long>(inv::span_rank(polys_of(k.records)));
    } else if (published && k.kind == "minors" && (m == 2 || m == 3)) {
      expected = m == 2 ? published->minors_m2 : published->minors_m3;
      measure = "span rank";
      computed = static_cast<long>(inv::span_rank(polys_of(k.records)));
    } else if (published && k.kind == "kads" && m == 2) {
      expected = published->pentads;
      measure = "distinct count";
      computed = static_cast<long>(k.records.size());
    } else if (published && k.kind == "kads" && m == 3 && published->minors_m3 == 0) {
      expected = published->septads;
      measure = "span rank of all septads";
      std::vector<poly::QPoly> all;
      for (const auto& c : inv::all_k_ad_choices(p, m)) {
        auto f = inv::linear_eliminant_poly(c, p, m);
        if (!f.is_zero()) all.push_back(std::move(f));
      }
      computed = static_cast<long>(inv::span_rank(all));
    }
    if (!expected || *expected < 0) {
      row["compared"] = false;
      row["reason"] = "no published count for this kind at (p, m)";
    } else {
      const bool match = computed == *expected;
      all_match = all_match && match;
      row["compared"] = true;
      row["measure"] = measure;
      row["published"] = *expected;
      row["computed"] = computed;
      row["match"] = match;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

CommandOutput cmd_generate(const RunConfig& config) {
  auto out = start(config);
  const int p = single(config.p, "p");
  const int m = single(config.m, "m");
  model::check({p, m});
  if (m < 1) throw DomainError("--m must be at least 1");
  const auto kinds = generate_all(config, p, m);
  json result;
  json counts = json::object();
  json skipped = json::array();
  json records = json::array();
  std::ostringstream table;
  table << "kind        count  note\n";
  for (const auto& k : kinds) {
    counts[k.kind] = k.records.size();
    if (!k.skipped.empty()) skipped.push_back({{"kind", k.kind}, {"reason", k.skipped}});
    for (const auto& r : k.records) records.push_back(inv::to_json(r));
    table << std::left << std::setw(12) << k.kind << std::right << std::setw(5) << k.records.size() << "  "
          << (k.skipped.empty() ? "" : "skipped: " + k.skipped) << "\n";
  }
  const auto dim = model::model_dimension({p, m});
  result["p"] = p;
  result["m"] = m;
  result["codim"] = dim.codim;
  result["total"] = records.size();
  result["counts"] = counts;
  result["skipped"] = skipped;
  if (dim.codim == 0) {
    const std::string note = "I_{" + std::to_string(p) + "," + std::to_string(m) + "} = 0";
    result["note"] = note;
    table << note << ": the model fills the space of covariance matrices\n";
  }
  if (config.check_table2) {
    bool match = true;
    result["table2"] = compare_table2(kinds, p, m, match);
    result["table2_match"] = match;
    for (const auto& row : result["table2"]) {
      if (!row["compared"].get<bool>()) continue;
      table << "published " << row["kind"].get<std::string>() << " " << row["published"].get<long>() << ", "
            << row["measure"].get<std::string>() << " " << row["computed"].get<long>() << ": "
            << (row["match"].get<bool>() ? "match" : "MISMATCH") << "\n";
    }
    if (!match) out.exit_code = kExitRejected;
  }
  result["invariants"] = records;
  out.report["result"] = result;
  out.table = table.str();
  return out;
}

CommandOutput cmd_fit(const RunConfig& config) {
  auto out = start(config);
  const int m = single(config.m, "m");
  auto in = open_input(config.data_in, "--data");
  const auto data = read_csv(in);
  const int p = static_cast<int>(data.rows.cols());
  if (config.p.set() && (!config.p.single() || config.p.lo != p)) {
    throw DomainError("data has " + std::to_string(p) + " columns but --p is " + to_string(config.p));
  }
  if (data.rows.rows() < 3) throw DomainError("N ≥ 3 required");
  model::check({p, m});
  const auto stats = stats::sample_covariance(data.rows);
  const auto invariants = collect(generate_all(config, p, m));
  if (invariants.empty()) {
    throw DomainError("no invariants to test for p=" + std::to_string(p) + ", m=" + std::to_string(m));
  }
  const auto fit = stats::bonferroni_fit_test(stats, invariants, config.alpha);
  json result = stats::to_json(fit, p, m);
  result["n"] = data.rows.rows();
  result["header"] = data.header;
  out.report["result"] = result;
  switch (fit.verdict) {
    case stats::Verdict::consistent:
      out.exit_code = kExitOk;
      break;
    case stats::Verdict::rejected:
      out.exit_code = kExitRejected;
      break;
    case stats::Verdict::inconclusive:
      out.exit_code = kExitInconclusive;
      break;
  }
  std::ostringstream table;
  table << "N=" << data.rows.rows() << " p=" << p << " m=" << m << " alpha=" << config.alpha << "\n";
  table << fit.results.size() << " invariants, " << fit.invariant_count << " non-degenerate, critical |z| "
        << fixed(fit.critical) << "\n";
  const std::size_t shown = std::min<std::size_t>(fit.results.size(), 25);
  table << "kind            estimate          z  flags\n";
  for (std::size_t k = 0; k < shown; ++k) {
    const auto& r = fit.results[k];
    std::string flags;
    for (const auto& f : r.flags) flags += (flags.empty() ? "" : ",") + f;
    table << std::left << std::setw(14) << inv::to_string(r.kind) << std::right << std::setw(12)
          << std::setprecision(5) << r.estimate << std::setw(11) << (r.z ? fixed(*r.z, 3) : std::string("-")) << "  "
          << flags << "\n";
  }
  if (shown < fit.results.size()) table << "(" << fit.results.size() - shown << " more in the JSON report)\n";
  table << "verdict: " << stats::to_string(fit.verdict) << " (" << fit.rejected.size() << " rejected)\n";
  out.table = table.str();
  return out;
}

CommandOutput cmd_dim(const RunConfig& config) {
  auto out = start(config);
  const Range pr = config.p.set() ? config.p : Range{3, 9};
  const Range mr = config.m.set() ? config.m : Range{1, 5};
  json rows = json::array();
  bool all_match = true;
  std::ostringstream table;
  table << "dim/codim by p (rows) and m (columns)";
  if (config.check_table1) table << "; * marks a codimension differing from the published table";
  table << "\n   p";
  for (int m = mr.lo; m <= mr.hi; ++m) table << std::setw(10) << ("m=" + std::to_string(m));
  table << "\n";
  for (int p = pr.lo; p <= pr.hi; ++p) {
    table << std::setw(4) << p;
    for (int m = mr.lo; m <= mr.hi; ++m) {
      const model::FactorSpec spec{p, m};
      model::check(spec);
      const auto d = model::model_dimension(spec);
      const auto lambda0 = model::build_lambda0(p, m);
      const auto point = model::assemble_covariance(std::vector<poly::Rational>(p, poly::Rational(1)), lambda0);
      const auto jac = model::jacobian_rank(spec, point);
      json row = {{"p", p},
                  {"m", m},
                  {"dim", d.dim},
                  {"codim", d.codim},
                  {"jacobian_rank", jac.rank},
                  {"jacobian_full_rank", jac.full_rank}};
      std::string mark;
      if (config.check_table1) {
        const auto published = published_codim_degree(p, m);
        if (published) {
          const bool match = published->codim == d.codim;
          row["published_codim"] = published->codim;
          if (published->degree > 0) {
            row["published_degree"] = published->degree;
          } else {
            row["published_degree"] = nullptr;
          }
          row["match"] = match;
          all_match = all_match && match;
          if (!match) mark = "*";
        } else {
          row["match"] = nullptr;
          row["note"] = "not tabulated";
        }
      }
      if (!jac.full_rank) mark += "!";
      rows.push_back(row);
      table << std::setw(10) << (std::to_string(d.dim) + "/" + std::to_string(d.codim) + mark);
    }
    table << "\n";
  }
  json result = {{"grid", rows}};
  if (config.check_table1) {
    result["table1_match"] = all_match;
    table << (all_match ? "all codimensions match the published table\n" : "codimension MISMATCH\n");
    if (!all_match) out.exit_code = kExitRejected;
  }
  out.report["result"] = result;
  out.table = table.str();
  return out;
}

CommandOutput cmd_verify(const RunConfig& config) {
  auto out = start(config);
  if (config.suite.empty()) throw DomainError("--suite is required");
  std::vector<std::string> names = {config.suite};
  if (config.suite == "all") names = suite_names();
  json suites = json::array();
  std::ostringstream table;
  int code = kExitOk;
  for (const auto& name : names) {
    const auto report = run_suite(name, config);
    suites.push_back({{"suite", report.name}, {"status", to_string(report.status)}, {"details", report.details}});
    table << report.name << ": " << to_string(report.status) << "\n";
    for (const auto& line : report.lines) table << "  " << line << "\n";
    if (report.status == SuiteStatus::fail) code = kExitRejected;
    if (report.status == SuiteStatus::partial && code == kExitOk) code = kExitInconclusive;
  }
  out.report["result"] = {{"suites", suites}};
  out.exit_code = code;
  out.table = table.str();
  return out;
}

CommandOutput cmd_degree(const RunConfig& config) {
  auto out = start(config);
  const int p = single(config.p, "p");
  const int m = single(config.m, "m");
  model::check({p, m});
  const auto dim = model::model_dimension({p, m});
  if (dim.codim == 0) throw DomainError("codimension 0: the model fills the space, degree 1");
  std::vector<poly::QPoly> generators;
  std::string source;
  if (!config.generators_in.empty()) {
    auto in = open_input(config.generators_in, "--generators");
    generators = groebner::read_basis(in, inv::psi_table(p)).generators;
    source = "file";
  } else if (m == 1) {
    generators = polys_of(inv::tetrads(p));
    source = "tetrads";
  } else if (m == 2) {
    generators = polys_of(inv::k_ads(p, m));
    const auto minors = polys_of(inv::off_diagonal_minors(p, m));
    generators.insert(generators.end(), minors.begin(), minors.end());
    source = p == 5 ? "pentad" : "minors and pentads (generate the ideal conjecturally)";
  } else {
    throw DomainError("no built-in generating set for m >= 3; pass --generators");
  }
  const groebner::SliceSpec spec{static_cast<std::size_t>(dim.codim), config.field, config.seed};
  const auto slices = groebner::degree_by_slicing(generators, spec, config.trials, config.limits);
  json trials = json::array();
  std::ostringstream table;
  table << "p=" << p << " m=" << m << " codim " << dim.codim << " generators " << generators.size() << " (" << source
        << ") over GF(" << config.field << ")\n";
  for (const auto& t : slices.trials) {
    json row = {{"seed", t.seed}, {"zero_dimensional", t.zero_dimensional}};
    if (t.zero_dimensional) {
      row["degree"] = t.degree;
    } else {
      row["degree"] = nullptr;
    }
    row["note"] = t.note;
    trials.push_back(row);
    table << "  trial seed " << t.seed << ": "
          << (t.zero_dimensional ? "degree " + std::to_string(t.degree) : std::string("discarded")) << " "
          << t.note << "\n";
  }
  json result = {{"p", p},
                 {"m", m},
                 {"codim", dim.codim},
                 {"field", config.field},
                 {"generators", generators.size()},
                 {"generator_source", source},
                 {"trials", trials},
                 {"discarded", slices.discarded}};
  if (slices.modal_degree) {
    result["modal_degree"] = *slices.modal_degree;
    table << "modal degree " << *slices.modal_degree << "\n";
  } else {
    result["modal_degree"] = nullptr;
    table << "no zero-dimensional slice\n";
    out.exit_code = kExitInconclusive;
  }
  const auto published = published_codim_degree(p, m);
  if (config.check_table1 && published && published->degree > 0 && slices.modal_degree) {
    const bool match = static_cast<long>(*slices.modal_degree) == published->degree;
    result["published_degree"] = published->degree;
    result["match"] = match;
    table << "published degree " << published->degree << ": " << (match ? "match" : "MISMATCH") << "\n";
    if (!match) out.exit_code = kExitRejected;
  }
  out.report["result"] = result;
  out.table = table.str();
  return out;
}

CommandOutput cmd_simulate(const RunConfig& config) {
  auto out = start(config);
  const int p = single(config.p, "p");
  const int m = single(config.m, "m");
  model::check({p, m});
  poly::Matrix<double> psi;
  if (!config.psi_in.empty()) {
    auto in = open_input(config.psi_in, "--psi");
    psi = model::read_matrix(in).map<double>([](const poly::Rational& q) { return q.get_d(); });
    if (psi.rows() != static_cast<std::size_t>(p) || psi.cols() != static_cast<std::size_t>(p)) {
      throw DomainError("--psi must be " + std::to_string(p) + " x " + std::to_string(p));
    }
  } else {
    const std::uint64_t fixture = config.fixture_seed != 0 ? config.fixture_seed : config.seed;
    psi = model::sample_model_point_float({p, m}, fixture).psi;
  }
  stats::cholesky(psi);
  const auto invariants = collect(generate_all(config, p, m));
  if (config.invariant >= invariants.size()) {
    throw DomainError("--invariant " + std::to_string(config.invariant) + " out of range; " +
                      std::to_string(invariants.size()) + " invariants for this (p, m)");
  }
  const auto& record = invariants[config.invariant];
  const auto summary =
      stats::monte_carlo_null_calibration(psi, config.n, config.reps, record, config.seed, config.threads);
  const double lo = -4.0, hi = 4.0;
  const std::size_t bins = std::max<std::size_t>(config.bins, 1);
  std::vector<std::size_t> counts(bins, 0);
  std::size_t below = 0, above = 0;
  for (double z : summary.z) {
    if (z < lo) {
      ++below;
    } else if (z >= hi) {
      ++above;
    } else {
      ++counts[std::min(bins - 1, static_cast<std::size_t>((z - lo) / (hi - lo) * static_cast<double>(bins)))];
    }
  }
  json fixture = json::array();
  for (std::size_t i = 0; i < psi.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < psi.cols(); ++j) row.push_back(psi(i, j));
    fixture.push_back(row);
  }
  json result = {{"invariant", inv::to_json(record)},
                 {"psi", fixture},
                 {"n", config.n},
                 {"reps", summary.reps},
                 {"degenerate", summary.degenerate},
                 {"mean", summary.mean},
                 {"variance", summary.variance},
                 {"ks_distance", summary.ks_distance},
                 {"histogram", {{"lo", lo}, {"hi", hi}, {"counts", counts}, {"below", below}, {"above", above}}}};
  out.report["result"] = result;
  std::ostringstream table;
  table << "invariant " << inv::to_string(record.kind) << " of degree " << record.degree << ", N=" << config.n
        << ", " << summary.reps << " replicates (" << summary.degenerate << " degenerate)\n";
  table << "z mean " << fixed(summary.mean) << ", variance " << fixed(summary.variance) << ", KS distance "
        << fixed(summary.ks_distance) << "\n";
  out.table = table.str();
  return out;
}

CommandOutput cmd_replay(const RunConfig& config) {
  auto out = start(config);
  auto in = open_input(config.report_in, "--report");
  json stored;
  try {
    stored = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report is not JSON: ") + e.what(), 0, 0);
  }
  if (!stored.contains("config")) throw DomainError("report has no embedded config");
  const auto embedded = config_from_json(stored.at("config"));
  if (embedded.command == "replay") throw DomainError("cannot replay a replay report");
  const auto again = run_command(embedded);
  const bool identical = again.report.dump() == stored.dump();
  json differing = json::array();
  if (!identical && stored.contains("result") && again.report.contains("result")) {
    for (const auto& [key, value] : again.report["result"].items()) {
      if (!stored["result"].contains(key) || stored["result"][key] != value) differing.push_back(key);
    }
  }
  out.report["result"] = {{"replayed_command", embedded.command},
                          {"identical", identical},
                          {"replayed_exit_code", again.exit_code},
                          {"differing_keys", differing}};
  out.exit_code = identical ? kExitOk : kExitRejected;
  out.table = std::string("replay of ") + embedded.command + ": " + (identical ? "identical" : "DIFFERS") + "\n";
  return out;
}

CommandOutput run_command(const RunConfig& config) {
  if (config.command == "generate") return cmd_generate(config);
  if (config.command == "fit") return cmd_fit(config);
  if (config.command == "dim") return cmd_dim(config);
  if (config.command == "verify") return cmd_verify(config);
  if (config.command == "degree") return cmd_degree(config);
  if (config.command == "simulate") return cmd_simulate(config);
  if (config.command == "replay") return cmd_replay(config);
  throw DomainError("unknown command '" + config.command + "'");
}

}  // namespace fanalg::cli
