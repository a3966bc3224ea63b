#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fanalg/cli/commands.hpp"
#include "fanalg/error.hpp"

using namespace fanalg;
using namespace fanalg::cli;

namespace {

struct Raw {
  std::string p, m, kinds, mode = "auto";
  bool json = false;
  bool threads_given = false;
};

void add_common(CLI::App* sub, RunConfig& c, Raw& raw) {
  sub->add_option("--seed", c.seed, "master seed");
  sub->add_option("--threads", c.threads, "worker threads (0: all cores; env FANALG_THREADS)");
  sub->add_option("--timeout-secs", c.limits.timeout_secs, "Groebner computation timeout (0: none)");
  sub->add_option("--max-degree", c.limits.max_degree, "S-pair degree cap");
  sub->add_option("--max-pairs", c.limits.max_pairs, "S-pair count cap");
  sub->add_option("--out", c.out, "write the JSON report here");
  sub->add_option("--mode", raw.mode, "auto, exact or float");
  sub->add_flag("--json", raw.json, "print the JSON report instead of the table");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, fit tests and degree computations for Gaussian factor analysis models"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  RunConfig c;
  Raw raw;

  auto* generate = app.add_subcommand("generate", "write invariants of F_{p,m}");
  generate->add_option("--p", raw.p, "number of observed variables")->required();
  generate->add_option("--m", raw.m, "number of factors")->required();
  generate->add_option("--kinds", raw.kinds, "comma list of tetrads, minors, kads, resultants");
  generate->add_flag("--check-table2", c.check_table2, "compare generator counts with the published table");

  auto* fit = app.add_subcommand("fit", "test whether data fit an m-factor model");
  fit->add_option("--data", c.data_in, "CSV file, rows are observations")->required();
  fit->add_option("--p", raw.p, "expected number of columns");
  fit->add_option("--m", raw.m, "number of factors")->required();
  fit->add_option("--alpha", c.alpha, "family-wise level");
  fit->add_option("--kinds", raw.kinds, "invariant kinds to test");

  auto* dim = app.add_subcommand("dim", "model dimension and codimension grid");
  dim->add_option("--p", raw.p, "p or range lo..hi (default 3..9)");
  dim->add_option("--m", raw.m, "m or range lo..hi (default 1..5)");
  dim->add_flag("--check-table1", c.check_table1, "compare codimensions with the published table");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", c.suite, "suite name or 'all'")->required();
  verify->add_option("--p", raw.p, "p or range");
  verify->add_option("--m", raw.m, "m or range");
  verify->add_option("--points", c.points, "sample points per (p, m) for vanishing-grid");

  auto* degree = app.add_subcommand("degree", "degree of the model variety by random slicing");
  degree->add_option("--p", raw.p, "number of observed variables")->required();
  degree->add_option("--m", raw.m, "number of factors")->required();
  degree->add_option("--field", c.field, "prime modulus");
  degree->add_option("--trials", c.trials, "number of slices");
  degree->add_option("--generators", c.generators_in, "basis file overriding the built-in generators");
  degree->add_flag("--check-table1", c.check_table1, "compare with the published degree");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo calibration of one standardized invariant");
  simulate->add_option("--p", raw.p, "number of observed variables")->required();
  simulate->add_option("--m", raw.m, "number of factors")->required();
  simulate->add_option("--n", c.n, "sample size");
  simulate->add_option("--reps", c.reps, "replicates");
  simulate->add_option("--fixture-seed", c.fixture_seed, "seed of the model point (default: --seed)");
  simulate->add_option("--psi", c.psi_in, "covariance matrix file instead of a sampled model point");
  simulate->add_option("--invariant", c.invariant, "index into the generated invariants");
  simulate->add_option("--kinds", raw.kinds, "invariant kinds to choose from");
  simulate->add_option("--bins", c.bins, "histogram bins on [-4, 4)");

  auto* replay = app.add_subcommand("replay", "re-run a report's embedded config and compare");
  replay->add_option("--report", c.report_in, "JSON report")->required();

  for (auto* sub : {generate, fit, dim, verify, degree, simulate, replay}) add_common(sub, c, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
    if (!raw.p.empty()) c.p = parse_range(raw.p);
    if (!raw.m.empty()) c.m = parse_range(raw.m);
    if (!raw.kinds.empty()) c.kinds = parse_kinds(raw.kinds);
    c.mode = parse_mode(raw.mode);
    if (app.get_subcommand(c.command)->count("--threads") == 0) {
      if (const char* env = std::getenv("FANALG_THREADS")) c.threads = static_cast<unsigned>(std::stoul(env));
    }
    const auto out = run_command(c);
    if (!c.out.empty()) {
      std::ofstream file(c.out);
      if (!file) throw DomainError("cannot write " + c.out);
      file << out.report.dump(2) << "\n";
    }
    if (raw.json) {
      std::cout << out.report.dump(2) << "\n";
    } else {
      std::cout << out.table;
    }
    return out.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
