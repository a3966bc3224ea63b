#include "fanalg/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "fanalg/error.hpp"

namespace fanalg::cli {

namespace {

int parse_int(const std::string& text, const std::string& whole) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw DomainError("bad range '" + whole + "'");
  return value;
}

const std::vector<std::string>& known_kinds() {
  static const std::vector<std::string> kinds = {"tetrads", "minors", "kads", "resultants"};
  return kinds;
}

}  // namespace

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, text);
  } else {
    r.lo = parse_int(text.substr(0, dots), text);
    r.hi = parse_int(text.substr(dots + 2), text);
  }
  if (r.lo < 1 || r.hi < r.lo) throw DomainError("bad range '" + text + "'");
  return r;
}

std::string to_string(const Range& range) {
  if (!range.set()) return "";
  if (range.single()) return std::to_string(range.lo);
  return std::to_string(range.lo) + ".." + std::to_string(range.hi);
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::automatic:
      return "auto";
    case Mode::exact:
      return "exact";
    case Mode::floating:
      return "float";
  }
  return "auto";
}

Mode parse_mode(const std::string& text) {
  if (text == "auto") return Mode::automatic;
  if (text == "exact") return Mode::exact;
  if (text == "float") return Mode::floating;
  throw DomainError("unknown mode '" + text + "' (expected auto, exact or float)");
}

std::vector<std::string> parse_kinds(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(known_kinds().begin(), known_kinds().end(), item) == known_kinds().end()) {
      throw DomainError("unknown kind '" + item + "' (expected tetrads, minors, kads, resultants)");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  return out;
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["p"] = to_string(c.p);
  j["m"] = to_string(c.m);
  j["seed"] = c.seed;
  j["fixture_seed"] = c.fixture_seed;
  j["threads"] = c.threads;
  j["limits"] = {{"max_degree", c.limits.max_degree},
                 {"max_pairs", c.limits.max_pairs},
                 {"timeout_secs", c.limits.timeout_secs}};
  j["field"] = c.field;
  j["alpha"] = c.alpha;
  j["paths"] = {{"data", c.data_in},
                {"psi", c.psi_in},
                {"generators", c.generators_in},
                {"report", c.report_in},
                {"out", c.out}};
  j["kinds"] = c.kinds;
  j["mode"] = to_string(c.mode);
  j["n"] = c.n;
  j["reps"] = c.reps;
  j["trials"] = c.trials;
  j["points"] = c.points;
  j["bins"] = c.bins;
  j["invariant"] = c.invariant;
  j["suite"] = c.suite;
  j["check_table1"] = c.check_table1;
  j["check_table2"] = c.check_table2;
  return j;
}

RunConfig config_from_json(const nlohmann::ordered_json& j) {
  RunConfig c;
  const auto range = [&](const char* key) {
    const auto text = j.value(key, std::string());
    return text.empty() ? Range{} : parse_range(text);
  };
  c.command = j.value("command", std::string());
  c.p = range("p");
  c.m = range("m");
  c.seed = j.value("seed", c.seed);
  c.fixture_seed = j.value("fixture_seed", c.fixture_seed);
  c.threads = j.value("threads", c.threads);
  if (j.contains("limits")) {
    const auto& l = j.at("limits");
    c.limits.max_degree = l.value("max_degree", c.limits.max_degree);
    c.limits.max_pairs = l.value("max_pairs", c.limits.max_pairs);
    c.limits.timeout_secs = l.value("timeout_secs", c.limits.timeout_secs);
  }
  c.field = j.value("field", c.field);
  c.alpha = j.value("alpha", c.alpha);
  if (j.contains("paths")) {
    const auto& p = j.at("paths");
    c.data_in = p.value("data", std::string());
    c.psi_in = p.value("psi", std::string());
    c.generators_in = p.value("generators", std::string());
    c.report_in = p.value("report", std::string());
    c.out = p.value("out", std::string());
  }
  c.kinds = j.value("kinds", std::vector<std::string>());
  c.mode = parse_mode(j.value("mode", std::string("auto")));
  c.n = j.value("n", c.n);
  c.reps = j.value("reps", c.reps);
  c.trials = j.value("trials", c.trials);
  c.points = j.value("points", c.points);
  c.bins = j.value("bins", c.bins);
  c.invariant = j.value("invariant", c.invariant);
  c.suite = j.value("suite", std::string());
  c.check_table1 = j.value("check_table1", false);
  c.check_table2 = j.value("check_table2", false);
  return c;
}

}  // namespace fanalg::cli
