#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fanalg/groebner/groebner.hpp"

#include "json.hpp"

namespace fanalg::cli {

inline constexpr const char* kToolName = "fanalg";
inline constexpr const char* kToolVersion = "0.1.0";

// Inclusive integer range; lo == hi == 0 means unset.
struct Range {
  int lo = 0;
  int hi = 0;

  bool set() const { return lo != 0 || hi != 0; }
  bool single() const { return lo == hi; }
  friend bool operator==(const Range&, const Range&) = default;
};

// "5" or "3..9". Throws DomainError.
Range parse_range(const std::string& text);
std::string to_string(const Range& range);

// auto: symbolic where affordable, evaluable otherwise.
enum class Mode { automatic, exact, floating };
std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct RunConfig {
  std::string command;
  Range p;
  Range m;
  std::uint64_t seed = 1;
  std::uint64_t fixture_seed = 0;  // 0: use seed
  unsigned threads = 0;
  groebner::Limits limits;
  std::uint32_t field = 101;
  double alpha = 0.05;
  std::string data_in;
  std::string psi_in;
  std::string generators_in;
  std::string report_in;
  std::string out;
  std::vector<std::string> kinds;
  Mode mode = Mode::automatic;
  std::size_t n = 500;
  std::size_t reps = 2000;
  std::size_t trials = 5;
  std::size_t points = 100;
  std::size_t bins = 20;
  std::size_t invariant = 0;
  std::string suite;
  bool check_table1 = false;
  bool check_table2 = false;
};

nlohmann::ordered_json to_json(const RunConfig& config);
// Inverse of to_json; missing keys keep their defaults.
RunConfig config_from_json(const nlohmann::ordered_json& j);

// "tetrads,minors" -> {"tetrads", "minors"}; rejects unknown kinds.
std::vector<std::string> parse_kinds(const std::string& text);

}  // namespace fanalg::cli
