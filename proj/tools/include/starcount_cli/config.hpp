#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace starcount::cli {

// Everything that determines the output of a run. Execution-only settings
// (worker count, output path) live in ExecOptions and never change results.
struct RunConfig {
  std::string command = "analyze";  // analyze | simulate | sweep | oracle | shapes
  std::string preset;               // informational once resolved
  std::uint64_t n = 1000;
  double p = 0.5;
  std::string h = "clique:2";
  int d = 6;
  std::string statistic = "star:1";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::uint64_t work_limit = 1000000000ULL;
  double c_edge = 1.0;
  double eps_min = 0.05;
  double tau = 10.0;
  double separating_ratio = 5.0;
  bool freeze_h = false;
  std::uint64_t h_seed = 0;
  std::string format = "report";  // report | csv
  std::string sweep_family = "pds";  // pds | pbc | clique
  std::string sweep_n = "10^6";
  std::string sweep_alpha = "0";
  std::string sweep_beta = "0:1:0.01";
  std::string sweep_gamma = "0";
  std::uint64_t sweep_mc_trials = 0;
  std::string check = "battery";  // battery | pattern-count | aut | double-counting | star-formula | total-vs-brute | second-moment
  std::string s1 = "star:1";
  std::string s2 = "star:1";
  std::string shape = "star:2";
  std::uint64_t oracle_instances = 20;
  int max_edges = 3;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct ExecOptions {
  int workers = 1;
  std::string output;  // empty: stdout
};

// Error in a flag, config file or config value. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat key=value lines in a fixed key order. Doubles use %.17g so the text round-trips.
std::string emit_config(const RunConfig& config);

// Accepts plain key=value lines, "#% key=value" header lines of a CSV output, or a
// JSON report carrying a "config" object. Unset keys keep their defaults.
RunConfig parse_config(std::string_view text);
RunConfig load_config_file(const std::string& path);

// Sets one field from its text form; throws ConfigError for unknown keys or bad values.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value);

// Non-negative integer counts: "1000", "10^6", "2^10", "1e6", "1.5e3".
std::uint64_t parse_count(std::string_view text);

double parse_real(std::string_view text);

// "lo:hi:step" (inclusive, values lo + i*step) or a comma-separated list.
std::vector<double> parse_axis(std::string_view text);
std::vector<std::uint64_t> parse_count_list(std::string_view text);

// Default work limit: STARCOUNT_WORK_LIMIT when set, otherwise 10^9.
std::uint64_t default_work_limit();

struct PresetParams {
  std::string name;
  std::uint64_t k = 0;
  double q = 1.0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  double d = 0.0;  // independent-set: p = 1 - d/n
  double gamma = 0.0;
  double c = 3.0;  // counterexample-trace: k = round(C sqrt n)
  int l = 4;
};

// Fills n/p/h/statistic (and preset) from an application preset. Fields the caller
// set explicitly are applied afterwards and win.
void apply_preset(RunConfig& config, const PresetParams& preset);

}  // namespace starcount::cli
