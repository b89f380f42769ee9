#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "starcount/advantage.hpp"
#include "starcount/report.hpp"
#include "starcount_cli/config.hpp"

namespace starcount::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitOracle = 4;

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;  // full text: header plus body; empty on error
  std::string error;
};

// Runs config.command. Output depends only on the config, never on ExecOptions.
// Diagnostics (wall-clock, errors) go to `log`.
CommandResult run_command(const RunConfig& config, const ExecOptions& exec, std::ostream& log);

struct SweepCell {
  std::string family;
  std::uint64_t n = 0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  std::uint64_t k = 0;
  double q = 0.0;
  std::uint64_t a = 0, b = 0;
  double p = 0.5;
  int D = 1;
  StarCriterion stars;
  RegimeLabel label;
  bool separating = false;
  double mc_ratio = 0.0;  // NaN unless the MC column was requested
  std::string error;
};

// p = 1 - n^{-gamma}, with gamma = 0 read as p = 1/2.
double sweep_p(std::uint64_t n, double gamma);

// Cells in row-major order over (n, alpha, beta, gamma).
std::vector<SweepCell> run_sweep(const RunConfig& config, int workers);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepCell& cell);
Json to_json(const SweepCell& cell);

struct OracleCheck {
  std::string name;
  std::string detail;
  double value = 0.0;
  double expected = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::vector<OracleCheck> run_oracle(const RunConfig& config, int workers);

}  // namespace starcount::cli
