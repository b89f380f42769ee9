#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "starcount/models.hpp"
#include "starcount/statistics.hpp"

namespace starcount {

struct MomentEstimate {
  double mean = 0.0;
  double mean_se = 0.0;
  double var = 0.0;
  double var_se = 0.0;     // jackknife; NaN below 3 samples
  double second = 0.0;     // mean of f^2
  double second_se = 0.0;
};

// Mean and variance with jackknife standard errors, plus the raw second moment.
MomentEstimate estimate_moments(const std::vector<double>& values);

struct ArmValues {
  std::vector<double> values;  // statistic values in trial order
  bool aborted = false;        // values holds the prefix before the first failed trial
  std::string abort_reason;
};

struct ArmSamples {
  ArmValues null_arm;
  ArmValues planted_arm;
};

struct MCOptions {
  int trials = 1000;
  std::uint64_t seed = 1;
  int workers = 1;
  double separating_ratio = 5.0;  // declare "separating at this scale" at or above this
};

// Trial i of each arm uses derive_seed(seed, i, arm). Results do not depend on workers.
ArmSamples sample_arms(const PlantedModel& model, const TestStatistic& stat,
                       const MCOptions& options);

struct ErrorRates {
  double type1 = 0.0;  // null samples declared planted
  double type2 = 0.0;  // planted samples declared null
  double threshold = 0.0;
  bool degenerate = false;  // calibration means coincide
};

// Midpoint threshold from the first half of each arm, rates measured on the second half.
// A value is declared planted iff dir * (x - threshold) > 0, dir = sign(mean_p - mean_q).
ErrorRates empirical_error(const std::vector<double>& null_values,
                           const std::vector<double>& planted_values);

struct MCReport {
  std::string statistic;
  std::string model;
  int trials = 0;
  std::uint64_t seed = 0;
  MomentEstimate q;
  MomentEstimate p;
  double separation_ratio = 0.0;
  bool ratio_flagged = false;  // both arms have zero variance; ratio reported as 0
  bool separating = false;
  double separating_ratio = 5.0;
  ErrorRates errors;
  bool partial = false;
  std::string abort_reason;
  int null_completed = 0;
  int planted_completed = 0;
  double wall_seconds = 0.0;  // not serialized
};

MCReport summarize(const ArmSamples& samples, const PlantedModel& model, const TestStatistic& stat,
                   const MCOptions& options);

// sample_arms followed by summarize. trials must be at least 2.
MCReport estimate_separation(const PlantedModel& model, const TestStatistic& stat,
                             const MCOptions& options);

struct RatioEstimate {
  double ratio = 0.0;  // E_P[f^2] / E_P[f]^2
  double se = 0.0;     // delta method
  double mean = 0.0;
  double mean_se = 0.0;
  bool unstable = false;  // |mean| < 4 SE(mean)
};

RatioEstimate second_moment_ratio(const std::vector<double>& planted_values);
RatioEstimate second_moment_ratio(const PlantedModel& model, const TestStatistic& stat,
                                  const MCOptions& options);

struct ConcentrationResult {
  int trials = 0;
  int passes = 0;
  double pass_rate = 0.0;
};

// Fraction of G(k, q) draws whose maximum degree lies in (1 +- delta)(k-1)q and
// whose edge count lies in (1 +- delta) C(k,2) q. Bounds are inclusive.
ConcentrationResult degree_concentration_check(int k, double q, double delta, int trials,
                                               std::uint64_t seed, int workers = 1);

std::string csv_header();
std::string csv_row(const MCReport& report);

}  // namespace starcount
