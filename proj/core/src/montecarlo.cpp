#include "starcount/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "starcount/numerics.hpp"
#include "starcount/parallel.hpp"
#include "starcount/rng.hpp"

namespace starcount {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double mean_of(const std::vector<double>& x) {
  return x.empty() ? kNaN : pairwise_sum(x) / static_cast<double>(x.size());
}

// Runs one arm. A failing trial stops later trials; all earlier ones still run,
// so the surviving prefix is the same for any worker count.
template <class Eval>
ArmValues run_arm(int trials, int workers, Eval&& eval) {
  const auto count = static_cast<std::size_t>(trials);
  std::vector<double> values(count, kNaN);
  std::vector<std::string> errors(count);
  std::atomic<std::size_t> first_fail{count};
  parallel_for(count, workers, [&](std::size_t i) {
    if (i > first_fail.load()) return;
    try {
      values[i] = eval(i);
    } catch (const std::exception& e) {
      errors[i] = e.what();
      std::size_t cur = first_fail.load();
      while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
      }
    }
  });
  ArmValues out;
  const std::size_t stop = first_fail.load();
  out.values.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(stop));
  if (stop < count) {
    out.aborted = true;
    out.abort_reason = "trial " + std::to_string(stop) + ": " + errors[stop];
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

MomentEstimate estimate_moments(const std::vector<double>& values) {
  MomentEstimate m;
  const auto N = static_cast<double>(values.size());
  if (values.empty()) {
    m.mean = m.mean_se = m.var = m.var_se = m.second = m.second_se = kNaN;
    return m;
  }
  m.mean = mean_of(values);
  std::vector<double> sq(values.size()), dev2(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    sq[i] = values[i] * values[i];
    const double y = values[i] - m.mean;
    dev2[i] = y * y;
  }
  m.second = mean_of(sq);
  if (values.size() < 2) {
    m.var = m.mean_se = m.var_se = m.second_se = kNaN;
    return m;
  }
  const double ss = pairwise_sum(dev2);
  m.var = ss / (N - 1.0);
  m.mean_se = std::sqrt(m.var / N);

  std::vector<double> sq_dev2(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double y = sq[i] - m.second;
    sq_dev2[i] = y * y;
  }
  m.second_se = std::sqrt(pairwise_sum(sq_dev2) / (N - 1.0) / N);

  if (values.size() < 3) {
    m.var_se = kNaN;
    return m;
  }
  // Leave-one-out variances: dropping x_i removes y_i^2 N/(N-1) from the centered sum of squares.
  std::vector<double> loo(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    loo[i] = (ss - dev2[i] * N / (N - 1.0)) / (N - 2.0);
  const double loo_mean = mean_of(loo);
  std::vector<double> loo_dev2(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double y = loo[i] - loo_mean;
    loo_dev2[i] = y * y;
  }
  m.var_se = std::sqrt((N - 1.0) / N * pairwise_sum(loo_dev2));
  return m;
}

ArmSamples sample_arms(const PlantedModel& model, const TestStatistic& stat,
                       const MCOptions& options) {
  if (options.trials < 2) throw std::invalid_argument("at least 2 trials per arm are required");
  model.validate();
  stat.validate();
  ArmSamples s;
  s.null_arm = run_arm(options.trials, options.workers, [&](std::size_t i) {
    return evaluate(stat, sample_null(model, derive_seed(options.seed, i, Arm::Null)));
  });
  s.planted_arm = run_arm(options.trials, options.workers, [&](std::size_t i) {
    return evaluate(stat, sample_planted(model, derive_seed(options.seed, i, Arm::Planted)).graph);
  });
  return s;
}

ErrorRates empirical_error(const std::vector<double>& null_values,
                           const std::vector<double>& planted_values) {
  if (null_values.size() < 2 || planted_values.size() < 2)
    throw std::invalid_argument("empirical error needs at least 2 samples per arm");
  const std::size_t hq = null_values.size() / 2, hp = planted_values.size() / 2;
  const double mq = mean_of({null_values.begin(), null_values.begin() + hq});
  const double mp = mean_of({planted_values.begin(), planted_values.begin() + hp});
  ErrorRates r;
  r.threshold = 0.5 * (mp + mq);
  double dir = 1.0;
  if (mp < mq) dir = -1.0;
  if (mp == mq) r.degenerate = true;
  std::size_t fp = 0, fn = 0;
  for (std::size_t i = hq; i < null_values.size(); ++i)
    if (dir * (null_values[i] - r.threshold) > 0) ++fp;
  for (std::size_t i = hp; i < planted_values.size(); ++i)
    if (!(dir * (planted_values[i] - r.threshold) > 0)) ++fn;
  r.type1 = static_cast<double>(fp) / static_cast<double>(null_values.size() - hq);
  r.type2 = static_cast<double>(fn) / static_cast<double>(planted_values.size() - hp);
  return r;
}

MCReport summarize(const ArmSamples& samples, const PlantedModel& model, const TestStatistic& stat,
                   const MCOptions& options) {
  MCReport r;
  r.statistic = stat.text;
  r.model = model.describe();
  r.trials = options.trials;
  r.seed = options.seed;
  r.separating_ratio = options.separating_ratio;
  r.null_completed = static_cast<int>(samples.null_arm.values.size());
  r.planted_completed = static_cast<int>(samples.planted_arm.values.size());
  r.partial = samples.null_arm.aborted || samples.planted_arm.aborted;
  if (samples.null_arm.aborted) r.abort_reason = "null arm, " + samples.null_arm.abort_reason;
  if (samples.planted_arm.aborted) {
    if (!r.abort_reason.empty()) r.abort_reason += "; ";
    r.abort_reason += "planted arm, " + samples.planted_arm.abort_reason;
  }
  r.q = estimate_moments(samples.null_arm.values);
  r.p = estimate_moments(samples.planted_arm.values);
  const double sd = std::max(std::sqrt(r.q.var), std::sqrt(r.p.var));
  if (!(sd > 0.0)) {
    r.separation_ratio = 0.0;
    r.ratio_flagged = true;
  } else {
    r.separation_ratio = std::abs(r.p.mean - r.q.mean) / sd;
  }
  r.separating = !r.ratio_flagged && r.separation_ratio >= options.separating_ratio;
  if (r.null_completed >= 2 && r.planted_completed >= 2) {
    r.errors = empirical_error(samples.null_arm.values, samples.planted_arm.values);
  } else {
    r.errors.type1 = r.errors.type2 = r.errors.threshold = kNaN;
    r.errors.degenerate = true;
  }
  return r;
}

MCReport estimate_separation(const PlantedModel& model, const TestStatistic& stat,
                             const MCOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  MCReport r = summarize(sample_arms(model, stat, options), model, stat, options);
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

RatioEstimate second_moment_ratio(const std::vector<double>& f) {
  RatioEstimate r;
  const auto m = estimate_moments(f);
  r.mean = m.mean;
  r.mean_se = m.mean_se;
  r.unstable = !(std::abs(m.mean) >= 4.0 * m.mean_se) || m.mean == 0.0;
  if (m.mean == 0.0 || f.size() < 2) {
    r.ratio = r.se = kNaN;
    r.unstable = true;
    return r;
  }
  const double m1 = m.mean, m2 = m.second, N = static_cast<double>(f.size());
  // Sample covariance of (f, f^2) for the delta method on g(m1, m2) = m2 / m1^2.
  std::vector<double> cross(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) cross[i] = (f[i] - m1) * (f[i] * f[i] - m2);
  const double cov = pairwise_sum(cross) / (N - 1.0);
  const double var1 = m.var;
  const double var2 = m.second_se * m.second_se * N;
  const double g1 = -2.0 * m2 / (m1 * m1 * m1), g2 = 1.0 / (m1 * m1);
  r.ratio = m2 / (m1 * m1);
  r.se = std::sqrt(std::max(0.0, (g1 * g1 * var1 + g2 * g2 * var2 + 2.0 * g1 * g2 * cov) / N));
  return r;
}

RatioEstimate second_moment_ratio(const PlantedModel& model, const TestStatistic& stat,
                                  const MCOptions& options) {
  if (options.trials < 2) throw std::invalid_argument("at least 2 trials are required");
  model.validate();
  stat.validate();
  auto arm = run_arm(options.trials, options.workers, [&](std::size_t i) {
    return evaluate(stat, sample_planted(model, derive_seed(options.seed, i, Arm::Planted)).graph);
  });
  if (arm.aborted) throw BudgetError("second moment ratio: " + arm.abort_reason);
  return second_moment_ratio(arm.values);
}

ConcentrationResult degree_concentration_check(int k, double q, double delta, int trials,
                                               std::uint64_t seed, int workers) {
  if (!(k >= 2 && q > 0.0 && q <= 1.0)) throw std::invalid_argument("need k >= 2 and q in (0, 1]");
  if (!(delta > 0.0) || trials < 1) throw std::invalid_argument("need delta > 0 and trials >= 1");
  const double deg_target = (k - 1) * q;
  const double edge_target = 0.5 * k * (k - 1.0) * q;
  std::vector<char> pass(static_cast<std::size_t>(trials), 0);
  parallel_for(pass.size(), workers, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i, Arm::Null));
    std::vector<int> deg(static_cast<std::size_t>(k), 0);
    double edges = 0.0;
    for_each_gnp_edge(k, q, rng, [&](int u, int v) {
      ++deg[u];
      ++deg[v];
      edges += 1.0;
    });
    const double dmax = *std::max_element(deg.begin(), deg.end());
    pass[i] = dmax >= (1.0 - delta) * deg_target && dmax <= (1.0 + delta) * deg_target &&
              edges >= (1.0 - delta) * edge_target && edges <= (1.0 + delta) * edge_target;
  });
  ConcentrationResult r;
  r.trials = trials;
  r.passes = static_cast<int>(std::count(pass.begin(), pass.end(), 1));
  r.pass_rate = static_cast<double>(r.passes) / trials;
  return r;
}

std::string csv_header() {
  return "statistic,model,trials,seed,mean_q,mean_q_se,var_q,var_q_se,mean_p,mean_p_se,var_p,"
         "var_p_se,separation_ratio,ratio_flagged,separating,type1,type2,threshold,"
         "threshold_degenerate,partial";
}

std::string csv_row(const MCReport& r) {
  std::ostringstream os;
  auto num = [&](double x) { os << ',' << format_number(x); };
  auto flag = [&](bool b) { os << ',' << (b ? 1 : 0); };
  os << csv_field(r.statistic) << ',' << csv_field(r.model) << ',' << r.trials << ',' << r.seed;
  num(r.q.mean);
  num(r.q.mean_se);
  num(r.q.var);
  num(r.q.var_se);
  num(r.p.mean);
  num(r.p.mean_se);
  num(r.p.var);
  num(r.p.var_se);
  num(r.separation_ratio);
  flag(r.ratio_flagged);
  flag(r.separating);
  num(r.errors.type1);
  num(r.errors.type2);
  num(r.errors.threshold);
  flag(r.errors.degenerate);
  flag(r.partial);
  return os.str();
}

}  // namespace starcount
