#include "starcount_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "starcount/bigint.hpp"
#include "starcount/counting.hpp"
#include "starcount/models.hpp"
#include "starcount/montecarlo.hpp"
#include "starcount/numerics.hpp"
#include "starcount/parallel.hpp"
#include "starcount/patterns.hpp"
#include "starcount/rng.hpp"
#include "starcount/statistics.hpp"
#include "starcount/version.hpp"

namespace starcount::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Margins margins_of(const RunConfig& c) { return Margins{c.c_edge, c.eps_min, c.tau}; }

void check_common(const RunConfig& c) {
  if (!(c.p > 0.0 && c.p < 1.0)) throw ConfigError("p must lie in (0, 1)");
  if (c.d < 1) throw ConfigError("d must be at least 1");
  if (c.format != "report" && c.format != "csv") throw ConfigError("format must be report or csv");
}

int small_n(const RunConfig& c) {
  if (c.n > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw ConfigError("n too large for sampling");
  return static_cast<int>(c.n);
}

std::string csv_header_block(const RunConfig& c) {
  std::string out = std::string("# starcount ") + kVersion + "\n";
  std::istringstream lines(emit_config(c));
  std::string line;
  while (std::getline(lines, line)) out += "#% " + line + "\n";
  return out;
}

std::string wrap_json(const RunConfig& c, Json result) {
  Json config = Json::object();
  std::istringstream lines(emit_config(c));
  std::string line;
  while (std::getline(lines, line)) {
    const auto eq = line.find('=');
    config[line.substr(0, eq)] = line.substr(eq + 1);
  }
  Json j;
  j["starcount_version"] = kVersion;
  j["config"] = std::move(config);
  j["result"] = std::move(result);
  return dump_report(j);
}

std::string join_surrogates(const StarCriterion& s) {
  std::string out;
  for (const auto& t : s.per_t) {
    if (!out.empty()) out += ';';
    out += format_number(t.surrogate);
  }
  return out;
}

Shape shape_from_text(const std::string& text) {
  try {
    return Shape::from_graph(realize_h(parse_hspec(text), 0).without_isolated());
  } catch (const ParseError&) {
    return Shape::from_key_hex(text);
  }
}

// ---- analyze ---------------------------------------------------------------

std::string cmd_analyze(const RunConfig& c) {
  check_common(c);
  const Graph h = realize_h(parse_hspec(c.h), c.h_seed);
  const auto report = analyze(h, c.n, c.p, c.d, margins_of(c), c.work_limit);
  if (c.format == "report") return wrap_json(c, to_json(report));
  SweepCell cell;
  cell.family = "analyze";
  cell.n = c.n;
  cell.alpha = cell.beta = cell.gamma = kNaN;
  cell.q = kNaN;
  cell.p = c.p;
  cell.D = c.d;
  cell.stars = report.stars;
  cell.label = report.regime;
  cell.separating = report.regime.regime != Regime::NoConstantDegreeSeparation;
  cell.mc_ratio = kNaN;
  return csv_header_block(c) + sweep_csv_header() + "\n" + sweep_csv_row(cell) + "\n";
}

// ---- simulate --------------------------------------------------------------

std::string cmd_simulate(const RunConfig& c, const ExecOptions& exec, std::ostream& log,
                         int& exit_code) {
  check_common(c);
  if (c.trials < 2) throw ConfigError("simulate needs at least 2 trials");
  PlantedModel model;
  model.n = small_n(c);
  model.p = c.p;
  model.h = parse_hspec(c.h);
  model.freeze_h = c.freeze_h;
  model.h_seed = c.h_seed;
  model.validate();
  const auto stat = parse_statistic(c.statistic, c.p, c.work_limit);
  MCOptions opt;
  opt.trials = static_cast<int>(std::min<std::uint64_t>(c.trials, std::numeric_limits<int>::max()));
  opt.seed = c.seed;
  opt.workers = exec.workers;
  opt.separating_ratio = c.separating_ratio;
  const auto report = estimate_separation(model, stat, opt);
  log << "simulate: " << report.wall_seconds << " s wall-clock\n";
  if (report.partial) {
    log << "simulate: partial result, " << report.abort_reason << "\n";
    exit_code = kExitBudget;
  }
  if (c.format == "report") return wrap_json(c, to_json(report));
  return csv_header_block(c) + csv_header() + "\n" + csv_row(report) + "\n";
}

// ---- shapes ----------------------------------------------------------------

std::string cmd_shapes(const RunConfig& c) {
  if (c.format != "report" && c.format != "csv") throw ConfigError("format must be report or csv");
  const auto shapes = enumerate_shapes(c.max_edges);
  auto edge_text = [](const Shape& s) {
    std::string out;
    for (auto [u, v] : s.edges()) {
      if (!out.empty()) out += ' ';
      out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
  };
  if (c.format == "csv") {
    std::string out = csv_header_block(c) + "index,edges,vertices,aut,key,edge_list\n";
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const auto& s = shapes[i];
      out += std::to_string(i) + "," + std::to_string(s.edge_count()) + "," +
             std::to_string(s.vertex_count()) + "," + std::to_string(s.aut_count()) + "," +
             s.key_hex() + "," + edge_text(s) + "\n";
    }
    return out;
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const auto& s = shapes[i];
    Json r;
    r["index"] = i;
    r["edges"] = s.edge_count();
    r["vertices"] = s.vertex_count();
    r["aut"] = s.aut_count();
    r["key"] = s.key_hex();
    r["edge_list"] = edge_text(s);
    rows.push_back(std::move(r));
  }
  Json result;
  result["count"] = shapes.size();
  result["shapes"] = std::move(rows);
  return wrap_json(c, std::move(result));
}

// ---- sweep -----------------------------------------------------------------

std::uint64_t round_pow(std::uint64_t n, double e) {
  return static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), e)));
}

SweepCell compute_cell(const RunConfig& c, std::size_t index, std::uint64_t n, double alpha,
                       double beta, double gamma) {
  SweepCell cell;
  cell.family = c.sweep_family;
  cell.n = n;
  cell.alpha = alpha;
  cell.beta = beta;
  cell.gamma = gamma;
  cell.D = c.d;
  cell.mc_ratio = kNaN;
  try {
    cell.p = sweep_p(n, gamma);
    DegreeProfile profile;
    std::string h_text;
    if (c.sweep_family == "pds" || c.sweep_family == "clique") {
      cell.k = std::min(round_pow(n, beta), n);
      cell.q = c.sweep_family == "clique" ? 1.0 : std::pow(static_cast<double>(n), -alpha);
      auto d = static_cast<std::uint64_t>(std::llround((cell.k - 1.0) * cell.q));
      d = std::min(d, cell.k - 1);
      // A regular profile needs k d even; otherwise one vertex drops to d - 1.
      if ((cell.k * d) % 2 == 1)
        profile = DegreeProfile::from_classes({{d, cell.k - 1}, {d - 1, 1}});
      else
        profile = DegreeProfile::from_classes({{d, cell.k}});
      h_text = c.sweep_family == "clique" ? "clique:" + std::to_string(cell.k)
                                          : "er:" + std::to_string(cell.k) + "," + format_number(cell.q);
    } else if (c.sweep_family == "pbc") {
      cell.a = round_pow(n, alpha);
      cell.b = round_pow(n, beta);
      cell.q = kNaN;
      profile = DegreeProfile::from_classes({{cell.b, cell.a}, {cell.a, cell.b}});
      h_text = "biclique:" + std::to_string(cell.a) + "," + std::to_string(cell.b);
    } else {
      throw ConfigError("unknown sweep family '" + c.sweep_family + "'");
    }
    if (c.sweep_family == "pbc") cell.k = cell.a + cell.b;
    if (profile.vertex_count() > n) throw EmbeddingError("H has more vertices than n");
    cell.stars = star_criterion(profile, n, cell.p, c.d);
    cell.label = classify_regime(profile, n, cell.p, c.d, margins_of(c));
    cell.separating = cell.label.regime != Regime::NoConstantDegreeSeparation;
    if (c.sweep_mc_trials > 0) {
      PlantedModel model;
      RunConfig sub = c;
      sub.n = n;
      model.n = small_n(sub);
      model.p = cell.p;
      model.h = parse_hspec(h_text);
      model.freeze_h = c.freeze_h;
      model.h_seed = c.h_seed;
      MCOptions opt;
      opt.trials = static_cast<int>(std::min<std::uint64_t>(c.sweep_mc_trials, 1u << 30));
      opt.seed = derive_seed(c.seed, index, Arm::Null);
      opt.separating_ratio = c.separating_ratio;
      cell.mc_ratio =
          estimate_separation(model, parse_statistic(c.statistic, cell.p, c.work_limit), opt)
              .separation_ratio;
    }
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
  return cell;
}

std::string cmd_sweep(const RunConfig& c, const ExecOptions& exec) {
  check_common(c);
  const auto cells = run_sweep(c, exec.workers);
  if (c.format == "csv") {
    std::string out = csv_header_block(c) + sweep_csv_header() + "\n";
    for (const auto& cell : cells) out += sweep_csv_row(cell) + "\n";
    return out;
  }
  Json rows = Json::array();
  for (const auto& cell : cells) rows.push_back(to_json(cell));
  Json result;
  result["cells"] = std::move(rows);
  return wrap_json(c, std::move(result));
}

// ---- oracle ----------------------------------------------------------------

Graph random_graph(Rng& rng, int n, double p) { return Graph::from_sorted_unique(n, sample_gnp_edges(n, p, rng)); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

OracleCheck exact_check(std::string name, std::string detail, const BigInt& value,
                        const BigInt& expected) {
  OracleCheck ch;
  ch.name = std::move(name);
  ch.detail = std::move(detail);
  ch.value = to_double(value);
  ch.expected = to_double(expected);
  ch.residual = value == expected ? 0.0 : std::abs(ch.value - ch.expected);
  if (value != expected && ch.residual == 0.0) ch.residual = 1.0;
  ch.tolerance = 0.0;
  ch.pass = value == expected;
  return ch;
}

std::vector<OracleCheck> check_double_counting(const RunConfig& c, int workers) {
  const auto shapes = enumerate_shapes(3);
  const auto hosts = static_cast<std::size_t>(c.oracle_instances);
  std::vector<std::vector<OracleCheck>> per_host(hosts);
  parallel_for(hosts, workers, [&](std::size_t i) {
    Rng rng(derive_seed(c.seed, i, Arm::Null));
    const int n = uniform_int(rng, 2, 8);
    const Graph g = random_graph(rng, n, 0.5);
    BigInt worst_lhs = 0, worst_rhs = 0;
    bool ok = true;
    for (const auto& s1 : shapes)
      for (const auto& s2 : shapes) {
        const BigInt lhs = count_labelled_copies(s1, g) * count_labelled_copies(s2, g);
        BigInt rhs = 0;
        for_each_gluing(s1.vertex_count(), s2.vertex_count(), [&](const Gluing& gl) {
          rhs += count_labelled_copies(glued_union_edges(s1, s2, gl), g);
        });
        if (lhs != rhs && ok) {
          ok = false;
          worst_lhs = lhs;
          worst_rhs = rhs;
        }
      }
    per_host[i].push_back(exact_check("double-counting",
                                      "host " + std::to_string(i) + " n=" + std::to_string(n) +
                                          " m=" + std::to_string(g.edge_count()),
                                      worst_rhs, worst_lhs));
  });
  std::vector<OracleCheck> out;
  for (auto& v : per_host) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<OracleCheck> check_star_formula(const RunConfig& c) {
  std::vector<OracleCheck> out;
  for (std::uint64_t i = 0; i < c.oracle_instances; ++i) {
    Rng rng(derive_seed(c.seed, i, Arm::Planted));
    const int n = uniform_int(rng, 1, 30);
    const double q = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const Graph h = random_graph(rng, n, q);
    const auto profile = DegreeProfile::from_graph(h);
    for (int t = 1; t <= 4; ++t)
      out.push_back(exact_check("star-formula",
                                "H " + std::to_string(i) + " t=" + std::to_string(t),
                                star_copy_count(profile, t),
                                count_labelled_copies(star_shape(t), h)));
  }
  return out;
}

std::vector<OracleCheck> check_total_vs_brute(const RunConfig& c, int workers) {
  const auto count = static_cast<std::size_t>(c.oracle_instances);
  std::vector<OracleCheck> out(count);
  const double ps[] = {0.3, 0.5, 0.7};
  parallel_for(count, workers, [&](std::size_t i) {
    Rng rng(splitmix64(c.seed ^ 0x5bd1e995ULL) + i);
    const int n = uniform_int(rng, 3, 7);
    const int nh = uniform_int(rng, 2, n);
    const Graph h = random_graph(rng, nh, 0.5);
    const double p = ps[i % 3];
    const int D = 1 + static_cast<int>(i % 3);
    OracleCheck ch;
    ch.name = "total-vs-brute";
    ch.detail = "n=" + std::to_string(n) + " |V(H)|=" + std::to_string(nh) +
                " m=" + std::to_string(h.edge_count()) + " p=" + format_number(p) +
                " D=" + std::to_string(D);
    ch.value = total_advantage(h, static_cast<std::uint64_t>(n), p, D);
    ch.expected = brute_force_advantage(h, n, p, D);
    const double scale = std::max(std::abs(ch.expected), 1e-300);
    ch.residual = ch.expected == ch.value ? 0.0 : std::abs(ch.value - ch.expected) / scale;
    ch.tolerance = 1e-9;
    ch.pass = ch.residual <= ch.tolerance;
    out[i] = ch;
  });
  return out;
}

OracleCheck check_second_moment(const RunConfig& c, int workers) {
  PlantedModel model;
  model.n = 7;
  model.p = 0.5;
  model.h = hspec::Clique{3};
  const auto stat = parse_statistic("star:2", 0.5);
  MCOptions opt;
  opt.trials = static_cast<int>(std::max<std::uint64_t>(c.trials, 2));
  opt.seed = c.seed;
  opt.workers = workers;
  const auto arms = sample_arms(model, stat, opt);
  const auto m = estimate_moments(arms.planted_arm.values);
  OracleCheck ch;
  ch.name = "second-moment";
  ch.detail = "n=7 H=K3 S=K12 p=0.5 trials=" + std::to_string(opt.trials) + ", 4 SE";
  ch.value = m.second;
  ch.expected = exact_planted_second_moment(star_shape(2), realize_h(model.h, 0), 7, 0.5);
  ch.residual = std::abs(ch.value - ch.expected);
  ch.tolerance = 4.0 * m.second_se;
  ch.pass = ch.residual <= ch.tolerance;
  return ch;
}

std::string cmd_oracle(const RunConfig& c, const ExecOptions& exec, bool& all_pass) {
  if (c.format != "report" && c.format != "csv") throw ConfigError("format must be report or csv");
  const auto checks = run_oracle(c, exec.workers);
  all_pass = std::all_of(checks.begin(), checks.end(), [](const OracleCheck& x) { return x.pass; });
  if (c.format == "csv") {
    std::string out = csv_header_block(c) + "check,detail,value,expected,residual,tolerance,pass\n";
    for (const auto& ch : checks)
      out += ch.name + ",\"" + ch.detail + "\"," + format_number(ch.value) + "," +
             format_number(ch.expected) + "," + format_number(ch.residual) + "," +
             format_number(ch.tolerance) + "," + (ch.pass ? "1" : "0") + "\n";
    return out;
  }
  Json rows = Json::array();
  for (const auto& ch : checks) {
    Json r;
    r["check"] = ch.name;
    r["detail"] = ch.detail;
    r["value"] = std::isfinite(ch.value) ? Json(ch.value) : Json(nullptr);
    r["expected"] = std::isfinite(ch.expected) ? Json(ch.expected) : Json(nullptr);
    r["residual"] = std::isfinite(ch.residual) ? Json(ch.residual) : Json(nullptr);
    r["tolerance"] = ch.tolerance;
    r["pass"] = ch.pass;
    rows.push_back(std::move(r));
  }
  Json result;
  result["all_pass"] = all_pass;
  result["checks"] = std::move(rows);
  return wrap_json(c, std::move(result));
}

}  // namespace

double sweep_p(std::uint64_t n, double gamma) {
  if (gamma == 0.0) return 0.5;
  return 1.0 - std::pow(static_cast<double>(n), -gamma);
}

std::vector<SweepCell> run_sweep(const RunConfig& c, int workers) {
  const auto ns = parse_count_list(c.sweep_n);
  const auto alphas = parse_axis(c.sweep_alpha);
  const auto betas = parse_axis(c.sweep_beta);
  const auto gammas = parse_axis(c.sweep_gamma);
  const std::size_t total = ns.size() * alphas.size() * betas.size() * gammas.size();
  if (total > 10'000'000) throw BudgetError("sweep grid has more than 10^7 cells");
  std::vector<SweepCell> cells(total);
  parallel_for(total, workers, [&](std::size_t idx) {
    std::size_t r = idx;
    const std::size_t ig = r % gammas.size();
    r /= gammas.size();
    const std::size_t ib = r % betas.size();
    r /= betas.size();
    const std::size_t ia = r % alphas.size();
    r /= alphas.size();
    cells[idx] = compute_cell(c, idx, ns[r], alphas[ia], betas[ib], gammas[ig]);
  });
  return cells;
}

std::string sweep_csv_header() {
  return "family,n,alpha,beta,gamma,k,q,a,b,p,D,max_degree,edge_count,edge_threshold,"
         "edge_boundary,eps_hat,t_star,max_surrogate,surrogates,regime,t_suggest,separating,"
         "endpoint_property,mc_ratio,error";
}

std::string sweep_csv_row(const SweepCell& cell) {
  std::ostringstream os;
  const bool ok = cell.error.empty();
  auto num = [&](double x) { os << ',' << format_number(x); };
  os << cell.family << ',' << cell.n;
  num(cell.alpha);
  num(cell.beta);
  num(cell.gamma);
  os << ',' << cell.k;
  num(cell.q);
  os << ',' << cell.a << ',' << cell.b;
  num(cell.p);
  os << ',' << cell.D;
  if (ok) {
    num(cell.label.max_degree);
    num(cell.label.edge_count);
    num(cell.label.edge_threshold);
    num(cell.label.edge_boundary);
    num(cell.label.eps_hat);
    os << ',' << cell.stars.t_star;
    num(cell.label.max_surrogate);
    os << ',' << join_surrogates(cell.stars) << ',' << regime_name(cell.label.regime) << ',';
    if (cell.label.regime == Regime::LargeStarsOptimal) os << cell.label.t_suggest;
    os << ',' << (cell.separating ? 1 : 0) << ',' << (cell.label.endpoint_property ? 1 : 0);
  } else {
    os << ",,,,,,,,,,,,";
  }
  num(cell.mc_ratio);
  std::string err = cell.error;
  std::replace(err.begin(), err.end(), ',', ';');
  std::replace(err.begin(), err.end(), '\n', ' ');
  os << ',' << err;
  return os.str();
}

Json to_json(const SweepCell& cell) {
  auto num = [](double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); };
  Json j;
  j["family"] = cell.family;
  j["n"] = cell.n;
  j["alpha"] = num(cell.alpha);
  j["beta"] = num(cell.beta);
  j["gamma"] = num(cell.gamma);
  j["k"] = cell.k;
  j["q"] = num(cell.q);
  j["a"] = cell.a;
  j["b"] = cell.b;
  j["p"] = num(cell.p);
  j["D"] = cell.D;
  if (cell.error.empty()) {
    j["stars"] = to_json(cell.stars);
    j["regime"] = to_json(cell.label);
    j["separating"] = cell.separating;
  }
  j["mc_ratio"] = num(cell.mc_ratio);
  j["error"] = cell.error;
  return j;
}

std::vector<OracleCheck> run_oracle(const RunConfig& c, int workers) {
  std::vector<OracleCheck> out;
  auto append = [&](std::vector<OracleCheck> v) { out.insert(out.end(), v.begin(), v.end()); };
  if (c.check == "pattern-count") {
    const auto s1 = shape_from_text(c.s1), s2 = shape_from_text(c.s2);
    OracleCheck ch;
    ch.name = "pattern-count";
    ch.detail = c.s1 + " x " + c.s2;
    ch.value = static_cast<double>(enumerate_patterns(s1, s2).size());
    ch.expected = static_cast<double>(pattern_count(s1.vertex_count(), s2.vertex_count()));
    ch.residual = std::abs(ch.value - ch.expected);
    ch.pass = ch.residual == 0.0;
    out.push_back(ch);
  } else if (c.check == "aut") {
    const auto s = shape_from_text(c.shape);
    out.push_back(exact_check("aut", c.shape + " key " + s.key_hex(), BigInt(s.aut_count()),
                              automorphism_count(s)));
  } else if (c.check == "double-counting") {
    append(check_double_counting(c, workers));
  } else if (c.check == "star-formula") {
    append(check_star_formula(c));
  } else if (c.check == "total-vs-brute") {
    append(check_total_vs_brute(c, workers));
  } else if (c.check == "second-moment") {
    out.push_back(check_second_moment(c, workers));
  } else if (c.check == "battery") {
    append(check_total_vs_brute(c, workers));
    append(check_double_counting(c, workers));
    append(check_star_formula(c));
    out.push_back(check_second_moment(c, workers));
  } else {
    throw ConfigError("unknown oracle check '" + c.check + "'");
  }
  return out;
}

CommandResult run_command(const RunConfig& config, const ExecOptions& exec, std::ostream& log) {
  CommandResult r;
  try {
    if (config.command == "analyze") {
      r.output = cmd_analyze(config);
    } else if (config.command == "simulate") {
      r.output = cmd_simulate(config, exec, log, r.exit_code);
    } else if (config.command == "sweep") {
      r.output = cmd_sweep(config, exec);
    } else if (config.command == "oracle") {
      bool all_pass = true;
      r.output = cmd_oracle(config, exec, all_pass);
      if (!all_pass) r.exit_code = kExitOracle;
    } else if (config.command == "shapes") {
      r.output = cmd_shapes(config);
    } else {
      throw ConfigError("unknown command '" + config.command + "'");
    }
  } catch (const BudgetError& e) {
    r = {kExitBudget, "", std::string("budget exceeded: ") + e.what()};
  } catch (const ConfigError& e) {
    r = {kExitConfig, "", std::string("config error: ") + e.what()};
  } catch (const ParseError& e) {
    r = {kExitConfig, "", std::string("parse error: ") + e.what()};
  } catch (const EmbeddingError& e) {
    r = {kExitConfig, "", std::string("error: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    r = {kExitConfig, "", std::string("invalid argument: ") + e.what()};
  } catch (const std::domain_error& e) {
    r = {kExitConfig, "", std::string("error: ") + e.what()};
  }
  if (!r.error.empty()) log << r.error << "\n";
  return r;
}

}  // namespace starcount::cli
