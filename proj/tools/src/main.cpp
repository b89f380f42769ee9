#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "starcount/version.hpp"
#include "starcount_cli/commands.hpp"
#include "starcount_cli/config.hpp"

namespace {

using namespace starcount::cli;

struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

// Flags shared by every subcommand, mapped onto config keys.
const FlagSpec kCommon[] = {
    {"--n", "n", "ambient vertex count (accepts 10^6, 1e6)"},
    {"--p", "p", "edge probability"},
    {"--h", "h", "planted graph: clique:k, star:t, biclique:a,b, cycle:L, matching:k, path:L, er:k,q, file:<path>"},
    {"--d", "d", "degree bound D"},
    {"--stat", "statistic", "statistic: star:t, shape:<hex|file>, clique-count:k, trace:l[,reduced]"},
    {"--trials", "trials", "trials per arm"},
    {"--seed", "seed", "master seed"},
    {"--work-limit", "work_limit", "work limit for exact counting"},
    {"--c-edge", "c_edge", "edge-regime margin"},
    {"--eps-min", "eps_min", "large-star margin"},
    {"--tau", "tau", "minimum surrogate for separation"},
    {"--separating-ratio", "separating_ratio", "separation ratio declared separating"},
    {"--h-seed", "h_seed", "seed for random H"},
    {"--format", "format", "report or csv"},
    {"--family", "sweep_family", "sweep family: pds, pbc, clique"},
    {"--ns", "sweep_n", "sweep n values, comma separated"},
    {"--alpha", "sweep_alpha", "sweep alpha axis: lo:hi:step or list"},
    {"--beta", "sweep_beta", "sweep beta axis"},
    {"--gamma-axis", "sweep_gamma", "sweep gamma axis"},
    {"--mc-trials", "sweep_mc_trials", "Monte Carlo trials per sweep cell (0 = none)"},
    {"--check", "check", "oracle check"},
    {"--s1", "s1", "first shape for pattern-count"},
    {"--s2", "s2", "second shape for pattern-count"},
    {"--shape", "shape", "shape for aut"},
    {"--instances", "oracle_instances", "random instances per oracle check"},
    {"--max-edges", "max_edges", "maximum shape edges"},
};

struct SubcommandState {
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  bool freeze_h = false;
  CLI::Option* freeze_opt = nullptr;
  std::string config_path;
  bool emit_config = false;
  int workers = 1;
  std::string output;
  std::string preset;
  std::map<std::string, std::string> preset_values;
  std::map<std::string, CLI::Option*> preset_options;
};

void add_options(SubcommandState& s) {
  for (const auto& f : kCommon)
    s.options[f.key] = s.app->add_option(f.flag, s.values[f.key], f.help);
  s.freeze_opt = s.app->add_flag("--freeze-h", s.freeze_h, "reuse one draw of a random H");
  s.app->add_option("--config", s.config_path, "config file, or a previous output");
  s.app->add_flag("--emit-config", s.emit_config, "print the resolved config and exit");
  s.app->add_option("--workers", s.workers, "worker threads")->check(CLI::PositiveNumber);
  s.app->add_option("-o,--output", s.output, "output path (default stdout)");
  s.app->add_option("--preset", s.preset,
                    "pds, clique, independent-set, pbc, counterexample-small-p, counterexample-trace");
  const char* preset_flags[][2] = {{"--k", "k"}, {"--q", "q"},         {"--a", "a"},
                                   {"--b", "b"}, {"--dd", "d"},        {"--gamma", "gamma"},
                                   {"--C", "c"}, {"--l", "l"}};
  for (const auto& pf : preset_flags)
    s.preset_options[pf[1]] = s.app->add_option(pf[0], s.preset_values[pf[1]], "preset parameter");
}

PresetParams preset_params(const SubcommandState& s) {
  PresetParams pp;
  pp.name = s.preset;
  auto given = [&](const char* key) { return s.preset_options.at(key)->count() > 0; };
  const auto& v = s.preset_values;
  if (given("k")) pp.k = parse_count(v.at("k"));
  if (given("q")) pp.q = parse_real(v.at("q"));
  if (given("a")) pp.a = parse_count(v.at("a"));
  if (given("b")) pp.b = parse_count(v.at("b"));
  if (given("d")) pp.d = parse_real(v.at("d"));
  if (given("gamma")) pp.gamma = parse_real(v.at("gamma"));
  if (given("c")) pp.c = parse_real(v.at("c"));
  if (given("l")) pp.l = static_cast<int>(parse_count(v.at("l")));
  return pp;
}

int run(const std::string& command, SubcommandState& s) {
  RunConfig config;
  if (!s.config_path.empty()) {
    config = load_config_file(s.config_path);
  } else {
    config.work_limit = default_work_limit();
    // Sweeps label cells by the asymptotic boundary, so they separate at a surrogate of 1.
    if (command == "sweep") config.tau = 1.0;
  }
  config.command = command;
  // n first, since presets derive p and k from it.
  if (s.options.at("n")->count() > 0) set_config_value(config, "n", s.values.at("n"));
  if (!s.preset.empty()) apply_preset(config, preset_params(s));
  for (const auto& f : kCommon)
    if (s.options.at(f.key)->count() > 0) set_config_value(config, f.key, s.values.at(f.key));
  if (s.freeze_opt->count() > 0) config.freeze_h = s.freeze_h;

  if (s.emit_config) {
    std::cout << emit_config(config);
    return kExitOk;
  }
  ExecOptions exec;
  exec.workers = s.workers;
  exec.output = s.output;
  const auto result = run_command(config, exec, std::cerr);
  if (!result.output.empty()) {
    if (exec.output.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(exec.output);
      if (!out) {
        std::cerr << "cannot write " << exec.output << "\n";
        return kExitConfig;
      }
      out << result.output;
    }
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star-count and low-degree detection toolkit"};
  app.set_help_flag("--help", "print help");
  app.set_version_flag("--version", std::string("starcount ") + starcount::kVersion);
  app.require_subcommand(1);
  const char* commands[][2] = {
      {"analyze", "star criterion, total advantage and regime for a planted H"},
      {"simulate", "Monte Carlo separation and test errors for a statistic"},
      {"sweep", "phase-diagram grid over exponent axes"},
      {"oracle", "brute-force and identity checks"},
      {"shapes", "list shapes up to a number of edges"},
  };
  std::map<std::string, SubcommandState> states;
  for (const auto& c : commands) {
    auto& s = states[c[0]];
    s.app = app.add_subcommand(c[0], c[1]);
    s.app->set_help_flag("--help", "print help");
    add_options(s);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  for (auto& [name, s] : states) {
    if (!s.app->parsed()) continue;
    try {
      return run(name, s);
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return kExitConfig;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitConfig;
    }
  }
  return kExitConfig;
}
