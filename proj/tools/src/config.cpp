#include "starcount_cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "starcount/numerics.hpp"

namespace starcount::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_bool(std::string_view v) {
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw ConfigError("expected a boolean, got '" + std::string(v) + "'");
}

int parse_int(std::string_view v) {
  const auto x = parse_count(v);
  if (x > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw ConfigError("value out of range: " + std::string(v));
  return static_cast<int>(x);
}

struct Field {
  const char* key;
  std::function<std::string(const RunConfig&)> get;
  std::function<void(RunConfig&, std::string_view)> set;
};

#define STR_FIELD(name) \
  Field{#name, [](const RunConfig& c) { return c.name; }, [](RunConfig& c, std::string_view v) { c.name = std::string(v); }}
#define COUNT_FIELD(name)                                                      \
  Field{#name, [](const RunConfig& c) { return std::to_string(c.name); }, \
        [](RunConfig& c, std::string_view v) { c.name = parse_count(v); }}
#define INT_FIELD(name)                                                        \
  Field{#name, [](const RunConfig& c) { return std::to_string(c.name); }, \
        [](RunConfig& c, std::string_view v) { c.name = parse_int(v); }}
#define REAL_FIELD(name)                                                        \
  Field{#name, [](const RunConfig& c) { return format_number(c.name); }, \
        [](RunConfig& c, std::string_view v) { c.name = parse_real(v); }}
#define BOOL_FIELD(name)                                                                \
  Field{#name, [](const RunConfig& c) { return std::string(c.name ? "true" : "false"); }, \
        [](RunConfig& c, std::string_view v) { c.name = parse_bool(v); }}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      STR_FIELD(command),        STR_FIELD(preset),          COUNT_FIELD(n),
      REAL_FIELD(p),             STR_FIELD(h),               INT_FIELD(d),
      STR_FIELD(statistic),      COUNT_FIELD(trials),        COUNT_FIELD(seed),
      COUNT_FIELD(work_limit),   REAL_FIELD(c_edge),         REAL_FIELD(eps_min),
      REAL_FIELD(tau),           REAL_FIELD(separating_ratio), BOOL_FIELD(freeze_h),
      COUNT_FIELD(h_seed),       STR_FIELD(format),          STR_FIELD(sweep_family),
      STR_FIELD(sweep_n),        STR_FIELD(sweep_alpha),     STR_FIELD(sweep_beta),
      STR_FIELD(sweep_gamma),    COUNT_FIELD(sweep_mc_trials), STR_FIELD(check),
      STR_FIELD(s1),             STR_FIELD(s2),              STR_FIELD(shape),
      COUNT_FIELD(oracle_instances), INT_FIELD(max_edges),
  };
  return table;
}

#undef STR_FIELD
#undef COUNT_FIELD
#undef INT_FIELD
#undef REAL_FIELD
#undef BOOL_FIELD

}  // namespace

std::uint64_t parse_count(std::string_view text) {
  const auto s = trim(text);
  if (s.empty()) throw ConfigError("empty count");
  const auto caret = s.find('^');
  if (caret != std::string_view::npos) {
    const auto base = parse_count(s.substr(0, caret));
    const auto exp = parse_count(s.substr(caret + 1));
    long double v = std::pow(static_cast<long double>(base), static_cast<long double>(exp));
    if (v > 1.8e19L) throw ConfigError("count too large: " + std::string(s));
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r *= base;
    return r;
  }
  std::uint64_t r = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), r);
  if (ec == std::errc() && ptr == s.data() + s.size()) return r;
  const double x = parse_real(s);
  if (!(x >= 0.0) || x > 1.8e19 || x != std::floor(x))
    throw ConfigError("expected a non-negative integer, got '" + std::string(s) + "'");
  return static_cast<std::uint64_t>(x);
}

double parse_real(std::string_view text) {
  const auto s = trim(text);
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec == std::errc() && ptr == s.data() + s.size()) return x;
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  throw ConfigError("expected a number, got '" + std::string(s) + "'");
}

std::vector<double> parse_axis(std::string_view text) {
  const auto s = trim(text);
  std::vector<double> out;
  if (s.find(':') != std::string_view::npos) {
    const auto c1 = s.find(':');
    const auto c2 = s.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw ConfigError("axis range needs lo:hi:step");
    const double lo = parse_real(s.substr(0, c1));
    const double hi = parse_real(s.substr(c1 + 1, c2 - c1 - 1));
    const double step = parse_real(s.substr(c2 + 1));
    if (!(step > 0.0) || hi < lo) throw ConfigError("axis range needs lo <= hi and step > 0");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
    return out;
  }
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto item = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
    out.push_back(parse_real(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::uint64_t> parse_count_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  const auto s = trim(text);
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_count(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t default_work_limit() {
  if (const char* env = std::getenv("STARCOUNT_WORK_LIMIT"); env && *env) {
    try {
      return parse_count(env);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("STARCOUNT_WORK_LIMIT: ") + e.what());
    }
  }
  return 1000000000ULL;
}

void set_config_value(RunConfig& config, std::string_view key, std::string_view value) {
  for (const auto& f : fields()) {
    if (key == f.key) {
      f.set(config, trim(value));
      return;
    }
  }
  throw ConfigError("unknown config key '" + std::string(key) + "'");
}

std::string emit_config(const RunConfig& config) {
  std::string out;
  for (const auto& f : fields()) {
    out += f.key;
    out += '=';
    out += f.get(config);
    out += '\n';
  }
  return out;
}

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  config.work_limit = default_work_limit();
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("config JSON: ") + e.what());
    }
    if (!j.contains("config") || !j["config"].is_object())
      throw ConfigError("JSON config needs a \"config\" object");
    for (const auto& [key, value] : j["config"].items()) {
      if (!value.is_string()) throw ConfigError("config value for '" + key + "' must be a string");
      set_config_value(config, key, value.get<std::string>());
    }
    return config;
  }
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = trim(line);
    if (v.starts_with("#%")) {
      v = trim(v.substr(2));
    } else if (v.empty() || v.front() == '#') {
      continue;
    } else if (v.find('=') == std::string_view::npos) {
      // First line of a CSV body after the header.
      break;
    }
    const auto eq = v.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    set_config_value(config, trim(v.substr(0, eq)), v.substr(eq + 1));
  }
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void apply_preset(RunConfig& config, const PresetParams& preset) {
  const std::string& name = preset.name;
  const double n = static_cast<double>(config.n);
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw ConfigError("preset " + name + " needs " + what);
  };
  if (name == "pds") {
    need(preset.k > 0, "--k");
    config.h = "er:" + std::to_string(preset.k) + "," + format_number(preset.q);
  } else if (name == "clique") {
    need(preset.k > 0, "--k");
    config.h = "clique:" + std::to_string(preset.k);
  } else if (name == "independent-set") {
    need(preset.k > 0 && preset.d > 0.0, "--k and --dd");
    config.p = 1.0 - preset.d / n;
    config.h = "clique:" + std::to_string(preset.k);
  } else if (name == "pbc") {
    need(preset.a > 0 && preset.b > 0, "--a and --b");
    config.h = "biclique:" + std::to_string(preset.a) + "," + std::to_string(preset.b);
  } else if (name == "counterexample-small-p") {
    need(preset.gamma > 0.0, "--gamma");
    const std::uint64_t k =
        preset.k > 0 ? preset.k : static_cast<std::uint64_t>(std::ceil(4.0 / preset.gamma - 1e-12));
    config.p = std::pow(n, -preset.gamma);
    config.h = "clique:" + std::to_string(k);
    config.statistic = "clique-count:" + std::to_string(k);
  } else if (name == "counterexample-trace") {
    need(preset.c > 0.0 && preset.l >= 3, "--C > 0 and --l >= 3");
    const auto k = preset.k > 0 ? preset.k : static_cast<std::uint64_t>(std::llround(preset.c * std::sqrt(n)));
    config.p = 0.5;
    config.h = "clique:" + std::to_string(k);
    config.statistic = "trace:" + std::to_string(preset.l);
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  config.preset = name;
}

}  // namespace starcount::cli
