#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "starcount_cli/commands.hpp"
#include "starcount_cli/config.hpp"

using namespace starcount;
using namespace starcount::cli;

namespace {

CommandResult run(const RunConfig& c, int workers = 1) {
  std::ostringstream log;
  ExecOptions exec;
  exec.workers = workers;
  return run_command(c, exec, log);
}

int count_lines_starting(const std::string& text, char ch) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line))
    if (!line.empty() && line.front() == ch) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count and axis parsing") {
    CHECK(parse_count("1000") == 1000);
    CHECK(parse_count("10^6") == 1000000);
    CHECK(parse_count("2^10") == 1024);
    CHECK(parse_count("1e6") == 1000000);
    CHECK(parse_count("1.5e3") == 1500);
    CHECK_THROWS_AS(parse_count("-3"), ConfigError);
    CHECK_THROWS_AS(parse_count("2.5"), ConfigError);
    CHECK_THROWS_AS(parse_count("abc"), ConfigError);
    const auto ax = parse_axis("0:1:0.01");
    CHECK(ax.size() == 101);
    CHECK(ax[61] == 61 * 0.01);
    CHECK(ax.back() == 100 * 0.01);
    CHECK(parse_axis("0.2,0.4") == std::vector<double>{0.2, 0.4});
    CHECK(parse_count_list("10^3,2^10") == std::vector<std::uint64_t>{1000, 1024});
    CHECK_THROWS_AS(parse_axis("1:0:0.1"), ConfigError);
  }

  TEST_CASE("config round trip") {
    RunConfig c;
    c.command = "simulate";
    c.p = 0.1 + 0.2;  // not exactly representable in short decimal
    c.h = "er:30,0.333";
    c.tau = 1.0 / 3.0;
    c.freeze_h = true;
    c.seed = 0xFFFFFFFFFFFFFFFFULL;
    c.sweep_beta = "0.1:0.9:0.05";
    CHECK(parse_config(emit_config(c)) == c);
    RunConfig d;
    d.work_limit = default_work_limit();
    CHECK(parse_config("") == d);
    CHECK_THROWS_AS(parse_config("bogus=1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("n=abc\n"), ConfigError);
    CHECK(parse_config("# comment\n\nn = 10^3\n").n == 1000);
  }

  TEST_CASE("presets") {
    RunConfig c;
    c.n = 4096;
    PresetParams p;
    p.name = "counterexample-small-p";
    p.gamma = 0.5;
    apply_preset(c, p);
    CHECK(c.h == "clique:8");
    CHECK(c.statistic == "clique-count:8");
    CHECK(c.p == doctest::Approx(1.0 / 64));
    RunConfig t;
    t.n = 50;
    PresetParams tp;
    tp.name = "counterexample-trace";
    tp.c = 3.0;
    tp.l = 4;
    apply_preset(t, tp);
    CHECK(t.h == "clique:21");
    CHECK(t.statistic == "trace:4");
    RunConfig i;
    i.n = 1000;
    PresetParams ip;
    ip.name = "independent-set";
    ip.k = 100;
    ip.d = 5;
    apply_preset(i, ip);
    CHECK(i.p == doctest::Approx(0.995));
    PresetParams bad;
    bad.name = "nope";
    CHECK_THROWS_AS(apply_preset(i, bad), ConfigError);
  }

  TEST_CASE("shapes command") {
    RunConfig c;
    c.command = "shapes";
    c.format = "csv";
    for (auto [m, rows] : {std::pair{1, 1}, std::pair{2, 3}, std::pair{3, 8}}) {
      c.max_edges = m;
      const auto r = run(c);
      CHECK(r.exit_code == 0);
      // Header comments, one column header, then one row per shape.
      std::istringstream in(r.output);
      std::string line;
      int body = 0;
      while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') ++body;
      CHECK(body == rows + 1);
    }
    c.max_edges = 3;
    CHECK(run(c).output.find("5,3,3,6,03e0") != std::string::npos);
    c.max_edges = 9;
    CHECK(run(c).exit_code == kExitBudget);
  }

  TEST_CASE("oracle checks") {
    RunConfig c;
    c.command = "oracle";
    c.check = "pattern-count";
    c.s1 = "star:2";
    c.s2 = "star:2";
    auto checks = run_oracle(c, 1);
    REQUIRE(checks.size() == 1);
    CHECK(checks[0].value == 34.0);
    CHECK(checks[0].pass);
    c.check = "aut";
    c.shape = "star:3";
    checks = run_oracle(c, 1);
    CHECK(checks[0].value == 6.0);
    c.check = "battery";
    c.trials = 4000;
    checks = run_oracle(c, 2);
    for (const auto& ch : checks) {
      CHECK_MESSAGE(ch.pass, ch.name, " ", ch.detail);
      if (ch.name != "second-moment") CHECK(ch.residual <= 1e-9);
    }
    c.check = "unknown";
    CHECK(run(c).exit_code == kExitConfig);
  }

  TEST_CASE("analyze command") {
    const auto path = std::filesystem::temp_directory_path() / "starcount_empty.el";
    {
      std::ofstream out(path);
      out << "n 3\n";
    }
    RunConfig c;
    c.command = "analyze";
    c.h = "file:" + path.string();
    c.n = 100;
    c.d = 3;
    const auto r = run(c);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("NoConstantDegreeSeparation") != std::string::npos);
    c.h = "clique:80";
    c.n = 400;
    const auto pc = run(c);
    CHECK(pc.output.find("\"t_star\": 3") != std::string::npos);
    CHECK(pc.output.find("LargeStarsOptimal") != std::string::npos);
    c.p = 1.5;
    CHECK(run(c).exit_code == kExitConfig);
    c.p = 0.5;
    c.h = "clique:500";
    CHECK(run(c).exit_code == kExitConfig);
    c.h = "clique:x";
    CHECK(run(c).exit_code == kExitConfig);
  }

  TEST_CASE("large planted bipartite clique cell") {
    RunConfig c;
    c.command = "analyze";
    c.h = "biclique:3162,10";
    c.n = 1000000;
    c.format = "csv";
    c.d = 6;
    // The D = 6 surrogate lands just below the default tau = 10.
    CHECK(run(c).output.find(",6,9.99") != std::string::npos);
    c.d = 7;
    const auto r = run(c);
    CHECK(r.output.find("LargeStarsOptimal") != std::string::npos);
  }

  TEST_CASE("output header reproduces the run") {
    RunConfig c;
    c.command = "simulate";
    c.n = 40;
    c.h = "clique:8";
    c.trials = 50;
    c.seed = 99;
    for (const char* fmt : {"report", "csv"}) {
      c.format = fmt;
      const auto first = run(c, 1);
      REQUIRE(first.exit_code == 0);
      const RunConfig again = parse_config(first.output);
      CHECK(again == c);
      CHECK(run(again, 3).output == first.output);
    }
    CHECK(count_lines_starting(run(c).output, '#') == 30);
  }

  TEST_CASE("sweep rows and boundary") {
    RunConfig c;
    c.command = "sweep";
    c.tau = 1.0;
    c.sweep_n = "10^6";
    c.sweep_alpha = "0.2";
    c.sweep_gamma = "0";
    c.sweep_beta = "0.5";
    CHECK(run_sweep(c, 1).size() == 1);
    c.sweep_beta = "0:1:0.01";
    const auto cells = run_sweep(c, 2);
    REQUIRE(cells.size() == 101);
    double flip = -1;
    for (const auto& cell : cells) {
      CHECK(cell.error.empty());
      if (cell.separating && flip < 0) flip = cell.beta;
    }
    CHECK(std::abs(flip - (2 + 2 * 0.2 + 0) / 4) <= 0.01 + 1e-9);
    c.sweep_family = "bogus";
    const auto bad = run_sweep(c, 1);
    CHECK_FALSE(bad.front().error.empty());
    c.sweep_family = "pbc";
    c.sweep_alpha = "0.6";
    c.format = "csv";
    const auto out = run(c, 2);
    CHECK(out.exit_code == 0);
    CHECK(out.output == run(c, 1).output);
  }
}
