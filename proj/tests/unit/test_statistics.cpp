#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "starcount/errors.hpp"
#include "starcount/statistics.hpp"

using namespace starcount;

namespace {

bool close(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

std::uint64_t brute_cliques(int k, const Graph& g) {
  std::uint64_t count = 0;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == k) {
      ++count;
      return;
    }
    for (int v = start; v < g.n(); ++v) {
      bool ok = true;
      for (int u : pick) ok = ok && g.has_edge(u, v);
      if (!ok) continue;
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

double brute_trace(int l, const Graph& g) {
  double total = 0.0;
  std::vector<int> path;
  std::vector<char> used(g.n(), 0);
  auto w = [&](int a, int b) { return g.has_edge(a, b) ? 1.0 : -1.0; };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(path.size()) == l) {
      double prod = 1.0;
      for (int i = 0; i < l; ++i) prod *= w(path[i], path[(i + 1) % l]);
      total += prod;
      return;
    }
    for (int v = 0; v < g.n(); ++v) {
      if (used[v]) continue;
      used[v] = 1;
      path.push_back(v);
      self(self);
      path.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
  return total;
}

}  // namespace

TEST_SUITE("statistics") {
  TEST_CASE("edge weights and characters") {
    const auto w = EdgeWeighting::for_p(0.5);
    CHECK(w.a == doctest::Approx(1.0));
    CHECK(w.b == doctest::Approx(-1.0));
    const Graph g(3, {{0, 1}});
    CHECK(chi({}, g, 0.3) == 1.0);
    CHECK(chi({{0, 1}}, g, 0.5) == doctest::Approx(1.0));
    CHECK(chi({{0, 2}}, g, 0.5) == doctest::Approx(-1.0));
    const auto w2 = EdgeWeighting::for_p(0.2);
    // Zero mean and unit variance under G(n, p).
    CHECK(0.2 * w2.a + 0.8 * w2.b == doctest::Approx(0.0));
    CHECK(0.2 * w2.a * w2.a + 0.8 * w2.b * w2.b == doctest::Approx(1.0));
  }

  TEST_CASE("naive signed counts, hand values") {
    CHECK(signed_count_naive(star_shape(1), Graph(3), 0.5) == doctest::Approx(-3.0));
    const Graph k3 = clique_shape(3).as_graph();
    CHECK(signed_count_naive(star_shape(1), k3, 0.5) == doctest::Approx(3.0));
    CHECK(signed_count_naive(star_shape(2), k3, 0.5) == doctest::Approx(3.0));
    CHECK(signed_star_count(1, k3, 0.5) == doctest::Approx(3.0));
    CHECK(signed_star_count(2, Graph(4), 0.5) == doctest::Approx(12.0));
    CHECK_THROWS_AS(signed_count_naive(clique_shape(3), Graph(200), 0.5, 1000), BudgetError);
  }

  TEST_CASE("fast star and shape counts match the naive sum") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const int n = 4 + static_cast<int>(seed % 6);
      const double p = 0.1 + 0.03 * seed;
      const auto g = testutil::random_graph(seed, n, 0.5);
      for (int t = 1; t <= 4; ++t)
        CHECK(close(signed_star_count(t, g, p), signed_count_naive(star_shape(t), g, p)));
      for (const auto& s : enumerate_shapes(3))
        CHECK(close(signed_shape_count(s, g, p), signed_count_naive(s, g, p)));
    }
  }

  TEST_CASE("clique counts") {
    const Graph k4 = clique_shape(4).as_graph();
    CHECK(unsigned_clique_count(3, k4) == 4);
    CHECK(unsigned_clique_count(4, k4) == 1);
    CHECK(unsigned_clique_count(5, k4) == 0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = testutil::random_graph(seed, 25, 0.6);
      for (int k = 1; k <= 6; ++k) CHECK(unsigned_clique_count(k, g) == brute_cliques(k, g));
    }
  }

  TEST_CASE("closed path trace") {
    const Graph k3 = clique_shape(3).as_graph();
    CHECK(closed_path_trace(3, k3) == doctest::Approx(6.0));
    CHECK(closed_path_trace(3, Graph(3)) == doctest::Approx(-6.0));
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto g = testutil::random_graph(seed, 8, 0.5);
      for (int l = 3; l <= 5; ++l) {
        const double b = brute_trace(l, g);
        CHECK(closed_path_trace(l, g) == doctest::Approx(b));
        CHECK(closed_path_trace(l, g, kDefaultWorkLimit, true) == doctest::Approx(b));
      }
    }
    CHECK_THROWS_AS(closed_path_trace(4, Graph(100), 1000), BudgetError);
  }

  TEST_CASE("statistic parsing and evaluation") {
    const Graph k3 = clique_shape(3).as_graph();
    CHECK(evaluate(parse_statistic("star:1", 0.5), k3) == doctest::Approx(3.0));
    CHECK(evaluate(parse_statistic("clique-count:3", 0.5), clique_shape(4).as_graph()) == 4.0);
    CHECK(evaluate(parse_statistic("trace:3", 0.5), k3) == doctest::Approx(6.0));
    CHECK(evaluate(parse_statistic("trace:3,reduced", 0.5), k3) == doctest::Approx(6.0));
    const auto tri = parse_statistic("shape:" + clique_shape(3).key_hex(), 0.5);
    CHECK(evaluate(tri, k3) == doctest::Approx(1.0));
    CHECK_THROWS_AS(parse_statistic("star:0", 0.5), ParseError);
    CHECK_THROWS_AS(parse_statistic("moments", 0.5), ParseError);
  }
}
