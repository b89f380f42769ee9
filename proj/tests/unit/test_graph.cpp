#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "starcount/bigint.hpp"
#include "starcount/errors.hpp"
#include "starcount/graph.hpp"

using namespace starcount;

TEST_SUITE("graph") {
  TEST_CASE("falling factorial and binomial") {
    CHECK(falling_factorial(5, 3) == 60);
    CHECK(falling_factorial(7, 0) == 1);
    CHECK(falling_factorial(0, 0) == 1);
    CHECK(falling_factorial(2, 5) == 0);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 4) == 0);
    CHECK(falling_factorial(100, 50) == binomial(100, 50) * falling_factorial(50, 50));
  }

  TEST_CASE("log_big beyond double range") {
    CHECK(log_big(BigInt(0)) == -std::numeric_limits<double>::infinity());
    CHECK(log_big(BigInt(1)) == 0.0);
    CHECK(log_big(BigInt(1000)) == doctest::Approx(std::log(1000.0)));
    const BigInt big = boost::multiprecision::pow(BigInt(10), 2000);
    CHECK(log_big(big) == doctest::Approx(2000 * std::log(10.0)).epsilon(1e-12));
  }

  TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    const Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges().front() == Edge{0, 3});
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.degree(0) == 1);
  }

  TEST_CASE("adjacency without bit rows matches bit rows") {
    const int n = Graph::kDenseLimit + 10;
    std::vector<Edge> e = {{0, n - 1}, {5, 7}, {5, n - 2}};
    const Graph g(n, e);
    CHECK(g.row(0) == nullptr);
    CHECK(g.has_edge(n - 1, 0));
    CHECK(g.has_edge(5, n - 2));
    CHECK_FALSE(g.has_edge(5, 6));
    const auto small = testutil::random_graph(11, 40, 0.3);
    for (int u = 0; u < 40; ++u)
      for (int v = 0; v < 40; ++v)
        if (u != v)
          CHECK(small.has_edge(u, v) ==
                std::binary_search(small.neighbors(u).begin(), small.neighbors(u).end(), v));
  }

  TEST_CASE("edge-list text round trip") {
    const auto g = testutil::random_graph(3, 12, 0.4);
    std::stringstream ss;
    write_edge_list(ss, g);
    const Graph back = read_edge_list(ss);
    CHECK(back == g);
    std::istringstream bad("n 3\n0 5\n");
    CHECK_THROWS_AS(read_edge_list(bad), ParseError);
    std::istringstream comments("# header\nn 4\n\n0 1 # trailing\n2 3\n");
    const Graph c = read_edge_list(comments);
    CHECK(c.n() == 4);
    CHECK(c.edge_count() == 2);
  }

  TEST_CASE("isolated vertices and complement") {
    const Graph g(6, {{1, 4}, {4, 5}});
    std::vector<int> kept;
    const Graph s = g.without_isolated(&kept);
    CHECK(s.n() == 3);
    CHECK(kept == std::vector<int>{1, 4, 5});
    CHECK(s.has_edge(0, 1));
    const Graph c = g.complement();
    CHECK(c.edge_count() == 15 - 2);
    CHECK_FALSE(c.has_edge(1, 4));
    CHECK(c.complement() == g);
  }

  TEST_CASE("degree profile") {
    const Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    const auto p = DegreeProfile::from_graph(g);
    CHECK(p.vertex_count() == 5);
    CHECK(p.max_degree() == 3);
    CHECK(p.edge_count() == 4);
    CHECK(p.classes() == std::vector<DegreeProfile::Class>{{3, 1}, {2, 2}, {1, 1}, {0, 1}});
    CHECK(DegreeProfile::from_degrees({1, 2, 2, 3, 0}) == p);
    CHECK_THROWS_AS(DegreeProfile::from_degrees({1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(DegreeProfile::from_classes({{3, 2}}), std::invalid_argument);
  }
}
