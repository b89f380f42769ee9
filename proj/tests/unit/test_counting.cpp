#include <doctest.h>

#include "helpers.hpp"
#include "starcount/counting.hpp"
#include "starcount/errors.hpp"

using namespace starcount;

TEST_SUITE("counting") {
  TEST_CASE("small exact values") {
    const Graph k5 = clique_shape(5).as_graph();
    const Graph k3 = clique_shape(3).as_graph();
    CHECK(count_labelled_copies(clique_shape(3), k5) == 60);
    CHECK(count_labelled_copies(star_shape(2), k3) == 6);
    const auto g = testutil::random_graph(5, 20, 0.3);
    CHECK(count_labelled_copies(star_shape(1), g) == 2 * g.edge_count());
    CHECK(count_in_complete(star_shape(2), 4) == 24);
    CHECK(count_in_complete(star_shape(1), 3) == 6);
    CHECK(count_in_complete(clique_shape(3), 9) == 9 * 8 * 7);
    CHECK(count_labelled_copies(clique_shape(4), k3) == 0);
    CHECK(automorphism_count(star_shape(3)) == 6);
    CHECK(automorphism_count(star_shape(1)) == 2);
    CHECK(automorphism_count(clique_shape(3)) == 6);
  }

  TEST_CASE("backtracking agrees with exhaustive maps") {
    const auto shapes = enumerate_shapes(4);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const auto host = testutil::random_graph(seed, 7, 0.5);
      for (const auto& s : shapes)
        CHECK(count_labelled_copies(s, host) == testutil::brute_copies(s.edges(), host));
    }
  }

  TEST_CASE("star copies from the degree sequence") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto h = testutil::random_graph(seed, 25, 0.2 + 0.02 * seed);
      const auto profile = DegreeProfile::from_graph(h);
      for (int t = 1; t <= 5; ++t) CHECK(star_copy_count(profile, t) == count_labelled_copies(star_shape(t), h));
    }
  }

  TEST_CASE("memoized counter agrees with plain backtracking") {
    const auto shapes = enumerate_shapes(6);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto host = testutil::random_graph(100 + seed, 9, 0.55);
      CopyCounter counter(host);
      for (const auto& s : shapes) CHECK(counter.count(s) == count_labelled_copies(s, host));
    }
  }

  TEST_CASE("work limit") {
    const auto host = testutil::random_graph(1, 60, 0.5);
    CHECK_THROWS_AS(count_labelled_copies(clique_shape(4).edges(), host, 1000), BudgetError);
    CopyCounter counter(host, 1000);
    CHECK_THROWS_AS(counter.count(path_shape(5)), BudgetError);
  }

  TEST_CASE("edge lists with gaps in the labels") {
    const Graph host = clique_shape(4).as_graph();
    CHECK(count_labelled_copies(std::vector<Edge>{{0, 5}}, host) == 12);
  }
}
