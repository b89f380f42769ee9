#include <doctest.h>

#include "helpers.hpp"
#include "starcount/counting.hpp"
#include "starcount/patterns.hpp"

using namespace starcount;

TEST_SUITE("patterns") {
  TEST_CASE("pattern counts") {
    CHECK(enumerate_patterns(star_shape(1), star_shape(1)).size() == 7);
    CHECK(enumerate_patterns(star_shape(2), star_shape(2)).size() == 34);
    CHECK(pattern_count(2, 2) == 7);
    CHECK(pattern_count(3, 3) == 34);
    CHECK(pattern_count(6, 6) == 13327);
    CHECK(enumerate_patterns(matching_shape(3), matching_shape(3)).size() == 13327);
  }

  TEST_CASE("union and symmetric difference") {
    const auto k2 = star_shape(1);
    const auto full = make_pattern(k2, k2, {{0, 0}, {1, 1}});
    CHECK(full.union_shape == k2);
    CHECK(full.symdiff_shape.edge_count() == 0);
    CHECK(full.symdiff_vertex_count == 0);

    const auto a = star_shape(2), b = path_shape(3);
    const auto disjoint = make_pattern(a, b, {});
    CHECK(disjoint.union_shape == Shape::from_edges({{0, 1}, {0, 2}, {3, 4}, {4, 5}, {5, 6}}));
    CHECK(disjoint.symdiff_shape == disjoint.union_shape);
    CHECK(disjoint.union_vertex_count == 7);

    // Two 2-stars sharing the root and one leaf: vertex 0 is the root of star_shape(2).
    const auto s2 = star_shape(2);
    const auto shared = make_pattern(s2, s2, {{0, 0}, {1, 1}});
    CHECK(shared.symdiff_shape == star_shape(2));
    CHECK(shared.union_vertex_count - shared.symdiff_vertex_count == 1);
    CHECK(shared.symdiff_edge_count == 2);
  }

  TEST_CASE("gluing validation") {
    const auto s = star_shape(2);
    CHECK_THROWS_AS(make_pattern(s, s, {{0, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_pattern(s, s, {{0, 3}}), std::invalid_argument);
  }

  TEST_CASE("double counting identity on random hosts") {
    const auto shapes = enumerate_shapes(3);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto g = testutil::random_graph(seed, 7, 0.5);
      for (const auto& s1 : shapes)
        for (const auto& s2 : shapes) {
          BigInt rhs = 0;
          for (const auto& pat : enumerate_patterns(s1, s2))
            rhs += count_labelled_copies(pat.union_shape, g);
          CHECK(count_labelled_copies(s1, g) * count_labelled_copies(s2, g) == rhs);
        }
    }
  }

  TEST_CASE("gluing order matches pattern order") {
    std::vector<Gluing> seen;
    for_each_gluing(3, 2, [&](const Gluing& g) { seen.push_back(g); });
    const auto pats = enumerate_patterns(star_shape(2), star_shape(1));
    REQUIRE(seen.size() == pats.size());
    for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == pats[i].gluing);
  }
}
