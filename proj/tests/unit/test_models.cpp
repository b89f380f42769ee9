#include <doctest.h>

#include <cmath>

#include "starcount/counting.hpp"
#include "starcount/errors.hpp"
#include "starcount/models.hpp"
#include "starcount/rng.hpp"

using namespace starcount;

TEST_SUITE("models") {
  TEST_CASE("hspec parsing and formatting") {
    for (const char* text : {"clique:5", "star:3", "biclique:3,2", "cycle:6", "matching:4", "path:3",
                             "er:10,0.25"})
      CHECK(format_hspec(parse_hspec(text)) == text);
    CHECK_THROWS_AS(parse_hspec("clique"), ParseError);
    CHECK_THROWS_AS(parse_hspec("clique:x"), ParseError);
    CHECK_THROWS_AS(parse_hspec("blob:3"), ParseError);
    CHECK_THROWS_AS(parse_hspec("er:10,1.5"), ParseError);
    CHECK(hspec_is_random(parse_hspec("er:5,0.5")));
    CHECK_FALSE(hspec_is_random(parse_hspec("clique:5")));
  }

  TEST_CASE("realized graphs") {
    const Graph k4 = realize_h(parse_hspec("clique:4"), 0);
    CHECK(k4.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    const Graph b = realize_h(parse_hspec("biclique:3,2"), 0);
    CHECK(b.edge_count() == 6);
    CHECK(DegreeProfile::from_graph(b) == DegreeProfile::from_degrees({2, 2, 2, 3, 3}));
    CHECK(realize_h(parse_hspec("cycle:5"), 0).edge_count() == 5);
    CHECK(realize_h(parse_hspec("path:3"), 0).edge_count() == 3);
    CHECK(realize_h(parse_hspec("matching:3"), 0).edge_count() == 3);
    CHECK(realize_h(parse_hspec("star:4"), 0).edge_count() == 4);
    CHECK(realize_h(parse_hspec("er:30,0.3"), 5) == realize_h(parse_hspec("er:30,0.3"), 5));
    CHECK_FALSE(realize_h(parse_hspec("er:30,0.3"), 5) == realize_h(parse_hspec("er:30,0.3"), 6));
  }

  TEST_CASE("null model edge count") {
    PlantedModel m;
    m.n = 1000;
    m.p = 0.5;
    const Graph g = sample_null(m, 3);
    const double pairs = 1000.0 * 999 / 2;
    CHECK(std::abs(g.edge_count() - pairs / 2) <= 4 * std::sqrt(pairs / 4));
    CHECK(sample_null(m, 3) == g);
    m.n = 30;
    m.p = 1e-12;
    CHECK(sample_null(m, 1).edge_count() == 0);
    m.p = 1 - 1e-12;
    CHECK(sample_null(m, 1).edge_count() == 435);
  }

  TEST_CASE("planted sample contains the embedded H") {
    PlantedModel m;
    m.n = 50;
    m.p = 0.1;
    m.h = hspec::Clique{8};
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto ps = sample_planted(m, s);
      REQUIRE(ps.embedding.size() == 8);
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) CHECK(ps.graph.has_edge(ps.embedding[i], ps.embedding[j]));
    }
    CHECK(sample_planted(m, 4).graph == sample_planted(m, 4).graph);
    m.h = hspec::Clique{51};
    CHECK_THROWS_AS(m.validate(), EmbeddingError);
    CHECK_THROWS_AS(sample_planted(m, 0), EmbeddingError);
  }

  TEST_CASE("marginal edge probability under the planted model") {
    // H = K_4, n = 10: a fixed pair lies inside the embedded H with probability 12/90.
    PlantedModel m;
    m.n = 10;
    m.p = 0.3;
    m.h = hspec::Clique{4};
    const int trials = 100000;
    int inside = 0, edge = 0;
    for (int t = 0; t < trials; ++t) {
      const auto ps = sample_planted(m, derive_seed(77, t, Arm::Planted));
      bool a = false, b = false;
      for (int v : ps.embedding) {
        a = a || v == 2;
        b = b || v == 7;
      }
      inside += a && b;
      edge += ps.graph.has_edge(2, 7);
    }
    const double q = 12.0 / 90.0;
    CHECK(std::abs(inside - trials * q) <= 4 * std::sqrt(trials * q * (1 - q)));
    const double pe = m.p + (1 - m.p) * q;
    CHECK(std::abs(edge - trials * pe) <= 4 * std::sqrt(trials * pe * (1 - pe)));
  }

  TEST_CASE("frozen and resampled random H") {
    PlantedModel m;
    m.n = 40;
    m.p = 0.2;
    m.h = hspec::ErdosRenyiSub{12, 0.5};
    m.freeze_h = true;
    m.h_seed = 9;
    const auto a = sample_planted(m, 1), b = sample_planted(m, 2);
    CHECK(a.realized_h == b.realized_h);
    m.freeze_h = false;
    int differ = 0;
    for (std::uint64_t s = 0; s < 5; ++s)
      differ += !(sample_planted(m, s).realized_h == sample_planted(m, s + 100).realized_h);
    CHECK(differ > 0);
  }
}
