#include <doctest.h>

#include <cmath>
#include <set>

#include "starcount/rng.hpp"

using namespace starcount;

TEST_SUITE("rng") {
  TEST_CASE("derived seeds are stable and distinct") {
    CHECK(derive_seed(7, 3, Arm::Null) == derive_seed(7, 3, Arm::Null));
    std::set<std::uint64_t> seen;
    for (std::uint64_t t = 0; t < 200; ++t) {
      seen.insert(derive_seed(1, t, Arm::Null));
      seen.insert(derive_seed(1, t, Arm::Planted));
      seen.insert(derive_seed(2, t, Arm::Null));
    }
    CHECK(seen.size() == 600);
  }

  TEST_CASE("uniform draw lies in (0, 1]") {
    Rng rng(5);
    for (int i = 0; i < 10000; ++i) {
      const double u = uniform_open_closed(rng);
      CHECK(u > 0.0);
      CHECK(u <= 1.0);
    }
  }

  TEST_CASE("G(n,p) edge frequency on every sampler path") {
    const int n = 300;
    const double pairs = n * (n - 1) / 2.0;
    for (double p : {0.01, 0.2, 0.3, 0.5, 0.7, 0.8, 0.99}) {
      double total = 0.0;
      const int reps = 20;
      for (int r = 0; r < reps; ++r) {
        Rng rng(derive_seed(42, r, Arm::Null));
        const auto e = sample_gnp_edges(n, p, rng);
        CHECK(std::is_sorted(e.begin(), e.end()));
        CHECK(std::adjacent_find(e.begin(), e.end()) == e.end());
        for (auto [u, v] : e) {
          CHECK(u < v);
          CHECK(v < n);
        }
        total += static_cast<double>(e.size());
      }
      const double mean = pairs * p * reps;
      const double sd = std::sqrt(pairs * p * (1 - p) * reps);
      CHECK(std::abs(total - mean) <= 4.0 * sd);
    }
  }

  TEST_CASE("per-pair frequency is uniform over positions for skip samplers") {
    // Early and late pairs must be hit equally often.
    const int n = 30, reps = 4000;
    for (double p : {0.1, 0.9}) {
      std::vector<int> hits(n * n, 0);
      for (int r = 0; r < reps; ++r) {
        Rng rng(derive_seed(9, r, Arm::Planted));
        for_each_gnp_edge(n, p, rng, [&](int u, int v) { ++hits[u * n + v]; });
      }
      const double sd = std::sqrt(reps * p * (1 - p));
      int outliers = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (std::abs(hits[u * n + v] - reps * p) > 4.5 * sd) ++outliers;
      CHECK(outliers <= 1);
    }
  }

  TEST_CASE("degenerate probabilities") {
    Rng rng(1);
    CHECK(sample_gnp_edges(30, 1e-12, rng).empty());
    CHECK(sample_gnp_edges(30, 1.0 - 1e-12, rng).size() == 435);
    CHECK(sample_gnp_edges(1, 0.5, rng).empty());
  }
}
