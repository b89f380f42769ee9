#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "starcount/graph.hpp"

namespace starcount {

using Rng = std::mt19937_64;

enum class Arm : std::uint64_t { Null = 0, Planted = 1 };

std::uint64_t splitmix64(std::uint64_t x);

// Per-trial seed: a splitmix64 chain over (master, trial, arm). Independent of
// evaluation order, so trials can run on any worker.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, Arm arm);

// Uniform double in (0, 1] from the top 53 bits of one draw.
inline double uniform_open_closed(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

// Calls fn(u, v) for each edge of a G(n, p) draw, in lexicographic order.
// Sparse or near-complete regimes use geometric skips over the pair sequence;
// p = 1/2 consumes one random bit per pair.
template <class Fn>
void for_each_gnp_edge(int n, double p, Rng& rng, Fn&& fn) {
  if (n < 2 || p <= 0.0) return;
  if (p >= 1.0) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) fn(u, v);
    return;
  }
  if (p == 0.5) {
    std::uint64_t bits = 0;
    int left = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (left == 0) {
          bits = rng();
          left = 64;
        }
        if (bits & 1U) fn(u, v);
        bits >>= 1;
        --left;
      }
    return;
  }
  if (p < 0.25 || p > 0.75) {
    const bool sparse = p < 0.5;
    const double log_q = std::log1p(-(sparse ? p : 1.0 - p));
    int u = 0, v = 1;
    // Moves (u, v) forward by k pairs; false once past the last pair.
    auto advance = [&](std::uint64_t k) {
      while (k > 0) {
        const std::uint64_t room = static_cast<std::uint64_t>(n - v);
        if (k < room) {
          v += static_cast<int>(k);
          return true;
        }
        k -= room;
        ++u;
        v = u + 1;
        if (v >= n) return false;
      }
      return true;
    };
    const double total = 0.5 * static_cast<double>(n) * (n - 1);
    auto gap = [&]() -> std::uint64_t {
      const double g = std::floor(std::log(uniform_open_closed(rng)) / log_q);
      return g >= total ? static_cast<std::uint64_t>(total) + 1 : static_cast<std::uint64_t>(g);
    };
    while (v < n) {
      const std::uint64_t k = gap();
      if (sparse) {
        if (!advance(k)) return;
        fn(u, v);
      } else {
        for (std::uint64_t i = 0; i < k; ++i) {
          fn(u, v);
          if (!advance(1)) return;
        }
      }
      if (!advance(1)) return;
    }
    return;
  }
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() < threshold) fn(u, v);
}

std::vector<Edge> sample_gnp_edges(int n, double p, Rng& rng);

}  // namespace starcount
