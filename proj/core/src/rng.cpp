#include "starcount/rng.hpp"

namespace starcount {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial, Arm arm) {
  std::uint64_t z = splitmix64(master);
  z = splitmix64(z + splitmix64(trial ^ 0xA0761D6478BD642FULL));
  z = splitmix64(z ^ (static_cast<std::uint64_t>(arm) + 1) * 0xD6E8FEB86659FD93ULL);
  return z;
}

std::vector<Edge> sample_gnp_edges(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  if (n >= 2 && p > 0.0)
    edges.reserve(static_cast<std::size_t>(std::min(1.0, p * 1.05 + 0.01) * 0.5 * n * (n - 1)));
  for_each_gnp_edge(n, p, rng, [&](int u, int v) { edges.emplace_back(u, v); });
  return edges;
}

}  // namespace starcount
