#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "starcount/bigint.hpp"
#include "starcount/graph.hpp"
#include "starcount/rng.hpp"
#include "starcount/shape.hpp"

namespace testutil {

using starcount::BigInt;
using starcount::Edge;
using starcount::Graph;

inline Graph random_graph(std::uint64_t seed, int n, double p) {
  starcount::Rng rng(seed);
  return Graph::from_sorted_unique(n, starcount::sample_gnp_edges(n, p, rng));
}

// Number of vertices spanned by an edge list (max label + 1).
inline int span_of(const std::vector<Edge>& edges) {
  int s = 0;
  for (auto [u, v] : edges) s = std::max({s, u + 1, v + 1});
  return s;
}

// Injective maps of the edge list's vertices into host, by trying every tuple.
inline BigInt brute_copies(const std::vector<Edge>& edges, const Graph& host) {
  const int s = span_of(edges);
  std::vector<int> used_vertices;
  for (auto [u, v] : edges) {
    used_vertices.push_back(u);
    used_vertices.push_back(v);
  }
  std::sort(used_vertices.begin(), used_vertices.end());
  used_vertices.erase(std::unique(used_vertices.begin(), used_vertices.end()), used_vertices.end());
  std::vector<int> img(s, -1);
  std::vector<char> taken(host.n(), 0);
  BigInt total = 0;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == used_vertices.size()) {
      for (auto [u, v] : edges)
        if (!host.has_edge(img[u], img[v])) return;
      ++total;
      return;
    }
    for (int x = 0; x < host.n(); ++x) {
      if (taken[x]) continue;
      taken[x] = 1;
      img[used_vertices[pos]] = x;
      self(self, pos + 1);
      taken[x] = 0;
    }
  };
  rec(rec, 0);
  return total;
}

// Isomorphism test by trying every bijection.
inline bool brute_isomorphic(const starcount::Shape& a, const starcount::Shape& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const Graph gb = b.as_graph();
  std::vector<int> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!gb.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<Edge> relabel(const std::vector<Edge>& edges, const std::vector<int>& perm) {
  std::vector<Edge> out;
  for (auto [u, v] : edges) {
    int a = perm[u], b = perm[v];
    if (a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testutil
