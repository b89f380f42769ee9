#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starcount/graph.hpp"

namespace starcount {

// Isomorphism-class representative of an edge-induced graph (no isolated vertices).
// Edges keep the caller's labelling, compacted to 0..s-1 in increasing order of the
// original labels. The canonical key and |Aut| are computed on construction.
class Shape {
 public:
  // The empty shape: no vertices, no edges.
  Shape();

  // Drops isolated vertices. Rejects self-loops and duplicate pairs.
  static Shape from_edges(const std::vector<Edge>& edges);
  static Shape from_graph(const Graph& g) { return from_edges(g.edges()); }
  static Shape from_key(const std::vector<std::uint8_t>& key);
  static Shape from_key_hex(std::string_view hex);

  int vertex_count() const { return s_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::uint8_t>& canonical_key() const { return key_; }
  std::string key_hex() const;
  std::uint64_t aut_count() const { return aut_; }

  Graph as_graph() const { return Graph::from_sorted_unique(s_, edges_); }
  bool is_connected() const;
  std::vector<Shape> components() const;
  std::vector<int> degrees() const;
  // t when the shape is K_{1,t} (K_2 counts as t = 1).
  std::optional<int> star_size() const;

  friend bool operator==(const Shape& a, const Shape& b) { return a.key_ == b.key_; }
  friend bool operator<(const Shape& a, const Shape& b) {
    if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
    return a.key_ < b.key_;
  }

 private:
  int s_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> key_;
  std::uint64_t aut_ = 1;
};

// Canonical key of the edge set after dropping isolated vertices. Connected
// components of up to 12 vertices are supported; larger ones are rejected.
std::vector<std::uint8_t> canonical_form(const std::vector<Edge>& edges);

std::string to_hex(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> from_hex(std::string_view hex);

// All shapes with 1..max_edges edges, sorted by (edge count, canonical key).
// Throws BudgetError above kMaxEnumeratedEdges.
inline constexpr int kMaxEnumeratedEdges = 8;
std::vector<Shape> enumerate_shapes(int max_edges);

Shape star_shape(int t);
Shape clique_shape(int k);
Shape path_shape(int edges);
Shape cycle_shape(int length);
Shape matching_shape(int pairs);

}  // namespace starcount
