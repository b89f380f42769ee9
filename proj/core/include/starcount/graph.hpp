#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace starcount {

// Unordered pair stored with first < second.
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Validates: no loops, endpoints in range, no duplicates (in either orientation).
  Graph(int n, std::vector<Edge> edges);

  // Trusted fast path: edges normalized, sorted and unique.
  static Graph from_sorted_unique(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const int> neighbors(int v) const {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  std::vector<std::uint64_t> degrees() const;
  bool has_edge(int u, int v) const;

  // Bit rows are kept for graphs up to kDenseLimit vertices; nullptr otherwise.
  static constexpr int kDenseLimit = 8192;
  const std::uint64_t* row(int v) const {
    return bits_.empty() ? nullptr : bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  std::size_t words() const { return words_; }

  // Drops degree-0 vertices and relabels the rest in increasing order.
  // kept[i] is the original label of new vertex i.
  Graph without_isolated(std::vector<int>* kept = nullptr) const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<int> nbrs_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_ = 0;
};

// Edge-list text: "n <count>" then "u v" lines; blank lines and '#' comments ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Multiset of vertex degrees, stored as (degree, multiplicity) classes
// sorted by decreasing degree. Isolated vertices are kept as degree 0.
class DegreeProfile {
 public:
  using Class = std::pair<std::uint64_t, std::uint64_t>;

  DegreeProfile() = default;
  static DegreeProfile from_graph(const Graph& g);
  static DegreeProfile from_degrees(const std::vector<std::uint64_t>& degrees);
  static DegreeProfile from_classes(std::vector<Class> classes);

  const std::vector<Class>& classes() const { return classes_; }
  std::uint64_t vertex_count() const { return vertices_; }
  std::uint64_t max_degree() const { return classes_.empty() ? 0 : classes_.front().first; }
  std::uint64_t edge_count() const { return degree_sum_ / 2; }
  std::uint64_t degree_sum() const { return degree_sum_; }

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;

 private:
  std::vector<Class> classes_;
  std::uint64_t vertices_ = 0;
  std::uint64_t degree_sum_ = 0;
};

}  // namespace starcount
