#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "starcount/shape.hpp"

namespace starcount {

// (left vertex, right vertex) pairs identified by a gluing.
using Gluing = std::vector<std::pair<int, int>>;

// One gluing of two shapes with its derived union and symmetric-difference shapes.
// In the union labelling, left keeps 0..s1-1 and unglued right vertices follow
// in increasing order.
struct IntersectionPattern {
  Shape left;
  Shape right;
  Gluing gluing;
  Shape union_shape;
  Shape symdiff_shape;
  int union_vertex_count = 0;
  int symdiff_vertex_count = 0;
  std::size_t symdiff_edge_count = 0;
};

struct PatternShapes {
  Shape union_shape;
  Shape symdiff_shape;
  int union_vertex_count = 0;
  int symdiff_vertex_count = 0;
  std::size_t symdiff_edge_count = 0;
};

// Validates that the gluing is a bijection between vertex subsets of equal size.
IntersectionPattern make_pattern(const Shape& left, const Shape& right, Gluing gluing);

// One pattern per (k, left k-subset, right k-subset, bijection); deterministic order.
std::vector<IntersectionPattern> enumerate_patterns(const Shape& left, const Shape& right);
PatternShapes pattern_shapes(const IntersectionPattern& pattern);

// sum_k C(s1,k) C(s2,k) k!
std::uint64_t pattern_count(int s1, int s2);

// Calls fn for every gluing between vertex sets of sizes s1 and s2, in the same
// order as enumerate_patterns.
void for_each_gluing(int s1, int s2, const std::function<void(const Gluing&)>& fn);

// Union and symmetric-difference edge lists of a glued pair in the union labelling.
std::vector<Edge> glued_union_edges(const Shape& left, const Shape& right, const Gluing& gluing);
std::vector<Edge> glued_symdiff_edges(const Shape& left, const Shape& right, const Gluing& gluing);

}  // namespace starcount
