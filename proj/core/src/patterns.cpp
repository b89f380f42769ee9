#include "starcount/patterns.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>

#include "starcount/bigint.hpp"

namespace starcount {

namespace {

std::vector<int> right_relabel(const Shape& left, const Shape& right, const Gluing& gluing) {
  std::vector<int> map(right.vertex_count(), -1);
  for (auto [l, r] : gluing) map[r] = l;
  int next = left.vertex_count();
  for (int r = 0; r < right.vertex_count(); ++r)
    if (map[r] < 0) map[r] = next++;
  return map;
}

std::vector<Edge> mapped_right(const Shape& left, const Shape& right, const Gluing& gluing) {
  auto map = right_relabel(left, right, gluing);
  std::vector<Edge> out;
  for (auto [u, v] : right.edges()) {
    int a = map[u], b = map[v];
    if (a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::uint64_t pattern_count(int s1, int s2) {
  std::uint64_t total = 0;
  for (int k = 0; k <= std::min(s1, s2); ++k) {
    total += static_cast<std::uint64_t>(binomial(s1, k) * binomial(s2, k) * falling_factorial(k, k));
  }
  return total;
}

void for_each_gluing(int s1, int s2, const std::function<void(const Gluing&)>& fn) {
  Gluing g;
  for (int k = 0; k <= std::min(s1, s2); ++k) {
    std::vector<int> a(k);
    std::iota(a.begin(), a.end(), 0);
    do {
      std::vector<int> b(k);
      std::iota(b.begin(), b.end(), 0);
      do {
        std::vector<int> perm = b;
        do {
          g.clear();
          for (int i = 0; i < k; ++i) g.emplace_back(a[i], perm[i]);
          fn(g);
        } while (std::next_permutation(perm.begin(), perm.end()));
      } while (next_combination(b, s2));
    } while (next_combination(a, s1));
  }
}

std::vector<Edge> glued_union_edges(const Shape& left, const Shape& right, const Gluing& gluing) {
  auto r = mapped_right(left, right, gluing);
  std::vector<Edge> out;
  std::set_union(left.edges().begin(), left.edges().end(), r.begin(), r.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<Edge> glued_symdiff_edges(const Shape& left, const Shape& right,
                                      const Gluing& gluing) {
  auto r = mapped_right(left, right, gluing);
  std::vector<Edge> out;
  std::set_symmetric_difference(left.edges().begin(), left.edges().end(), r.begin(), r.end(),
                                std::back_inserter(out));
  return out;
}

IntersectionPattern make_pattern(const Shape& left, const Shape& right, Gluing gluing) {
  std::vector<char> lu(left.vertex_count(), 0), ru(right.vertex_count(), 0);
  for (auto [l, r] : gluing) {
    if (l < 0 || l >= left.vertex_count() || r < 0 || r >= right.vertex_count())
      throw std::invalid_argument("gluing vertex out of range");
    if (lu[l]++ || ru[r]++) throw std::invalid_argument("gluing is not injective");
  }
  IntersectionPattern p;
  p.left = left;
  p.right = right;
  p.gluing = std::move(gluing);
  p.union_shape = Shape::from_edges(glued_union_edges(left, right, p.gluing));
  p.symdiff_shape = Shape::from_edges(glued_symdiff_edges(left, right, p.gluing));
  p.union_vertex_count =
      left.vertex_count() + right.vertex_count() - static_cast<int>(p.gluing.size());
  p.symdiff_vertex_count = p.symdiff_shape.vertex_count();
  p.symdiff_edge_count = p.symdiff_shape.edge_count();
  return p;
}

std::vector<IntersectionPattern> enumerate_patterns(const Shape& left, const Shape& right) {
  std::vector<IntersectionPattern> out;
  for_each_gluing(left.vertex_count(), right.vertex_count(),
                  [&](const Gluing& g) { out.push_back(make_pattern(left, right, g)); });
  return out;
}

PatternShapes pattern_shapes(const IntersectionPattern& p) {
  return {p.union_shape, p.symdiff_shape, p.union_vertex_count, p.symdiff_vertex_count,
          p.symdiff_edge_count};
}

}  // namespace starcount
