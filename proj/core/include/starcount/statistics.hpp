#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "starcount/errors.hpp"
#include "starcount/graph.hpp"
#include "starcount/shape.hpp"

namespace starcount {

struct EdgeWeighting {
  double a;  // present edge: sqrt((1-p)/p)
  double b;  // absent pair: -sqrt(p/(1-p))
  static EdgeWeighting for_p(double p);
};

// Product of edge weights over the given pairs; 1 for the empty set.
double chi(const std::vector<Edge>& pairs, const Graph& g, double p);

// (1/|Aut|) * sum over all injective maps V(S) -> [n] of the weight product.
// Throws BudgetError when n^|V(S)| exceeds work_limit.
double signed_count_naive(const Shape& shape, const Graph& g, double p,
                          std::uint64_t work_limit = kDefaultWorkLimit);

// Signed t-star count from the degree sequence, O(#distinct degrees * t).
double signed_star_count(int t, const Graph& g, double p);

// Signed count expanded over edge subsets T of S: each edge weight is
// b + (a - b) 1{edge}, so the map sum becomes
//   sum_T b^(|S|-|T|) (a-b)^|T| M_{S[T],G} (n - v_T)_(s - v_T).
double signed_shape_count(const Shape& shape, const Graph& g, double p,
                          std::uint64_t work_limit = kDefaultWorkLimit);

// Number of k-vertex cliques. Degeneracy-oriented enumeration with size pruning.
std::uint64_t unsigned_clique_count(int k, const Graph& g,
                                    std::uint64_t work_limit = kDefaultWorkLimit);

// Sum over ordered tuples of l distinct vertices of M_{i1 i2} ... M_{il i1}
// with M the +-1 adjacency. The reduced mode anchors each cycle at its smallest
// vertex and one direction, then multiplies by 2l.
double closed_path_trace(int l, const Graph& g, std::uint64_t work_limit = kDefaultWorkLimit,
                         bool reduced = false);

namespace stat {
struct SignedShapeCount {
  Shape shape;
};
struct SignedStarCount {
  int t;
};
struct UnsignedCliqueCount {
  int k;
};
struct ClosedPathTrace {
  int l;
  bool reduced = false;
};
}  // namespace stat

struct TestStatistic {
  std::variant<stat::SignedShapeCount, stat::SignedStarCount, stat::UnsignedCliqueCount,
               stat::ClosedPathTrace>
      kind;
  double p = 0.5;
  std::uint64_t work_limit = kDefaultWorkLimit;
  std::string text;  // the parsed form, for reports

  void validate() const;
};

// "star:t", "shape:<hex or edge-list file>", "clique-count:k", "trace:l".
TestStatistic parse_statistic(std::string_view text, double p,
                              std::uint64_t work_limit = kDefaultWorkLimit);

double evaluate(const TestStatistic& stat, const Graph& g);

}  // namespace starcount
