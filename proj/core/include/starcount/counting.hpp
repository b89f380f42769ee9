#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "starcount/bigint.hpp"
#include "starcount/graph.hpp"
#include "starcount/shape.hpp"

namespace starcount {

inline constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

// M_{S,G}: injective maps V(S) -> V(G) sending every shape edge to a host edge.
// Plain backtracking ordered by shape connectivity.
BigInt count_labelled_copies(const Shape& shape, const Graph& host);

// Same count for a raw edge list (vertices not touched by an edge are ignored).
// Throws BudgetError once more than work_limit search nodes are visited.
BigInt count_labelled_copies(const std::vector<Edge>& shape_edges, const Graph& host,
                             std::uint64_t work_limit = kNoLimit);

// M_S = n_(|V(S)|).
BigInt count_in_complete(const Shape& shape, std::uint64_t n);

// Self-embeddings counted by backtracking; independent of Shape::aut_count().
BigInt automorphism_count(const Shape& shape);

// Sum over vertices of (d_v)_(t).
BigInt star_copy_count(const DegreeProfile& profile, int t);

// Memoizing copy counter for one host. Stars use the degree formula, other
// connected shapes use backtracking, and a disconnected S = C + R is reduced by
// M_C M_R = sum over gluings of M_{C u R}, whose non-empty gluings are smaller.
class CopyCounter {
 public:
  explicit CopyCounter(const Graph& host, std::uint64_t work_limit = kNoLimit);

  const BigInt& count(const Shape& shape);
  std::uint64_t work_used() const { return work_used_; }

 private:
  const Graph& host_;
  DegreeProfile profile_;
  std::uint64_t work_limit_;
  std::uint64_t work_used_ = 0;
  std::map<std::vector<std::uint8_t>, BigInt> memo_;
};

}  // namespace starcount
