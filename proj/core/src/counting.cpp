#include "starcount/counting.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "starcount/errors.hpp"
#include "starcount/patterns.hpp"

namespace starcount {

namespace {

__extension__ typedef unsigned __int128 u128;

struct Plan {
  std::vector<int> anchor;               // earlier position adjacent to this one, or -1
  std::vector<std::vector<int>> checks;  // other earlier adjacent positions
  std::vector<int> degree;
};

Plan make_plan(const std::vector<Edge>& edges, int& s_out) {
  int s = 0;
  for (auto [u, v] : edges) s = std::max({s, u + 1, v + 1});
  std::vector<std::vector<int>> adj(s);
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop in shape edge set");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> verts;
  for (int v = 0; v < s; ++v)
    if (!adj[v].empty()) verts.push_back(v);
  std::vector<int> pos(s, -1);
  std::vector<int> order;
  while (order.size() < verts.size()) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v : verts) {
      if (pos[v] >= 0) continue;
      int links = 0;
      for (int u : adj[v]) links += pos[u] >= 0;
      const int deg = static_cast<int>(adj[v].size());
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    pos[best] = static_cast<int>(order.size());
    order.push_back(best);
  }
  Plan plan;
  for (int v : order) {
    std::vector<int> earlier;
    for (int u : adj[v])
      if (pos[u] < pos[v]) earlier.push_back(pos[u]);
    std::sort(earlier.begin(), earlier.end());
    plan.anchor.push_back(earlier.empty() ? -1 : earlier.front());
    if (!earlier.empty()) earlier.erase(earlier.begin());
    plan.checks.push_back(std::move(earlier));
    plan.degree.push_back(static_cast<int>(adj[v].size()));
  }
  s_out = static_cast<int>(order.size());
  return plan;
}

class Backtracker {
 public:
  Backtracker(const Graph& g, const Plan& plan, std::uint64_t limit)
      : g_(g), plan_(plan), limit_(limit), image_(plan.anchor.size(), -1), used_(g.n(), 0) {
    if (g.row(0) != nullptr) used_bits_.assign(g.words(), 0);
  }

  u128 run() {
    if (plan_.anchor.empty()) return 1;
    rec(0);
    return total_;
  }
  std::uint64_t work() const { return work_; }

 private:
  bool fits(int pos, int v) const {
    if (used_[v] || g_.degree(v) < plan_.degree[pos]) return false;
    for (int c : plan_.checks[pos])
      if (!g_.has_edge(image_[c], v)) return false;
    return true;
  }

  void tick(std::uint64_t amount) {
    work_ += amount;
    if (work_ > limit_) throw BudgetError("copy counting exceeded its work limit");
  }

  void place(int pos, int v) {
    image_[pos] = v;
    used_[v] = 1;
    if (!used_bits_.empty()) used_bits_[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  void unplace(int pos, int v) {
    image_[pos] = -1;
    used_[v] = 0;
    if (!used_bits_.empty()) used_bits_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  std::uint64_t count_last(int pos) {
    const int a = plan_.anchor[pos];
    const int host = image_[a];
    if (!used_bits_.empty() && g_.words() <= static_cast<std::size_t>(g_.degree(host))) {
      tick(g_.words());
      std::uint64_t c = 0;
      const std::uint64_t* base = g_.row(host);
      for (std::size_t w = 0; w < g_.words(); ++w) {
        std::uint64_t x = base[w] & ~used_bits_[w];
        for (int chk : plan_.checks[pos]) x &= g_.row(image_[chk])[w];
        c += std::popcount(x);
      }
      return c;
    }
    tick(g_.degree(host));
    std::uint64_t c = 0;
    for (int v : g_.neighbors(host))
      if (!used_[v]) {
        bool ok = true;
        for (int chk : plan_.checks[pos])
          if (!g_.has_edge(image_[chk], v)) {
            ok = false;
            break;
          }
        c += ok;
      }
    return c;
  }

  void rec(int pos) {
    const int last = static_cast<int>(plan_.anchor.size()) - 1;
    if (pos == last && plan_.anchor[pos] >= 0) {
      total_ += count_last(pos);
      return;
    }
    const int a = plan_.anchor[pos];
    if (a >= 0) {
      auto nb = g_.neighbors(image_[a]);
      tick(nb.size());
      for (int v : nb) {
        if (!fits(pos, v)) continue;
        place(pos, v);
        if (pos == last) ++total_; else rec(pos + 1);
        unplace(pos, v);
      }
    } else {
      tick(static_cast<std::uint64_t>(g_.n()));
      for (int v = 0; v < g_.n(); ++v) {
        if (!fits(pos, v)) continue;
        place(pos, v);
        if (pos == last) ++total_; else rec(pos + 1);
        unplace(pos, v);
      }
    }
  }

  const Graph& g_;
  const Plan& plan_;
  std::uint64_t limit_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::vector<std::uint64_t> used_bits_;
  u128 total_ = 0;
  std::uint64_t work_ = 0;
};

BigInt to_big(u128 x) {
  BigInt hi = static_cast<std::uint64_t>(x >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(x);
}

BigInt backtrack_count(const std::vector<Edge>& edges, const Graph& host, std::uint64_t limit,
                       std::uint64_t* work = nullptr) {
  int s = 0;
  Plan plan = make_plan(edges, s);
  if (s > host.n()) return 0;
  Backtracker bt(host, plan, limit);
  BigInt r = to_big(bt.run());
  if (work) *work = bt.work();
  return r;
}

}  // namespace

BigInt count_labelled_copies(const Shape& shape, const Graph& host) {
  return backtrack_count(shape.edges(), host, kNoLimit);
}

BigInt count_labelled_copies(const std::vector<Edge>& shape_edges, const Graph& host,
                             std::uint64_t work_limit) {
  return backtrack_count(shape_edges, host, work_limit);
}

BigInt count_in_complete(const Shape& shape, std::uint64_t n) {
  return falling_factorial(n, static_cast<std::uint64_t>(shape.vertex_count()));
}

BigInt automorphism_count(const Shape& shape) {
  return count_labelled_copies(shape, shape.as_graph());
}

BigInt star_copy_count(const DegreeProfile& profile, int t) {
  if (t < 1) throw std::invalid_argument("star needs t >= 1");
  BigInt total = 0;
  for (const auto& [d, c] : profile.classes()) total += falling_factorial(d, t) * c;
  return total;
}

CopyCounter::CopyCounter(const Graph& host, std::uint64_t work_limit)
    : host_(host), profile_(DegreeProfile::from_graph(host)), work_limit_(work_limit) {}

const BigInt& CopyCounter::count(const Shape& shape) {
  if (auto it = memo_.find(shape.canonical_key()); it != memo_.end()) return it->second;
  BigInt value;
  if (shape.edge_count() == 0) {
    value = 1;
  } else if (shape.vertex_count() > host_.n()) {
    value = 0;
  } else if (shape.is_connected()) {
    if (auto t = shape.star_size()) {
      value = star_copy_count(profile_, *t);
    } else {
      std::uint64_t used = 0;
      value = backtrack_count(shape.edges(), host_, work_limit_ - work_used_, &used);
      work_used_ += used;
    }
  } else {
    auto comps = shape.components();
    auto smallest = std::min_element(comps.begin(), comps.end(), [](const Shape& a, const Shape& b) {
      return a.vertex_count() < b.vertex_count();
    });
    Shape c = *smallest;
    comps.erase(smallest);
    std::vector<Edge> rest;
    int offset = 0;
    for (const auto& part : comps) {
      for (auto [u, v] : part.edges()) rest.emplace_back(u + offset, v + offset);
      offset += part.vertex_count();
    }
    Shape r = Shape::from_edges(rest);
    value = count(c) * count(r);
    std::vector<Shape> overlaps;
    for_each_gluing(c.vertex_count(), r.vertex_count(), [&](const Gluing& g) {
      if (!g.empty()) overlaps.push_back(Shape::from_edges(glued_union_edges(c, r, g)));
    });
    for (const auto& u : overlaps) value -= count(u);
  }
  return memo_.emplace(shape.canonical_key(), std::move(value)).first->second;
}

}  // namespace starcount
