#include "starcount/statistics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <map>
#include <stdexcept>

#include "starcount/bigint.hpp"
#include "starcount/counting.hpp"
#include "starcount/numerics.hpp"

namespace starcount {

namespace {

void check_p(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0, 1)");
}

int parse_positive(std::string_view s, std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad integer in statistic '" + std::string(text) + "'");
  return v;
}

}  // namespace

EdgeWeighting EdgeWeighting::for_p(double p) {
  check_p(p);
  return {std::sqrt((1.0 - p) / p), -std::sqrt(p / (1.0 - p))};
}

double chi(const std::vector<Edge>& pairs, const Graph& g, double p) {
  const auto w = EdgeWeighting::for_p(p);
  double prod = 1.0;
  for (auto [u, v] : pairs) {
    if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n())
      throw std::invalid_argument("chi: pair outside the vertex set");
    prod *= g.has_edge(u, v) ? w.a : w.b;
  }
  return prod;
}

double signed_count_naive(const Shape& shape, const Graph& g, double p, std::uint64_t work_limit) {
  const auto w = EdgeWeighting::for_p(p);
  const int s = shape.vertex_count();
  const int n = g.n();
  if (s > n) return 0.0;  // no injective maps
  if (std::pow(static_cast<double>(n), s) > static_cast<double>(work_limit))
    throw BudgetError("naive signed count: n^s exceeds the work limit");
  std::vector<std::vector<int>> earlier(s);
  for (auto [u, v] : shape.edges()) earlier[std::max(u, v)].push_back(std::min(u, v));

  std::vector<int> image(s, -1);
  std::vector<char> used(n, 0);
  long double total = 0.0L;
  auto rec = [&](auto&& self, int pos, long double prod) -> void {
    if (pos == s) {
      total += prod;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      long double next = prod;
      for (int u : earlier[pos]) next *= g.has_edge(image[u], v) ? w.a : w.b;
      image[pos] = v;
      used[v] = 1;
      self(self, pos + 1, next);
      used[v] = 0;
    }
  };
  rec(rec, 0, 1.0L);
  return static_cast<double>(total / static_cast<long double>(shape.aut_count()));
}

double signed_star_count(int t, const Graph& g, double p) {
  const auto w = EdgeWeighting::for_p(p);
  const int n = g.n();
  if (t < 1) throw std::invalid_argument("signed star count needs t >= 1");
  if (t > n - 1) return 0.0;
  std::map<int, std::uint64_t> hist;
  for (int v = 0; v < n; ++v) ++hist[g.degree(v)];
  std::vector<double> terms;
  std::vector<double> inner;
  for (const auto& [d, count] : hist) {
    inner.clear();
    for (int j = 0; j <= t; ++j) {
      const BigInt c = binomial(d, j) * binomial(n - 1 - d, t - j);
      if (c.is_zero()) continue;
      inner.push_back(to_double(c) * std::pow(w.a, j) * std::pow(w.b, t - j));
    }
    terms.push_back(static_cast<double>(count) * pairwise_sum(inner));
  }
  const double total = pairwise_sum(terms);
  // A single edge has two possible centers.
  return t == 1 ? total / 2.0 : total;
}

double signed_shape_count(const Shape& shape, const Graph& g, double p, std::uint64_t work_limit) {
  const auto w = EdgeWeighting::for_p(p);
  const int s = shape.vertex_count();
  const auto n = static_cast<std::uint64_t>(g.n());
  if (s > g.n()) return 0.0;
  const std::size_t m = shape.edge_count();
  if (m > 20) throw BudgetError("signed shape count: too many edge subsets");
  struct Group {
    Shape sub;
    std::uint64_t subsets = 0;
  };
  // Subsets grouped by (|T|, isomorphism class of S[T]).
  std::map<std::pair<std::size_t, std::vector<std::uint8_t>>, Group> groups;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Edge> t;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) t.push_back(shape.edges()[i]);
    Shape sub = Shape::from_edges(t);
    auto& grp = groups[{t.size(), sub.canonical_key()}];
    if (grp.subsets == 0) grp.sub = std::move(sub);
    ++grp.subsets;
  }
  CopyCounter counter(g, work_limit);
  const double delta = w.a - w.b;
  std::vector<double> terms;
  for (const auto& [key, grp] : groups) {
    const std::size_t tsize = key.first;
    const int vt = grp.sub.vertex_count();
    const BigInt maps = counter.count(grp.sub) * falling_factorial(n - vt, s - vt) * grp.subsets;
    if (maps.is_zero()) continue;
    terms.push_back(to_double(maps) * std::pow(w.b, static_cast<double>(m - tsize)) *
                    std::pow(delta, static_cast<double>(tsize)));
  }
  return pairwise_sum(terms) / static_cast<double>(shape.aut_count());
}

std::uint64_t unsigned_clique_count(int k, const Graph& g, std::uint64_t work_limit) {
  if (k < 1) throw std::invalid_argument("clique count needs k >= 1");
  const int n = g.n();
  if (k == 1) return static_cast<std::uint64_t>(n);
  if (k == 2) return g.edge_count();
  // Degeneracy order (repeatedly remove a minimum-degree vertex).
  std::vector<int> deg(n), rank(n, -1);
  int maxd = 0;
  for (int v = 0; v < n; ++v) maxd = std::max(maxd, deg[v] = g.degree(v));
  std::vector<std::vector<int>> buckets(maxd + 1);
  for (int v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  int next_rank = 0, cur = 0;
  while (next_rank < n) {
    cur = std::max(cur - 1, 0);
    while (buckets[cur].empty()) ++cur;
    int v = buckets[cur].back();
    buckets[cur].pop_back();
    if (rank[v] >= 0 || deg[v] != cur) continue;
    rank[v] = next_rank++;
    for (int u : g.neighbors(v))
      if (rank[u] < 0) buckets[--deg[u]].push_back(u);
  }
  std::vector<std::vector<int>> out(n);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v))
      if (rank[u] > rank[v]) out[v].push_back(u);  // neighbor lists are sorted, so out is too

  std::uint64_t work = 0;
  auto tick = [&](std::uint64_t amount) {
    work += amount;
    if (work > work_limit) throw BudgetError("clique count exceeded its work limit");
  };
  std::uint64_t total = 0;
  auto rec = [&](auto&& self, const std::vector<int>& cand, int need) -> void {
    if (need == 1) {
      total += cand.size();
      return;
    }
    std::vector<int> next;
    // The orientation already makes each clique appear once, rooted at its lowest rank.
    for (int u : cand) {
      const auto& ou = out[u];
      if (static_cast<int>(ou.size()) < need - 1) continue;
      next.clear();
      tick(cand.size() + ou.size());
      std::set_intersection(cand.begin(), cand.end(), ou.begin(), ou.end(),
                            std::back_inserter(next));
      if (static_cast<int>(next.size()) >= need - 1) self(self, next, need - 1);
    }
  };
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(out[v].size()) < k - 1) continue;
    tick(1);
    rec(rec, out[v], k - 1);
  }
  return total;
}

double closed_path_trace(int l, const Graph& g, std::uint64_t work_limit, bool reduced) {
  const int n = g.n();
  if (l < 3 || l > n) throw std::invalid_argument("closed path trace needs 3 <= l <= n");
  if (falling_factorial(n, l) > BigInt(work_limit))
    throw BudgetError("closed path trace: n_(l) exceeds the work limit");
  std::vector<std::int8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) m[u * n + v] = g.has_edge(u, v) ? 1 : -1;
  auto at = [&](int u, int v) { return static_cast<std::int64_t>(m[u * n + v]); };

  std::vector<int> path(l, -1);
  std::vector<char> used(n, 0);
  std::int64_t total = 0;

  if (!reduced) {
    // Two-step closing sums: w2[x][y] = sum_u M_xu M_uy over all u.
    std::vector<std::int64_t> w2(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
      for (int u = 0; u < n; ++u) {
        const auto mxu = at(x, u);
        if (mxu == 0) continue;
        for (int y = 0; y < n; ++y) w2[x * n + y] += mxu * at(u, y);
      }
    // Extend simple paths to l-1 vertices; the last vertex ranges over
    // everything outside the path, i.e. w2 minus the interior path vertices.
    auto rec = [&](auto&& self, int depth, std::int64_t prod) -> void {
      if (depth == l - 1) {
        const int first = path[0], last = path[depth - 1];
        std::int64_t close = w2[last * n + first];
        for (int i = 1; i + 1 < depth; ++i) close -= at(last, path[i]) * at(path[i], first);
        total += prod * close;
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        path[depth] = v;
        used[v] = 1;
        self(self, depth + 1, depth == 0 ? 1 : prod * at(path[depth - 1], v));
        used[v] = 0;
      }
    };
    rec(rec, 0, 1);
    return static_cast<double>(total);
  }

  auto rec = [&](auto&& self, int depth, std::int64_t prod) -> void {
    if (depth == l) {
      if (path[1] < path[l - 1]) total += prod * at(path[l - 1], path[0]);
      return;
    }
    for (int v = path[0] + 1; v < n; ++v) {
      if (used[v]) continue;
      path[depth] = v;
      used[v] = 1;
      self(self, depth + 1, prod * at(path[depth - 1], v));
      used[v] = 0;
    }
  };
  for (int first = 0; first < n; ++first) {
    path[0] = first;
    used[first] = 1;
    rec(rec, 1, 1);
    used[first] = 0;
  }
  return static_cast<double>(total) * 2.0 * l;
}

void TestStatistic::validate() const {
  check_p(p);
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, stat::SignedStarCount>) {
          if (s.t < 1) throw std::invalid_argument("star statistic needs t >= 1");
        } else if constexpr (std::is_same_v<T, stat::UnsignedCliqueCount>) {
          if (s.k < 2) throw std::invalid_argument("clique count needs k >= 2");
        } else if constexpr (std::is_same_v<T, stat::ClosedPathTrace>) {
          if (s.l < 3) throw std::invalid_argument("trace needs l >= 3");
        } else {
          if (s.shape.edge_count() == 0) throw std::invalid_argument("empty shape statistic");
        }
      },
      kind);
}

TestStatistic parse_statistic(std::string_view text, double p, std::uint64_t work_limit) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("statistic needs 'kind:arg', got '" + std::string(text) + "'");
  auto kind = text.substr(0, colon);
  auto arg = text.substr(colon + 1);
  TestStatistic st;
  st.p = p;
  st.work_limit = work_limit;
  st.text = std::string(text);
  if (kind == "star") {
    st.kind = stat::SignedStarCount{parse_positive(arg, text)};
  } else if (kind == "clique-count") {
    st.kind = stat::UnsignedCliqueCount{parse_positive(arg, text)};
  } else if (kind == "trace") {
    bool reduced = false;
    if (auto comma = arg.find(','); comma != std::string_view::npos) {
      if (arg.substr(comma + 1) != "reduced") throw ParseError("trace option must be 'reduced'");
      reduced = true;
      arg = arg.substr(0, comma);
    }
    st.kind = stat::ClosedPathTrace{parse_positive(arg, text), reduced};
  } else if (kind == "shape") {
    const std::string s(arg);
    std::error_code ec;
    if (std::filesystem::is_regular_file(s, ec))
      st.kind = stat::SignedShapeCount{Shape::from_graph(read_edge_list_file(s))};
    else
      st.kind = stat::SignedShapeCount{Shape::from_key_hex(arg)};
  } else {
    throw ParseError("unknown statistic '" + std::string(kind) + "'");
  }
  try {
    st.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return st;
}

double evaluate(const TestStatistic& st, const Graph& g) {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, stat::SignedStarCount>) {
          return signed_star_count(s.t, g, st.p);
        } else if constexpr (std::is_same_v<T, stat::UnsignedCliqueCount>) {
          return static_cast<double>(unsigned_clique_count(s.k, g, st.work_limit));
        } else if constexpr (std::is_same_v<T, stat::ClosedPathTrace>) {
          return closed_path_trace(s.l, g, st.work_limit, s.reduced);
        } else {
          return signed_shape_count(s.shape, g, st.p, st.work_limit);
        }
      },
      st.kind);
}

}  // namespace starcount
