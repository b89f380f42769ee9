#include "starcount/shape.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "starcount/errors.hpp"

namespace starcount {

namespace {

constexpr int kMaxComponent = 12;

// Canonical labelling of one connected component by colour refinement followed
// by a pruned search over colour-respecting orderings. The key is the
// lexicographically smallest upper-triangle adjacency string (column order);
// the number of orderings reaching it is |Aut|.
class ComponentCanon {
 public:
  ComponentCanon(int s, const std::array<std::uint16_t, kMaxComponent>& adj) : s_(s), adj_(adj) {
    refine();
    cur_.assign(s * (s - 1) / 2, 0);
    perm_.assign(s, -1);
    eq_.assign(s + 1, false);
    search(0, 0);
  }

  std::vector<std::uint8_t> key() const {
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(s_));
    std::uint8_t byte = 0;
    int filled = 0;
    for (auto b : best_) {
      byte = static_cast<std::uint8_t>((byte << 1) | b);
      if (++filled == 8) {
        out.push_back(byte);
        byte = 0;
        filled = 0;
      }
    }
    if (filled > 0) out.push_back(static_cast<std::uint8_t>(byte << (8 - filled)));
    return out;
  }
  std::uint64_t aut() const { return count_; }

 private:
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }

  void refine() {
    color_.assign(s_, 0);
    for (int v = 0; v < s_; ++v) color_[v] = std::popcount(adj_[v]);
    std::size_t classes = 0;
    while (true) {
      std::vector<std::vector<int>> sig(s_);
      for (int v = 0; v < s_; ++v) {
        sig[v].push_back(color_[v]);
        std::vector<int> nb;
        for (int u = 0; u < s_; ++u)
          if (adjacent(u, v)) nb.push_back(color_[u]);
        std::sort(nb.begin(), nb.end());
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      }
      std::vector<std::vector<int>> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (int v = 0; v < s_; ++v)
        color_[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                     distinct.begin());
      if (distinct.size() == classes) break;
      classes = distinct.size();
    }
    slot_color_ = color_;
    std::sort(slot_color_.begin(), slot_color_.end());
  }

  void search(int depth, std::uint16_t used) {
    if (depth == s_) {
      if (!have_best_ || !eq_[depth]) {
        best_ = cur_;
        have_best_ = true;
        count_ = 1;
        std::fill(eq_.begin(), eq_.end(), true);
      } else {
        ++count_;
      }
      return;
    }
    const int offset = depth * (depth - 1) / 2;
    for (int v = 0; v < s_; ++v) {
      if ((used >> v) & 1U || color_[v] != slot_color_[depth]) continue;
      for (int i = 0; i < depth; ++i) cur_[offset + i] = adjacent(perm_[i], v) ? 1 : 0;
      bool child_eq = false;
      if (have_best_ && eq_[depth]) {
        int cmp = 0;
        for (int i = 0; i < depth && cmp == 0; ++i)
          cmp = static_cast<int>(cur_[offset + i]) - static_cast<int>(best_[offset + i]);
        if (cmp > 0) continue;
        child_eq = (cmp == 0);
      }
      eq_[depth + 1] = child_eq;
      perm_[depth] = v;
      search(depth + 1, static_cast<std::uint16_t>(used | (1U << v)));
    }
  }

  int s_;
  std::array<std::uint16_t, kMaxComponent> adj_;
  std::vector<int> color_;
  std::vector<int> slot_color_;
  std::vector<std::uint8_t> cur_;
  std::vector<std::uint8_t> best_;
  std::vector<int> perm_;
  std::vector<bool> eq_;
  bool have_best_ = false;
  std::uint64_t count_ = 0;
};

struct Compacted {
  int s = 0;
  std::vector<Edge> edges;
};

Compacted compact(const std::vector<Edge>& input) {
  std::vector<int> verts;
  for (auto [u, v] : input) {
    if (u == v) throw std::invalid_argument("self-loop in shape edge set");
    if (u < 0 || v < 0) throw std::invalid_argument("negative vertex in shape edge set");
    verts.push_back(u);
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  Compacted c;
  c.s = static_cast<int>(verts.size());
  for (auto [u, v] : input) {
    int a = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), u) - verts.begin());
    int b = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    if (a > b) std::swap(a, b);
    c.edges.emplace_back(a, b);
  }
  std::sort(c.edges.begin(), c.edges.end());
  if (std::adjacent_find(c.edges.begin(), c.edges.end()) != c.edges.end())
    throw std::invalid_argument("duplicate pair in shape edge set");
  return c;
}

std::vector<std::vector<int>> component_vertices(int s, const std::vector<Edge>& edges) {
  std::vector<int> parent(s);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < s; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, vs] : groups) out.push_back(std::move(vs));
  return out;
}

struct CanonResult {
  std::vector<std::uint8_t> key;
  std::uint64_t aut = 1;
};

CanonResult canonicalize(const Compacted& c) {
  CanonResult result;
  if (c.edges.empty()) return result;
  std::vector<std::pair<std::vector<std::uint8_t>, std::uint64_t>> parts;
  for (const auto& vs : component_vertices(c.s, c.edges)) {
    if (static_cast<int>(vs.size()) > kMaxComponent)
      throw std::invalid_argument("shape component with more than 12 vertices");
    std::array<std::uint16_t, kMaxComponent> adj{};
    auto local = [&](int x) {
      return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
    };
    for (auto [u, v] : c.edges) {
      if (!std::binary_search(vs.begin(), vs.end(), u)) continue;
      int a = local(u), b = local(v);
      adj[a] |= static_cast<std::uint16_t>(1U << b);
      adj[b] |= static_cast<std::uint16_t>(1U << a);
    }
    ComponentCanon canon(static_cast<int>(vs.size()), adj);
    parts.emplace_back(canon.key(), canon.aut());
  }
  std::sort(parts.begin(), parts.end());
  std::size_t run = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    result.key.insert(result.key.end(), parts[i].first.begin(), parts[i].first.end());
    result.aut *= parts[i].second;
    run = (i > 0 && parts[i].first == parts[i - 1].first) ? run + 1 : 1;
    result.aut *= run;  // permutations of isomorphic components
  }
  return result;
}

}  // namespace

Shape::Shape() = default;

Shape Shape::from_edges(const std::vector<Edge>& edges) {
  Compacted c = compact(edges);
  CanonResult canon = canonicalize(c);
  Shape s;
  s.s_ = c.s;
  s.edges_ = std::move(c.edges);
  s.key_ = std::move(canon.key);
  s.aut_ = canon.aut;
  return s;
}

Shape Shape::from_key(const std::vector<std::uint8_t>& key) {
  std::vector<Edge> edges;
  std::size_t pos = 0;
  int offset = 0;
  while (pos < key.size()) {
    const int s = key[pos++];
    if (s < 2 || s > kMaxComponent) throw ParseError("bad component size in shape key");
    const int bits = s * (s - 1) / 2;
    const std::size_t bytes = (bits + 7) / 8;
    if (pos + bytes > key.size()) throw ParseError("truncated shape key");
    int bit = 0;
    for (int j = 1; j < s; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        const std::uint8_t byte = key[pos + bit / 8];
        if ((byte >> (7 - bit % 8)) & 1U) edges.emplace_back(offset + i, offset + j);
      }
    }
    pos += bytes;
    offset += s;
  }
  Shape shape = from_edges(edges);
  if (shape.vertex_count() != offset || shape.key_ != key)
    throw ParseError("shape key is not canonical");
  return shape;
}

Shape Shape::from_key_hex(std::string_view hex) { return from_key(from_hex(hex)); }

std::string Shape::key_hex() const { return to_hex(key_); }

bool Shape::is_connected() const {
  return s_ > 0 && component_vertices(s_, edges_).size() == 1;
}

std::vector<Shape> Shape::components() const {
  std::vector<Shape> out;
  if (s_ == 0) return out;
  for (const auto& vs : component_vertices(s_, edges_)) {
    std::vector<Edge> part;
    for (auto e : edges_)
      if (std::binary_search(vs.begin(), vs.end(), e.first)) part.push_back(e);
    out.push_back(from_edges(part));
  }
  return out;
}

std::vector<int> Shape::degrees() const {
  std::vector<int> d(s_, 0);
  for (auto [u, v] : edges_) {
    ++d[u];
    ++d[v];
  }
  return d;
}

std::optional<int> Shape::star_size() const {
  const int t = static_cast<int>(edges_.size());
  if (t == 0 || s_ != t + 1) return std::nullopt;
  auto d = degrees();
  const int centers = static_cast<int>(std::count(d.begin(), d.end(), t));
  if (t == 1 || centers == 1) return t;
  return std::nullopt;
}

std::vector<std::uint8_t> canonical_form(const std::vector<Edge>& edges) {
  return canonicalize(compact(edges)).key;
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ParseError(std::string("bad hex digit '") + c + "'");
  };
  if (hex.size() % 2 != 0) throw ParseError("odd-length hex string");
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return out;
}

std::vector<Shape> enumerate_shapes(int max_edges) {
  if (max_edges < 1) throw std::invalid_argument("max_edges must be at least 1");
  if (max_edges > kMaxEnumeratedEdges)
    throw BudgetError("shape enumeration supports at most 8 edges");
  // Every shape with m edges loses one edge to a shape with m-1 edges, so
  // growing each level by one edge in all possible ways reaches every class.
  std::vector<Shape> all;
  std::map<std::vector<std::uint8_t>, Shape> level;
  Shape k2 = star_shape(1);
  level.emplace(k2.canonical_key(), k2);
  for (int m = 1;; ++m) {
    for (auto& [key, s] : level) all.push_back(s);
    if (m == max_edges) break;
    std::map<std::vector<std::uint8_t>, Shape> next;
    auto add = [&](std::vector<Edge> e) {
      Shape s = Shape::from_edges(e);
      next.emplace(s.canonical_key(), std::move(s));
    };
    for (auto& [key, s] : level) {
      const int n = s.vertex_count();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          Edge e{u, v};
          if (std::binary_search(s.edges().begin(), s.edges().end(), e)) continue;
          auto grown = s.edges();
          grown.push_back(e);
          add(grown);
        }
      for (int u = 0; u < n; ++u) {
        auto grown = s.edges();
        grown.emplace_back(u, n);
        add(grown);
      }
      auto grown = s.edges();
      grown.emplace_back(n, n + 1);
      add(grown);
    }
    level = std::move(next);
  }
  return all;
}

Shape star_shape(int t) {
  if (t < 1) throw std::invalid_argument("star needs t >= 1");
  std::vector<Edge> e;
  for (int i = 1; i <= t; ++i) e.emplace_back(0, i);
  return Shape::from_edges(e);
}

Shape clique_shape(int k) {
  if (k < 2) throw std::invalid_argument("clique shape needs k >= 2");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Shape::from_edges(e);
}

Shape path_shape(int edges) {
  if (edges < 1) throw std::invalid_argument("path needs at least one edge");
  std::vector<Edge> e;
  for (int i = 0; i < edges; ++i) e.emplace_back(i, i + 1);
  return Shape::from_edges(e);
}

Shape cycle_shape(int length) {
  if (length < 3) throw std::invalid_argument("cycle needs length >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < length; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, length - 1);
  return Shape::from_edges(e);
}

Shape matching_shape(int pairs) {
  if (pairs < 1) throw std::invalid_argument("matching needs at least one pair");
  std::vector<Edge> e;
  for (int i = 0; i < pairs; ++i) e.emplace_back(2 * i, 2 * i + 1);
  return Shape::from_edges(e);
}

}  // namespace starcount
