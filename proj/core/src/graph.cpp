#include "starcount/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "starcount/errors.hpp"

namespace starcount {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  build();
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  build();
}

Graph Graph::from_sorted_unique(int n, std::vector<Edge> edges) {
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.build();
  return g;
}

void Graph::build() {
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  nbrs_.assign(edges_.size() * 2, 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so every neighbor list comes out sorted.
  for (const auto& [u, v] : edges_) nbrs_[fill[v]++] = u;
  for (const auto& [u, v] : edges_) nbrs_[fill[u]++] = v;

  bits_.clear();
  words_ = 0;
  if (n_ > 0 && n_ <= kDenseLimit) {
    words_ = (static_cast<std::size_t>(n_) + 63) / 64;
    bits_.assign(words_ * n_, 0);
    for (const auto& [u, v] : edges_) {
      bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
      bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
}

std::vector<std::uint64_t> Graph::degrees() const {
  std::vector<std::uint64_t> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (!bits_.empty()) return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::without_isolated(std::vector<int>* kept) const {
  std::vector<int> relabel(n_, -1);
  std::vector<int> keep;
  for (int v = 0; v < n_; ++v) {
    if (degree(v) > 0) {
      relabel[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  }
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (const auto& [u, v] : edges_) e.emplace_back(relabel[u], relabel[v]);
  if (kept) *kept = keep;
  return from_sorted_unique(static_cast<int>(keep.size()), std::move(e));
}

Graph Graph::complement() const {
  std::vector<Edge> e;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) e.emplace_back(u, v);
  return from_sorted_unique(n_, std::move(e));
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string& what) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": " + what);
    };
    if (n < 0) {
      if (first != "n" || !(ls >> n) || n < 0) fail("expected 'n <vertex_count>'");
    } else {
      long long u = 0, v = 0;
      try {
        std::size_t pos = 0;
        u = std::stoll(first, &pos);
        if (pos != first.size()) fail("bad vertex '" + first + "'");
      } catch (const std::logic_error&) {
        fail("bad vertex '" + first + "'");
      }
      if (!(ls >> v)) fail("expected 'u v'");
      if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  if (n < 0) throw ParseError("edge list: missing 'n <vertex_count>' header");
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.n() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

DegreeProfile DegreeProfile::from_graph(const Graph& g) { return from_degrees(g.degrees()); }

DegreeProfile DegreeProfile::from_degrees(const std::vector<std::uint64_t>& degrees) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto d : degrees) ++counts[d];
  return from_classes({counts.begin(), counts.end()});
}

DegreeProfile DegreeProfile::from_classes(std::vector<Class> classes) {
  std::map<std::uint64_t, std::uint64_t, std::greater<>> merged;
  for (const auto& [d, c] : classes)
    if (c > 0) merged[d] += c;
  DegreeProfile p;
  p.classes_.assign(merged.begin(), merged.end());
  for (const auto& [d, c] : p.classes_) {
    p.vertices_ += c;
    p.degree_sum_ += d * c;
  }
  if (p.degree_sum_ % 2 != 0) throw std::invalid_argument("degree sum is odd");
  if (!p.classes_.empty() && p.max_degree() + 1 > p.vertices_)
    throw std::invalid_argument("max degree exceeds vertex count - 1");
  return p;
}

}  // namespace starcount
