#include "starcount/models.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "starcount/errors.hpp"
#include "starcount/numerics.hpp"
#include "starcount/rng.hpp"

namespace starcount {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad integer '" + std::string(s) + "' in " + std::string(what));
  return v;
}

double parse_real(std::string_view s, std::string_view what) {
  try {
    std::size_t pos = 0;
    std::string str(s);
    double v = std::stod(str, &pos);
    if (pos != str.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad number '" + std::string(s) + "' in " + std::string(what));
  }
}

std::vector<std::string_view> split_args(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(s.substr(0, comma));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_real(double x) { return format_number(x); }

}  // namespace

HSpec parse_hspec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("planted graph needs 'kind:args', got '" + std::string(text) + "'");
  auto kind = text.substr(0, colon);
  auto rest = text.substr(colon + 1);
  HSpec h;
  if (kind == "file") {
    if (rest.empty()) throw ParseError("file: needs a path");
    h = hspec::Explicit{read_edge_list_file(std::string(rest)), std::string(rest)};
  } else {
    auto args = split_args(rest);
    auto need = [&](std::size_t count) {
      if (args.size() != count)
        throw ParseError("planted graph '" + std::string(kind) + "' takes " + std::to_string(count) +
                         " argument(s)");
    };
    if (kind == "clique") {
      need(1);
      h = hspec::Clique{parse_int(args[0], text)};
    } else if (kind == "star") {
      need(1);
      h = hspec::Star{parse_int(args[0], text)};
    } else if (kind == "biclique") {
      need(2);
      h = hspec::Biclique{parse_int(args[0], text), parse_int(args[1], text)};
    } else if (kind == "cycle") {
      need(1);
      h = hspec::Cycle{parse_int(args[0], text)};
    } else if (kind == "matching") {
      need(1);
      h = hspec::Matching{parse_int(args[0], text)};
    } else if (kind == "path") {
      need(1);
      h = hspec::Path{parse_int(args[0], text)};
    } else if (kind == "er") {
      need(2);
      h = hspec::ErdosRenyiSub{parse_int(args[0], text), parse_real(args[1], text)};
    } else {
      throw ParseError("unknown H kind '" + std::string(kind) + "'");
    }
  }
  try {
    validate_hspec(h);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return h;
}

void validate_hspec(const HSpec& h) {
  auto positive = [](int x, const char* what) {
    if (x < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
  };
  std::visit(Overloaded{
                 [](const hspec::Explicit&) {},
                 [&](const hspec::Clique& c) { positive(c.k, "clique size"); },
                 [&](const hspec::Star& s) { positive(s.t, "star size"); },
                 [&](const hspec::Biclique& b) {
                   positive(b.b, "biclique side");
                   if (b.a < b.b) throw std::invalid_argument("biclique needs a >= b");
                 },
                 [&](const hspec::Cycle& c) {
                   if (c.length < 3) throw std::invalid_argument("cycle length must be >= 3");
                 },
                 [&](const hspec::Matching& m) { positive(m.pairs, "matching size"); },
                 [&](const hspec::Path& p) { positive(p.length, "path length"); },
                 [&](const hspec::ErdosRenyiSub& e) {
                   positive(e.k, "er size");
                   if (!(e.q > 0.0 && e.q <= 1.0)) throw std::invalid_argument("er needs q in (0, 1]");
                 },
             },
             h);
}

std::string format_hspec(const HSpec& h) {
  return std::visit(
      Overloaded{
          [](const hspec::Explicit& e) { return "file:" + e.path; },
          [](const hspec::Clique& c) { return "clique:" + std::to_string(c.k); },
          [](const hspec::Star& s) { return "star:" + std::to_string(s.t); },
          [](const hspec::Biclique& b) {
            return "biclique:" + std::to_string(b.a) + "," + std::to_string(b.b);
          },
          [](const hspec::Cycle& c) { return "cycle:" + std::to_string(c.length); },
          [](const hspec::Matching& m) { return "matching:" + std::to_string(m.pairs); },
          [](const hspec::Path& p) { return "path:" + std::to_string(p.length); },
          [](const hspec::ErdosRenyiSub& e) {
            return "er:" + std::to_string(e.k) + "," + format_real(e.q);
          },
      },
      h);
}

int hspec_vertex_count(const HSpec& h) {
  return std::visit(Overloaded{
                        [](const hspec::Explicit& e) { return e.graph.n(); },
                        [](const hspec::Clique& c) { return c.k; },
                        [](const hspec::Star& s) { return s.t + 1; },
                        [](const hspec::Biclique& b) { return b.a + b.b; },
                        [](const hspec::Cycle& c) { return c.length; },
                        [](const hspec::Matching& m) { return 2 * m.pairs; },
                        [](const hspec::Path& p) { return p.length + 1; },
                        [](const hspec::ErdosRenyiSub& e) { return e.k; },
                    },
                    h);
}

bool hspec_is_random(const HSpec& h) { return std::holds_alternative<hspec::ErdosRenyiSub>(h); }

Graph realize_h(const HSpec& h, std::uint64_t seed) {
  validate_hspec(h);
  std::vector<Edge> e;
  return std::visit(
      Overloaded{
          [&](const hspec::Explicit& x) { return x.graph; },
          [&](const hspec::Clique& c) {
            for (int i = 0; i < c.k; ++i)
              for (int j = i + 1; j < c.k; ++j) e.emplace_back(i, j);
            return Graph::from_sorted_unique(c.k, std::move(e));
          },
          [&](const hspec::Star& s) {
            for (int i = 1; i <= s.t; ++i) e.emplace_back(0, i);
            return Graph::from_sorted_unique(s.t + 1, std::move(e));
          },
          [&](const hspec::Biclique& b) {
            for (int i = 0; i < b.a; ++i)
              for (int j = 0; j < b.b; ++j) e.emplace_back(i, b.a + j);
            return Graph::from_sorted_unique(b.a + b.b, std::move(e));
          },
          [&](const hspec::Cycle& c) {
            for (int i = 0; i + 1 < c.length; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(0, c.length - 1);
            return Graph(c.length, std::move(e));
          },
          [&](const hspec::Matching& m) {
            for (int i = 0; i < m.pairs; ++i) e.emplace_back(2 * i, 2 * i + 1);
            return Graph::from_sorted_unique(2 * m.pairs, std::move(e));
          },
          [&](const hspec::Path& p) {
            for (int i = 0; i < p.length; ++i) e.emplace_back(i, i + 1);
            return Graph::from_sorted_unique(p.length + 1, std::move(e));
          },
          [&](const hspec::ErdosRenyiSub& x) {
            Rng rng(seed);
            return Graph::from_sorted_unique(x.k, sample_gnp_edges(x.k, x.q, rng));
          },
      },
      h);
}

void PlantedModel::validate() const {
  if (n < 1) throw std::invalid_argument("model needs n >= 1");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("model needs p in (0, 1)");
  validate_hspec(h);
  if (hspec_vertex_count(h) > n) {
    // Isolated vertices of an explicit H are stripped before planting.
    if (auto* e = std::get_if<hspec::Explicit>(&h)) {
      if (e->graph.without_isolated().n() <= n) return;
    }
    throw EmbeddingError("H has more vertices than the ambient graph");
  }
}

std::string PlantedModel::describe() const {
  std::string s = "n=" + std::to_string(n) + " p=" + format_real(p) + " h=" + format_hspec(h);
  if (freeze_h) s += " freeze_h=" + std::to_string(h_seed);
  return s;
}

Graph sample_null(const PlantedModel& model, std::uint64_t seed) {
  Rng rng(seed);
  return Graph::from_sorted_unique(model.n, sample_gnp_edges(model.n, model.p, rng));
}

PlantedSample sample_planted(const PlantedModel& model, std::uint64_t seed) {
  model.validate();
  Rng rng(seed);
  const std::uint64_t h_seed = model.freeze_h ? model.h_seed : rng();
  PlantedSample out;
  out.realized_h = realize_h(model.h, h_seed).without_isolated();
  const int vh = out.realized_h.n();
  if (vh > model.n) throw EmbeddingError("H has more vertices than the ambient graph");

  // Uniform injective map by a partial Fisher-Yates shuffle.
  std::vector<int> perm(model.n);
  for (int i = 0; i < model.n; ++i) perm[i] = i;
  for (int i = 0; i < vh; ++i) {
    std::uniform_int_distribution<int> pick(i, model.n - 1);
    std::swap(perm[i], perm[pick(rng)]);
  }
  out.embedding.assign(perm.begin(), perm.begin() + vh);

  std::vector<Edge> edges = sample_gnp_edges(model.n, model.p, rng);
  const std::size_t noise = edges.size();
  for (auto [u, v] : out.realized_h.edges()) {
    int a = out.embedding[u], b = out.embedding[v];
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin() + static_cast<std::ptrdiff_t>(noise), edges.end());
  std::vector<Edge> merged;
  merged.reserve(edges.size());
  std::set_union(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(noise),
                 edges.begin() + static_cast<std::ptrdiff_t>(noise), edges.end(),
                 std::back_inserter(merged));
  out.graph = Graph::from_sorted_unique(model.n, std::move(merged));
  return out;
}

}  // namespace starcount
