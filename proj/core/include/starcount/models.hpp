#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "starcount/graph.hpp"

namespace starcount {

namespace hspec {
struct Explicit {
  Graph graph;
  std::string path;  // source file, kept for round-tripping the text form
};
struct Clique { int k; };
struct Star { int t; };
struct Biclique { int a, b; };
struct Cycle { int length; };
struct Matching { int pairs; };
struct Path { int length; };  // number of edges
struct ErdosRenyiSub {
  int k;
  double q;
};
}  // namespace hspec

using HSpec = std::variant<hspec::Explicit, hspec::Clique, hspec::Star, hspec::Biclique,
                           hspec::Cycle, hspec::Matching, hspec::Path, hspec::ErdosRenyiSub>;

// "clique:k", "star:t", "biclique:a,b", "cycle:L", "matching:k", "path:L",
// "er:k,q" or "file:<path>". Throws ParseError.
HSpec parse_hspec(std::string_view text);
std::string format_hspec(const HSpec& h);
void validate_hspec(const HSpec& h);

// Vertex count of the realized H, before isolated vertices are stripped.
int hspec_vertex_count(const HSpec& h);
bool hspec_is_random(const HSpec& h);

// The concrete H. Only ErdosRenyiSub depends on the seed.
Graph realize_h(const HSpec& h, std::uint64_t seed);

struct PlantedModel {
  int n = 0;
  double p = 0.5;
  HSpec h = hspec::Clique{2};
  // Keep one G(k, q) draw (from h_seed) for every planted sample.
  bool freeze_h = false;
  std::uint64_t h_seed = 0;

  void validate() const;
  std::string describe() const;
};

struct PlantedSample {
  Graph graph;
  std::vector<int> embedding;  // vertex i of realized_h (isolated stripped) -> graph vertex
  Graph realized_h;            // isolated vertices stripped
};

Graph sample_null(const PlantedModel& model, std::uint64_t seed);
PlantedSample sample_planted(const PlantedModel& model, std::uint64_t seed);

}  // namespace starcount
