#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ttforge/rose_map.hpp"

namespace ttf {

enum class Color { purple, red };

struct ColoredEdge {
  Turn turn;
  Color color = Color::purple;
  bool operator<(const ColoredEdge& o) const {
    if (turn == o.turn) return color < o.color;
    return turn < o.turn;
  }
  bool operator==(const ColoredEdge& o) const { return turn == o.turn && color == o.color; }
};

struct LttStructure {
  int rank = 0;
  std::vector<Color> vertex;        // by dir_index
  std::vector<ColoredEdge> edges;   // sorted; duplicates kept so ltt3 can be checked

  void add_edge(const Turn& t);     // colored by the ltt2 rule
  void normalize();
  bool has_colored(const Turn& t) const;
  Dir red_vertex() const;           // 0 unless exactly one red vertex
  std::optional<Turn> red_edge() const;
  Dir dbar_a() const;               // purple end of the red edge
  Dir d_a() const { return bar(dbar_a()); }
  std::set<Turn> purple_edges() const;
  std::vector<Dir> purple_vertices() const;
  bool operator==(const LttStructure& o) const {
    return rank == o.rank && vertex == o.vertex && edges == o.edges;
  }
};

struct LttCheck {
  bool ok = true;
  std::string axiom;
  std::string witness;
};
LttCheck validate(const LttStructure& G, bool star);

LttStructure build_ltt(const RoseMap& g);
// complete purple graph on every vertex except `red`, plus red edge [red, other]
LttStructure complete_structure(int rank, Dir red, Dir other);
// with purple edges given explicitly
LttStructure make_structure(int rank, Dir red, Dir other, const std::set<Turn>& purple);
LttStructure standard_structure(int r, int j);
inline bool is_standard_index(int r, int j) { return j >= 1 && j <= 2 * r - 2; }

// vertex walk v0 v1 ... ; the first edge is colored and edges alternate with black
struct SmoothPath {
  std::vector<Dir> v;
  bool operator==(const SmoothPath& o) const { return v == o.v; }
};
SmoothPath path_from_labels(const std::vector<int>& xlabels);
std::vector<int> path_labels(const SmoothPath& p);
SmoothPath splice(const std::vector<SmoothPath>& parts);

// a sub-view of an ltt structure: which vertices, black edges and colored edges remain
struct LttView {
  int rank = 0;
  std::vector<bool> vertex;  // by dir_index
  std::vector<bool> black;   // by edge - 1
  std::set<Turn> colored;
  bool operator==(const LttView& o) const {
    return rank == o.rank && vertex == o.vertex && black == o.black && colored == o.colored;
  }
};
LttView full_view(const LttStructure& G);
bool is_smooth(const LttView& V, const SmoothPath& p, std::string* why = nullptr);
bool is_smooth(const LttStructure& G, const SmoothPath& p, std::string* why = nullptr);

struct BirecurrenceResult {
  bool birecurrent = false;
  SmoothPath witness;  // closed: the last black edge returns to v[0]
};
BirecurrenceResult is_birecurrent(const LttStructure& G);
// closed smooth walk that covers every edge of G
bool check_covering_loop(const LttStructure& G, const SmoothPath& loop, std::string* why = nullptr);

struct SubgraphTrace {
  LttView result;
  int iterations = 0;
};
SubgraphTrace construction_subgraph_traced(const LttStructure& G);
LttView construction_subgraph(const LttStructure& G);
LttView construction_subgraph(const LttView& start, Dir red_vertex);

SmoothPath standard_loop(int r, int i, int k);  // L_{i,k}
SmoothPath standard_path(int r, int i, int k);  // T_{i,k}

// edge-pair permutation equivalence, brute force over r! 2^r relabelings
bool epp_equivalent(const LttStructure& a, const LttStructure& b);

std::string to_dot(const LttStructure& G, const std::string& name = "ltt");

}  // namespace ttf
