#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ttforge/ltt.hpp"
#include "ttforge/rose_map.hpp"

namespace ttf {

// oriented edge j maps to i j
struct Fold {
  Dir j = 0, i = 0;
  RoseMap map(int rank) const { return RoseMap::fold(rank, j, i); }
  Turn folded() const { return Turn(j, i); }
  Turn created() const { return Turn(bar(i), j); }
  Word image(Dir d) const;  // image of a single letter
  bool operator==(const Fold& o) const { return j == o.j && i == o.i; }
};

enum class TripleKind { extension, switch_ };
const char* kind_name(TripleKind k);

struct TripleCheck {
  bool ok = true;
  TripleKind kind = TripleKind::extension;
  std::string axiom;
  std::string message;
  Turn determining;
};
TripleCheck check_triple(const Fold& f, const LttStructure& src, const LttStructure& dst);
// the destination structure the gt/ext/sw axioms force from a source structure
LttStructure forced_destination(const Fold& f, const LttStructure& src);

struct FoldTriple {
  Fold fold;
  LttStructure source, dest;
  TripleKind kind = TripleKind::extension;
  Turn determining_edge;
};
FoldTriple make_triple(const Fold& f, const LttStructure& src, const LttStructure& dst);  // throws on violation

struct StructureMap {
  std::vector<Dir> vertex;                      // by dir_index
  std::vector<std::pair<Turn, Turn>> edges;     // colored edge of source -> image in dest
};
StructureMap induced_structure_map(const FoldTriple& t);

struct Composition {
  int rank = 0;
  std::vector<FoldTriple> triples;  // time order: triples[0] acts first
  bool is_construction() const;
  bool is_purified() const;         // extensions only
  RoseMap automorphism() const;
};
Composition make_composition(int rank, const std::vector<Fold>& folds, const LttStructure& g0);

SmoothPath construction_path(const Composition& c);
// y picks the purple end of the switch source's red edge; default is the first valid label
Composition composition_from_path(const LttStructure& G, const SmoothPath& path, std::optional<Dir> y = {});
std::set<Turn> purple_edges_built(const Composition& c);

struct SwitchCheck {
  bool ok = true;
  std::string message;
  int n = -1, l = -1;
};
SwitchCheck check_switch_sequence(const Composition& c);
SmoothPath switch_path(const Composition& c);

RoseMap compose_folds(int rank, const std::vector<Fold>& folds);
// f_k: the composite starting right after fold k (f_0 is the whole map)
RoseMap rotation(int rank, const std::vector<Fold>& folds, int k);
DirectionMap rotation_dmap(int rank, const std::vector<Fold>& folds, int k);
// each created turn must stay legal for the next rotation (no cancellation inside the folds)
bool is_tight(int rank, const std::vector<Fold>& folds, int* bad = nullptr);

struct Decomposition {
  int rank = 0;
  std::vector<Fold> folds;
  std::vector<LttStructure> structures;  // empty, just G_0, or G_0..G_n
  std::optional<RoseMap> expected;
};

struct DecompReport {
  bool ok = true;
  std::string condition;  // first failing condition
  std::string message;
  int location = -1;      // fold index (1-based) when relevant
  RoseMap composite;
  bool matches_expected = true;
  std::vector<TripleKind> kinds;
  std::vector<LttStructure> structures;  // G_0..G_n as used
};
DecompReport validate_ideal_decomposition(const Decomposition& d);

struct ScheduleReport {
  bool holds = false;
  bool red_vertex_kept = false;       // pure parts keep the red vertex
  bool strict_same_structure = false; // pure parts start and end on the same structure
  bool coverage = false;
  std::vector<std::pair<int, int>> blocks;  // [first, last] fold indices, 1-based, cyclic
  std::vector<int> uncovered;               // edge indices with no red switch-source vertex
  std::string message;
};
ScheduleReport pf_by_switch_schedule(const DecompReport& validated);

}  // namespace ttf
