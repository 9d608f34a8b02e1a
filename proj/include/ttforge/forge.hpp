#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttforge/decomposition.hpp"
#include "ttforge/nielsen.hpp"
#include "ttforge/whitehead.hpp"

namespace ttf {

enum class Verdict { yes, no, unknown };
const char* verdict_name(Verdict v);

struct FicReport {
  bool valid_decomposition = false;
  std::string decomposition_message;
  bool train_track = false;
  Verdict pnp_free = Verdict::unknown;
  PnpReport pnp;
  bool pf = false;
  std::optional<int> pf_exponent;
  bool lw_connected = false;
  int lw_components = 0;
  Verdict verdict = Verdict::unknown;
  // filled only when pnp_free is certified
  std::optional<WhiteheadGraph> ideal;
};

FicReport verify_fic(const Decomposition& d, const Budget& budget = {}, int jobs = 1);

struct ConstructionBlock {
  std::string name;
  int first = 0, last = 0;  // 1-based fold indices
  SmoothPath path;
};

struct GeneratedRep {
  int rank = 0;
  Decomposition decomposition;
  RoseMap composite;
  std::vector<ConstructionBlock> blocks;
  std::vector<std::string> provenance;
};

// the fixed rank 3 map and the fold sequence it peels into
RoseMap rank3_map();
std::vector<Fold> rank3_folds();

// time-ordered folds for r > 3, written with x-labels (j, i)
std::vector<std::pair<int, int>> recipe_labels(int r);
GeneratedRep generate(int r);

}  // namespace ttf
