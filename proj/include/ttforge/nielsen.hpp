#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttforge/decomposition.hpp"
#include "ttforge/rose_map.hpp"

namespace ttf {

struct Budget {
  int max_len = 32;
  int max_period = 4;
  long max_nodes = 100000;
};

enum class PnpOutcome { none_found_exhaustive, found, inconclusive_budget };
const char* outcome_name(PnpOutcome o);

// the last edge of that side is cut at a point fixed by the period-p map
struct PartialMark {
  Dir edge = 0;
  int period = 0;
};

struct PnpCandidate {
  Word rho1, rho2;  // the path is invert(rho1) rho2
  int period = 0;
  std::optional<PartialMark> partial1, partial2;
  std::vector<std::string> case_trace;
};

struct BranchEvent {
  Word rho1, rho2;
  int stage = 0;
  Turn junction;
  std::string kind;  // IIc, final, survives, cap, length, budget
};

struct PnpReport {
  PnpOutcome outcome = PnpOutcome::none_found_exhaustive;
  std::vector<PnpCandidate> found;
  long nodes = 0;
  long inconclusive = 0;
  std::vector<BranchEvent> events;
  std::string precondition;  // set when the search could not run
};

// the gap between stages when only a prefix is known
struct PrefixSpec {
  std::vector<Turn> illegal;         // T_0 .. T_{n-1}
  std::optional<Turn> final_turn;    // T_n when known
  Dir final_red_vertex = 0;          // otherwise T_n must contain d^u_n
  std::optional<Turn> final_red_edge;  // and differ from the red edge
};

PnpReport detect_ipnps(int rank, const std::vector<Fold>& folds, const Budget& budget = {});
PnpReport search_prefix(int rank, const std::vector<Fold>& folds, const PrefixSpec& spec, const Budget& budget = {});

struct PreventionResult {
  bool verified = false;
  bool inconclusive = false;
  PnpReport report;
};
PreventionResult verify_prevention_sequence(const Composition& prefix, const Budget& budget = {});

struct NielsenPath {
  Word path;
  int period = 0;
};
std::vector<NielsenPath> nielsen_oracle(const RoseMap& g, int max_len, int max_period);

// direct check of a reported candidate against g
bool check_candidate(const RoseMap& g, const PnpCandidate& c, std::string* why = nullptr);

std::string narrate(const PnpReport& r, int rank);

}  // namespace ttf
