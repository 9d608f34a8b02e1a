#pragma once

#include <set>
#include <string>
#include <vector>

#include "ttforge/rose_map.hpp"

namespace ttf {

enum class WhKind { local, stable, ideal };

struct WhiteheadGraph {
  int rank = 0;
  WhKind kind = WhKind::local;
  std::vector<bool> present;   // by dir_index
  std::vector<bool> periodic;  // by dir_index
  std::set<Turn> edges;

  int vertex_count() const;
  bool operator==(const WhiteheadGraph& o) const {
    return rank == o.rank && present == o.present && edges == o.edges;
  }
};

std::set<Turn> taken_turns(const RoseMap& g);
WhiteheadGraph local_whitehead_graph(const RoseMap& g);
WhiteheadGraph stable_whitehead_graph(const RoseMap& g);

// Issued only by the Nielsen search when it proves there is nothing to find.
struct PnpFreeCertificate {
  RoseMap map;
  bool pnp_free = false;
};
WhiteheadGraph ideal_whitehead_graph(const RoseMap& g, const PnpFreeCertificate& cert);

int component_count(const WhiteheadGraph& G);
bool is_connected(const WhiteheadGraph& G);
bool is_complete_on(const WhiteheadGraph& G, int n);

std::string to_dot(const WhiteheadGraph& G, const std::string& name = "wh");

}  // namespace ttf
