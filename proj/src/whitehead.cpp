#include "ttforge/whitehead.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace ttf {

int WhiteheadGraph::vertex_count() const {
  int n = 0;
  for (bool p : present) n += p;
  return n;
}

std::set<Turn> taken_turns(const RoseMap& g) {
  DirectionMap D = direction_map(g);
  std::set<Turn> T;
  std::vector<Turn> todo;
  for (int k = 1; k <= g.rank(); ++k)
    for (const Turn& t : turns_of(g.image(k)))
      if (T.insert(t).second) todo.push_back(t);
  while (!todo.empty()) {
    Turn t = todo.back();
    todo.pop_back();
    Dir a = dmap(D, t.a), b = dmap(D, t.b);
    if (a == b) continue;  // only happens off train tracks
    Turn u(a, b);
    if (T.insert(u).second) todo.push_back(u);
  }
  return T;
}

WhiteheadGraph local_whitehead_graph(const RoseMap& g) {
  WhiteheadGraph G;
  G.rank = g.rank();
  G.kind = WhKind::local;
  G.present.assign(2 * g.rank(), true);
  G.periodic = periodic_directions(direction_map(g));
  G.edges = taken_turns(g);
  return G;
}

WhiteheadGraph stable_whitehead_graph(const RoseMap& g) {
  WhiteheadGraph G = local_whitehead_graph(g);
  G.kind = WhKind::stable;
  G.present = G.periodic;
  std::set<Turn> keep;
  for (const Turn& t : G.edges)
    if (G.periodic[dir_index(t.a)] && G.periodic[dir_index(t.b)]) keep.insert(t);
  G.edges = keep;
  return G;
}

WhiteheadGraph ideal_whitehead_graph(const RoseMap& g, const PnpFreeCertificate& cert) {
  if (!cert.pnp_free || !(cert.map == g))
    throw std::logic_error("ideal Whitehead graph needs a pNp-free certificate for this map");
  WhiteheadGraph G = stable_whitehead_graph(g);
  G.kind = WhKind::ideal;
  return G;
}

int component_count(const WhiteheadGraph& G) {
  int n = static_cast<int>(G.present.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Turn& t : G.edges) parent[find(dir_index(t.a))] = find(dir_index(t.b));
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (G.present[i] && find(i) == i) ++c;
  return c;
}

bool is_connected(const WhiteheadGraph& G) { return G.vertex_count() > 0 && component_count(G) == 1; }

bool is_complete_on(const WhiteheadGraph& G, int n) {
  return G.vertex_count() == n && static_cast<int>(G.edges.size()) == n * (n - 1) / 2;
}

std::string to_dot(const WhiteheadGraph& G, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (size_t i = 0; i < G.present.size(); ++i) {
    if (!G.present[i]) continue;
    Dir d = dir_from_index(static_cast<int>(i));
    os << "  " << format_x(d) << " [label=\"" << format_dir(d, G.rank) << "\", color="
       << (G.periodic[i] ? "purple" : "red") << "];\n";
  }
  for (const Turn& t : G.edges) os << "  " << format_x(t.a) << " -- " << format_x(t.b) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ttf
