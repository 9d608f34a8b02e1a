#include "ttforge/ltt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "ttforge/whitehead.hpp"

namespace ttf {

void LttStructure::add_edge(const Turn& t) {
  bool red = vertex[dir_index(t.a)] == Color::red || vertex[dir_index(t.b)] == Color::red;
  edges.push_back({t, red ? Color::red : Color::purple});
}

void LttStructure::normalize() { std::sort(edges.begin(), edges.end()); }

bool LttStructure::has_colored(const Turn& t) const {
  for (auto& e : edges)
    if (e.turn == t) return true;
  return false;
}

Dir LttStructure::red_vertex() const {
  Dir found = 0;
  for (size_t i = 0; i < vertex.size(); ++i)
    if (vertex[i] == Color::red) {
      if (found) return 0;
      found = dir_from_index(static_cast<int>(i));
    }
  return found;
}

std::optional<Turn> LttStructure::red_edge() const {
  std::optional<Turn> out;
  for (auto& e : edges)
    if (e.color == Color::red) {
      if (out) return std::nullopt;
      out = e.turn;
    }
  return out;
}

Dir LttStructure::dbar_a() const {
  Dir u = red_vertex();
  auto e = red_edge();
  if (!u || !e || !e->contains(u)) return 0;
  return e->other(u);
}

std::set<Turn> LttStructure::purple_edges() const {
  std::set<Turn> out;
  for (auto& e : edges)
    if (e.color == Color::purple) out.insert(e.turn);
  return out;
}

std::vector<Dir> LttStructure::purple_vertices() const {
  std::vector<Dir> out;
  for (size_t i = 0; i < vertex.size(); ++i)
    if (vertex[i] == Color::purple) out.push_back(dir_from_index(static_cast<int>(i)));
  return out;
}

LttCheck validate(const LttStructure& G, bool star) {
  int n = 2 * G.rank;
  if (G.rank < 1 || static_cast<int>(G.vertex.size()) != n)
    return {false, "ltt1", "vertex list does not match rank"};
  for (size_t k = 0; k < G.edges.size(); ++k) {
    const auto& e = G.edges[k];
    if (edge_of(e.turn.a) > G.rank || edge_of(e.turn.b) > G.rank || e.turn.a == 0)
      return {false, "ltt2", "edge endpoint out of range"};
    if (e.turn.degenerate()) return {false, "ltt2", "loop at " + format_x(e.turn.a)};
    bool red = G.vertex[dir_index(e.turn.a)] == Color::red || G.vertex[dir_index(e.turn.b)] == Color::red;
    if (red != (e.color == Color::red))
      return {false, "ltt2", "edge [" + format_x(e.turn.a) + "," + format_x(e.turn.b) + "] has the wrong color"};
    for (size_t l = 0; l < k; ++l)
      if (G.edges[l].turn == e.turn)
        return {false, "ltt3", "two colored edges on [" + format_x(e.turn.a) + "," + format_x(e.turn.b) + "]"};
  }
  if (!star) return {};
  int purple = 0, red = 0;
  for (Color c : G.vertex) (c == Color::purple ? purple : red)++;
  if (purple != n - 1 || red != 1)
    return {false, "ltt(*)4", std::to_string(purple) + " purple and " + std::to_string(red) + " red vertices"};
  int red_edges = 0;
  for (auto& e : G.edges) red_edges += e.color == Color::red;
  if (red_edges != 1) return {false, "ltt(*)4", std::to_string(red_edges) + " red edges"};
  return {};
}

LttStructure build_ltt(const RoseMap& g) {
  LttStructure G;
  G.rank = g.rank();
  auto per = periodic_directions(direction_map(g));
  for (bool p : per) G.vertex.push_back(p ? Color::purple : Color::red);
  for (const Turn& t : taken_turns(g)) G.add_edge(t);
  G.normalize();
  return G;
}

LttStructure make_structure(int rank, Dir red, Dir other, const std::set<Turn>& purple) {
  LttStructure G;
  G.rank = rank;
  G.vertex.assign(2 * rank, Color::purple);
  G.vertex[dir_index(red)] = Color::red;
  for (const Turn& t : purple) G.add_edge(t);
  G.add_edge(Turn(red, other));
  G.normalize();
  return G;
}

LttStructure complete_structure(int rank, Dir red, Dir other) {
  std::set<Turn> purple;
  for (int x = 0; x < 2 * rank; ++x)
    for (int y = x + 1; y < 2 * rank; ++y) {
      Dir a = dir_from_index(x), b = dir_from_index(y);
      if (a != red && b != red) purple.insert(Turn(a, b));
    }
  return make_structure(rank, red, other, purple);
}

LttStructure standard_structure(int r, int j) {
  if (r < 3) throw std::invalid_argument("standard structures need r >= 3");
  if (j < 1 || j > 2 * r - 1) throw std::invalid_argument("standard structure index out of range");
  return complete_structure(r, from_x_label(2 * r), from_x_label(j));
}

SmoothPath path_from_labels(const std::vector<int>& xlabels) {
  SmoothPath p;
  for (int k : xlabels) p.v.push_back(from_x_label(k));
  return p;
}

std::vector<int> path_labels(const SmoothPath& p) {
  std::vector<int> out;
  for (Dir d : p.v) out.push_back(x_label(d));
  return out;
}

SmoothPath splice(const std::vector<SmoothPath>& parts) {
  SmoothPath out;
  for (const auto& p : parts) {
    if (p.v.empty()) continue;
    if (out.v.empty()) { out = p; continue; }
    if (out.v.back() != p.v.front()) throw std::invalid_argument("splice: endpoints do not match");
    out.v.insert(out.v.end(), p.v.begin() + 1, p.v.end());
  }
  return out;
}

LttView full_view(const LttStructure& G) {
  LttView V;
  V.rank = G.rank;
  V.vertex.assign(2 * G.rank, true);
  V.black.assign(G.rank, true);
  for (auto& e : G.edges) V.colored.insert(e.turn);
  return V;
}

bool is_smooth(const LttView& V, const SmoothPath& p, std::string* why) {
  auto fail = [&](const std::string& s) { if (why) *why = s; return false; };
  if (p.v.size() < 2) return fail("path has no edges");
  for (Dir d : p.v)
    if (d == 0 || edge_of(d) > V.rank || !V.vertex[dir_index(d)]) return fail("vertex missing");
  for (size_t e = 0; e + 1 < p.v.size(); ++e) {
    Dir u = p.v[e], w = p.v[e + 1];
    if (e % 2 == 0) {
      if (u == w || !V.colored.count(Turn(u, w)))
        return fail("no colored edge [" + format_x(u) + "," + format_x(w) + "] at step " + std::to_string(e));
    } else {
      if (w != bar(u) || !V.black[edge_of(u) - 1])
        return fail("no black edge [" + format_x(u) + "," + format_x(w) + "] at step " + std::to_string(e));
    }
  }
  return true;
}

bool is_smooth(const LttStructure& G, const SmoothPath& p, std::string* why) {
  return is_smooth(full_view(G), p, why);
}

namespace {

// directed traversals: colored edge c gives nodes 2c, 2c+1; black edge k gives nodes base+2(k-1), +1
struct TraversalGraph {
  std::vector<Turn> colored;
  int base = 0;
  int rank = 0;
  std::vector<std::vector<int>> out;

  Dir tail(int n) const {
    if (n < base) return n % 2 ? colored[n / 2].b : colored[n / 2].a;
    int k = (n - base) / 2 + 1;
    return (n - base) % 2 ? -k : k;
  }
  Dir head(int n) const {
    if (n < base) return n % 2 ? colored[n / 2].a : colored[n / 2].b;
    return bar(tail(n));
  }
  int edge_id(int n) const { return n < base ? n / 2 : static_cast<int>(colored.size()) + (n - base) / 2; }
};

TraversalGraph traversal_graph(const LttStructure& G) {
  TraversalGraph T;
  T.rank = G.rank;
  std::set<Turn> cs;
  for (auto& e : G.edges) cs.insert(e.turn);
  T.colored.assign(cs.begin(), cs.end());
  T.base = 2 * static_cast<int>(T.colored.size());
  int N = T.base + 2 * G.rank;
  T.out.assign(N, {});
  std::vector<std::vector<int>> colored_from(2 * G.rank);
  for (int n = 0; n < T.base; ++n) colored_from[dir_index(T.tail(n))].push_back(n);
  for (int n = 0; n < N; ++n) {
    Dir h = T.head(n);
    if (n < T.base) {
      int k = edge_of(h);
      T.out[n].push_back(T.base + 2 * (k - 1) + (h > 0 ? 0 : 1));
    } else {
      T.out[n] = colored_from[dir_index(h)];
    }
  }
  return T;
}

std::vector<int> scc_ids(const TraversalGraph& T, int& count) {
  int N = static_cast<int>(T.out.size());
  std::vector<int> idx(N, -1), low(N, 0), comp(N, -1), stack;
  std::vector<char> on(N, 0);
  int counter = 0;
  count = 0;
  std::function<void(int)> dfs = [&](int v) {
    idx[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = 1;
    for (int w : T.out[v]) {
      if (idx[w] < 0) { dfs(w); low[v] = std::min(low[v], low[w]); }
      else if (on[w]) low[v] = std::min(low[v], idx[w]);
    }
    if (low[v] == idx[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on[w] = 0;
        comp[w] = count;
        if (w == v) break;
      }
      ++count;
    }
  };
  for (int v = 0; v < N; ++v)
    if (idx[v] < 0) dfs(v);
  return comp;
}

std::vector<int> bfs_path(const TraversalGraph& T, const std::vector<int>& comp, int c, int from,
                          const std::function<bool(int)>& goal) {
  // shortest nonempty path of nodes after `from` that reaches goal
  std::vector<int> prev(T.out.size(), -2);
  std::queue<int> q;
  for (int w : T.out[from])
    if (comp[w] == c && prev[w] == -2) { prev[w] = from; q.push(w); }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (goal(v)) {
      std::vector<int> path;
      for (int x = v; x != from; x = prev[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int w : T.out[v])
      if (comp[w] == c && prev[w] == -2) { prev[w] = v; q.push(w); }
  }
  return {};
}

}  // namespace

BirecurrenceResult is_birecurrent(const LttStructure& G) {
  BirecurrenceResult res;
  TraversalGraph T = traversal_graph(G);
  int n_edges = static_cast<int>(T.colored.size()) + G.rank;
  if (T.colored.empty()) return res;
  int count = 0;
  auto comp = scc_ids(T, count);
  for (int c = 0; c < count; ++c) {
    std::vector<char> cov(n_edges, 0);
    int members = 0;
    for (size_t n = 0; n < T.out.size(); ++n)
      if (comp[n] == c) { cov[T.edge_id(static_cast<int>(n))] = 1; ++members; }
    if (members < 2 || std::count(cov.begin(), cov.end(), 1) != n_edges) continue;
    int start = -1;
    for (int n = 0; n < T.base; ++n)
      if (comp[n] == c) { start = n; break; }
    std::vector<int> walk{start};
    std::vector<char> seen(n_edges, 0);
    seen[T.edge_id(start)] = 1;
    for (int e = 0; e < n_edges; ++e) {
      if (seen[e]) continue;
      auto p = bfs_path(T, comp, c, walk.back(), [&](int v) { return T.edge_id(v) == e; });
      for (int v : p) { walk.push_back(v); seen[T.edge_id(v)] = 1; }
    }
    auto back = bfs_path(T, comp, c, walk.back(), [&](int v) { return v == start; });
    back.pop_back();  // drop the repeated start node
    walk.insert(walk.end(), back.begin(), back.end());
    res.birecurrent = true;
    res.witness.v.push_back(T.tail(walk[0]));
    for (int v : walk) res.witness.v.push_back(T.head(v));
    return res;
  }
  return res;
}

bool check_covering_loop(const LttStructure& G, const SmoothPath& loop, std::string* why) {
  auto fail = [&](const std::string& s) { if (why) *why = s; return false; };
  if (!is_smooth(G, loop, why)) return false;
  if (loop.v.front() != loop.v.back()) return fail("walk is not closed");
  if ((loop.v.size() - 1) % 2 != 0) return fail("closed walk must end with a black edge");
  std::set<Turn> colored;
  std::set<int> black;
  for (size_t e = 0; e + 1 < loop.v.size(); ++e) {
    if (e % 2 == 0) colored.insert(Turn(loop.v[e], loop.v[e + 1]));
    else black.insert(edge_of(loop.v[e]));
  }
  for (auto& e : G.edges)
    if (!colored.count(e.turn)) return fail("edge [" + format_x(e.turn.a) + "," + format_x(e.turn.b) + "] not covered");
  if (static_cast<int>(black.size()) != G.rank) return fail("some black edge not covered");
  return true;
}

namespace {
LttView subgraph_rounds(const LttView& start, Dir du, int* rounds) {
  LttView V = start;
  auto drop_vertex_edges = [&](Dir v, bool purple_only) {
    for (auto it = V.colored.begin(); it != V.colored.end();) {
      bool red = it->contains(du);
      if (it->contains(v) && (!purple_only || !red)) it = V.colored.erase(it); else ++it;
    }
  };
  // step 1
  if (du) {
    V.black[edge_of(du) - 1] = false;
    V.vertex[dir_index(bar(du))] = false;
    drop_vertex_edges(bar(du), false);
  }
  // step 2 until stable
  int n = 1;
  while (true) {
    std::vector<bool> in_colored(V.vertex.size(), false);
    for (const Turn& t : V.colored) in_colored[dir_index(t.a)] = in_colored[dir_index(t.b)] = true;
    LttView before = V;
    for (size_t i = 0; i < V.vertex.size(); ++i) {
      if (!V.vertex[i] || in_colored[i]) continue;
      Dir a = dir_from_index(static_cast<int>(i));
      V.black[edge_of(a) - 1] = false;
      drop_vertex_edges(bar(a), true);
    }
    if (V == before) break;
    ++n;
  }
  if (rounds) *rounds = n;
  return V;
}
}  // namespace

LttView construction_subgraph(const LttView& start, Dir du) { return subgraph_rounds(start, du, nullptr); }

SubgraphTrace construction_subgraph_traced(const LttStructure& G) {
  SubgraphTrace t;
  t.result = subgraph_rounds(full_view(G), G.red_vertex(), &t.iterations);
  return t;
}

LttView construction_subgraph(const LttStructure& G) { return construction_subgraph(full_view(G), G.red_vertex()); }

SmoothPath standard_loop(int r, int i, int k) {
  if (i < 1 || k < 1 || i > 2 * r || k > 2 * r) throw std::invalid_argument("loop index out of range");
  auto b = [](int x) { return x % 2 ? x + 1 : x - 1; };
  if (i == k || i == b(k)) throw std::invalid_argument("L_{i,k} needs x_i and x_k on different edges");
  return path_from_labels({i, b(k), k, b(k), k, b(i), i, b(i), i, k, b(k), b(i), i});
}

SmoothPath standard_path(int r, int i, int k) {
  if (i < 1 || k < 1 || i > 2 * r || k > 2 * r) throw std::invalid_argument("path index out of range");
  auto b = [](int x) { return x % 2 ? x + 1 : x - 1; };
  if (i == k || i == b(k)) throw std::invalid_argument("T_{i,k} needs x_i and x_k on different edges");
  return path_from_labels({i, b(k), k});
}

namespace {
LttStructure relabel(const LttStructure& G, const std::vector<int>& perm, unsigned flips) {
  auto m = [&](Dir d) {
    int e = perm[edge_of(d) - 1];
    bool f = (flips >> (edge_of(d) - 1)) & 1u;
    Dir out = e;
    return (d > 0) != f ? out : -out;
  };
  LttStructure H;
  H.rank = G.rank;
  H.vertex.assign(G.vertex.size(), Color::purple);
  for (size_t i = 0; i < G.vertex.size(); ++i) H.vertex[dir_index(m(dir_from_index(static_cast<int>(i))))] = G.vertex[i];
  for (auto& e : G.edges) H.edges.push_back({Turn(m(e.turn.a), m(e.turn.b)), e.color});
  H.normalize();
  return H;
}
}  // namespace

bool epp_equivalent(const LttStructure& a, const LttStructure& b) {
  if (a.rank != b.rank || a.edges.size() != b.edges.size()) return false;
  LttStructure bn = b;
  bn.normalize();
  std::vector<int> perm(a.rank);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned f = 0; f < (1u << a.rank); ++f)
      if (relabel(a, perm, f) == bn) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string to_dot(const LttStructure& G, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int i = 0; i < 2 * G.rank; ++i) {
    Dir d = dir_from_index(i);
    os << "  " << format_x(d) << " [color=" << (G.vertex[i] == Color::red ? "red" : "purple") << "];\n";
  }
  for (int k = 1; k <= G.rank; ++k)
    os << "  " << format_x(k) << " -- " << format_x(-k) << " [color=black, style=bold];\n";
  for (auto& e : G.edges)
    os << "  " << format_x(e.turn.a) << " -- " << format_x(e.turn.b)
       << (e.color == Color::red ? " [color=red, style=dashed];\n" : " [color=purple, style=solid];\n");
  os << "}\n";
  return os.str();
}

}  // namespace ttf
