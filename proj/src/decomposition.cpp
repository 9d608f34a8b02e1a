#include "ttforge/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttf {

namespace {
std::string xs(Dir d) { return format_x(d); }
std::string xe(const Turn& t) { return "[" + xs(t.a) + "," + xs(t.b) + "]"; }

std::set<Turn> relabel(const std::set<Turn>& edges, Dir from, Dir to) {
  std::set<Turn> out;
  for (const Turn& t : edges) out.insert(Turn(t.a == from ? to : t.a, t.b == from ? to : t.b));
  return out;
}
}  // namespace

const char* kind_name(TripleKind k) { return k == TripleKind::switch_ ? "switch" : "extension"; }

Word Fold::image(Dir d) const {
  if (d == j) return {i, j};
  if (d == -j) return {-j, -i};
  return {d};
}

TripleCheck check_triple(const Fold& f, const LttStructure& src, const LttStructure& dst) {
  TripleCheck c;
  auto fail = [&](const std::string& ax, const std::string& msg) {
    c.ok = false;
    c.axiom = ax;
    c.message = msg;
    return c;
  };
  if (f.i == 0 || f.j == 0 || edge_of(f.i) == edge_of(f.j)) return fail("II(b)", "fold edges must differ");
  auto vs = validate(src, true), vd = validate(dst, true);
  if (!vs.ok) return fail("gtII", "source " + vs.axiom + ": " + vs.witness);
  if (!vd.ok) return fail("gtII", "destination " + vd.axiom + ": " + vd.witness);
  if (dst.red_vertex() != f.j) return fail("gtI", "destination red vertex should be " + xs(f.j));
  if (!(*dst.red_edge() == Turn(f.j, bar(f.i))))
    return fail("gtI", "destination red edge should be " + xe(Turn(f.j, bar(f.i))));
  Dir u = src.red_vertex();
  if (u == f.j)
    c.kind = TripleKind::extension;
  else if (u == f.i)
    c.kind = TripleKind::switch_;
  else
    return fail("extII/swII", "source red vertex " + xs(u) + " is neither " + xs(f.j) + " nor " + xs(f.i));
  bool ext = c.kind == TripleKind::extension;
  Dir y = src.dbar_a();
  if (y == f.i || y == f.j) return fail(ext ? "extIII" : "swIII", "source red edge lies on the folded pair");
  c.determining = Turn(f.i, y);
  auto dpi = dst.purple_edges();
  if (!dpi.count(c.determining))
    return fail(ext ? "extIII" : "swIII", "determining edge " + xe(c.determining) + " is not purple in the destination");
  auto spi = src.purple_edges();
  if (ext) {
    if (spi != dpi) return fail("extI", "purple subgraphs differ");
  } else {
    if (relabel(spi, f.j, f.i) != dpi) return fail("swI", "purple subgraphs do not match after relabeling");
  }
  // gtIII: every colored edge lands on a colored edge
  for (auto& e : src.edges) {
    Dir a = e.turn.a == f.j ? f.i : e.turn.a;
    Dir b = e.turn.b == f.j ? f.i : e.turn.b;
    if (a == b || !dst.has_colored(Turn(a, b)))
      return fail("gtIII", "image of " + xe(e.turn) + " is not an edge of the destination");
  }
  return c;
}

LttStructure forced_destination(const Fold& f, const LttStructure& src) {
  Dir rv = src.red_vertex();
  if (rv != f.j && rv != f.i) throw std::invalid_argument("fold " + format_x(f.j) + " -> " + format_x(f.i) + " " + format_x(f.j) + " does not involve the red vertex " + format_x(rv));
  auto pi = src.purple_edges();
  if (rv == f.i) pi = relabel(pi, f.j, f.i);
  return make_structure(src.rank, f.j, bar(f.i), pi);
}

FoldTriple make_triple(const Fold& f, const LttStructure& src, const LttStructure& dst) {
  auto c = check_triple(f, src, dst);
  if (!c.ok) throw std::invalid_argument(c.axiom + ": " + c.message);
  return {f, src, dst, c.kind, c.determining};
}

StructureMap induced_structure_map(const FoldTriple& t) {
  auto c = check_triple(t.fold, t.source, t.dest);
  if (!c.ok) throw std::invalid_argument(c.axiom + ": " + c.message);
  StructureMap m;
  int n = 2 * t.source.rank;
  for (int x = 0; x < n; ++x) {
    Dir d = dir_from_index(x);
    m.vertex.push_back(d == t.fold.j ? t.fold.i : d);
  }
  for (auto& e : t.source.edges) m.edges.push_back({e.turn, Turn(m.vertex[dir_index(e.turn.a)], m.vertex[dir_index(e.turn.b)])});
  return m;
}

bool Composition::is_construction() const {
  if (triples.empty() || triples.front().kind != TripleKind::switch_) return false;
  for (size_t k = 1; k < triples.size(); ++k)
    if (triples[k].kind != TripleKind::extension) return false;
  return true;
}

bool Composition::is_purified() const {
  for (auto& t : triples)
    if (t.kind != TripleKind::extension) return false;
  return !triples.empty();
}

RoseMap Composition::automorphism() const {
  std::vector<Fold> f;
  for (auto& t : triples) f.push_back(t.fold);
  return compose_folds(rank, f);
}

Composition make_composition(int rank, const std::vector<Fold>& folds, const LttStructure& g0) {
  Composition c;
  c.rank = rank;
  LttStructure cur = g0;
  for (const Fold& f : folds) {
    LttStructure next = forced_destination(f, cur);
    c.triples.push_back(make_triple(f, cur, next));
    cur = next;
  }
  return c;
}

SmoothPath construction_path(const Composition& c) {
  if (!c.is_construction()) throw std::invalid_argument("not a construction composition");
  const auto& last = c.triples.back();
  SmoothPath p;
  p.v.push_back(last.fold.j);
  for (auto it = c.triples.rbegin(); it != c.triples.rend(); ++it) {
    p.v.push_back(bar(it->fold.i));
    p.v.push_back(it->fold.i);
  }
  std::string why;
  if (!is_smooth(last.dest, p, &why)) throw std::logic_error("construction path not smooth: " + why);
  return p;
}

Composition composition_from_path(const LttStructure& G, const SmoothPath& path, std::optional<Dir> y) {
  auto v = validate(G, true);
  if (!v.ok) throw std::invalid_argument("structure fails " + v.axiom);
  const auto& p = path.v;
  if (p.size() < 3 || (p.size() - 1) % 2 != 0) throw std::invalid_argument("path must end with a black edge");
  Dir s = G.red_vertex();
  if (p[0] != s || p[1] != G.dbar_a()) throw std::invalid_argument("path must start with the red edge from the red vertex");
  std::string why;
  if (!is_smooth(construction_subgraph(G), path, &why)) throw std::invalid_argument("path not smooth in the construction subgraph: " + why);
  int k1 = static_cast<int>(p.size() - 1) / 2;  // number of folds
  std::vector<Dir> q(k1 + 1);
  for (int m = 1; m <= k1; ++m) q[m] = p[2 * m];
  for (int m = 1; m <= k1; ++m)
    if (edge_of(q[m]) == edge_of(s)) throw std::invalid_argument("path revisits the red vertex pair");
  auto pi = G.purple_edges();
  Dir qs = q[k1];
  // switch source: red vertex q_{k+1}, purple graph pulled back along s -> q_{k+1}
  std::set<Turn> src_pi = relabel(pi, qs, s);
  Dir yy = 0;
  if (y) {
    yy = *y;
  } else {
    for (int lab = 1; lab <= 2 * G.rank && !yy; ++lab) {
      Dir c = from_x_label(lab);
      if (c == qs || c == s) continue;
      if (pi.count(Turn(qs, c))) yy = c;
    }
  }
  if (!yy) throw std::invalid_argument("no admissible switch source red edge");
  Composition c;
  c.rank = G.rank;
  LttStructure src = make_structure(G.rank, qs, yy, src_pi);
  std::vector<Fold> folds;
  for (int m = k1; m >= 1; --m) folds.push_back({s, q[m]});
  LttStructure cur = src;
  for (size_t t = 0; t < folds.size(); ++t) {
    int m = k1 - static_cast<int>(t);
    LttStructure next = make_structure(G.rank, s, bar(q[m]), pi);
    for (const LttStructure* S : {&cur, &next}) {
      auto vv = validate(*S, true);
      if (!vv.ok) throw std::invalid_argument("intermediate structure fails " + vv.axiom);
      if (!is_birecurrent(*S).birecurrent) throw std::invalid_argument("intermediate structure is not birecurrent");
    }
    c.triples.push_back(make_triple(folds[t], cur, next));
    cur = next;
  }
  if (!(cur == G)) throw std::logic_error("path composition does not end on the given structure");
  return c;
}

std::set<Turn> purple_edges_built(const Composition& c) {
  auto p = construction_path(c);
  std::set<Turn> out;
  for (size_t e = 2; e + 1 < p.v.size(); e += 2) out.insert(Turn(p.v[e], p.v[e + 1]));
  return out;
}

SwitchCheck check_switch_sequence(const Composition& c) {
  SwitchCheck r;
  int n = static_cast<int>(c.triples.size());
  for (int k = 0; k < n; ++k)
    if (c.triples[k].kind != TripleKind::switch_) {
      r.ok = false;
      r.n = k;
      r.message = "SS1: triple " + std::to_string(k + 1) + " is not a switch";
      return r;
    }
  for (int a = 0; a < n; ++a)
    for (int l = 0; l < a; ++l) {
      Dir du_n = c.triples[a].fold.j, du_l = c.triples[l].fold.j, da_l = c.triples[l].fold.i;
      if (du_n == du_l || bar(da_l) == du_n) {
        r.ok = false;
        r.n = a;
        r.l = l;
        r.message = "SS2 fails for the pair (" + std::to_string(a + 1) + "," + std::to_string(l + 1) + ")";
        return r;
      }
    }
  return r;
}

SmoothPath switch_path(const Composition& c) {
  auto chk = check_switch_sequence(c);
  if (!chk.ok) throw std::invalid_argument(chk.message);
  SmoothPath p;
  p.v.push_back(c.triples.back().fold.j);
  for (auto it = c.triples.rbegin(); it != c.triples.rend(); ++it) {
    p.v.push_back(bar(it->fold.i));
    p.v.push_back(it->fold.i);
  }
  std::string why;
  if (!is_smooth(c.triples.back().dest, p, &why)) throw std::logic_error("switch path not smooth: " + why);
  return p;
}

RoseMap compose_folds(int rank, const std::vector<Fold>& folds) {
  std::vector<Word> im;
  for (int k = 1; k <= rank; ++k) im.push_back({k});
  for (const Fold& f : folds) {
    RoseMap h = f.map(rank);
    for (auto& w : im) w = ttf::apply(h, w);
  }
  return RoseMap(rank, im);
}

RoseMap rotation(int rank, const std::vector<Fold>& folds, int k) {
  std::vector<Fold> order(folds.begin() + k, folds.end());
  order.insert(order.end(), folds.begin(), folds.begin() + k);
  return compose_folds(rank, order);
}

DirectionMap rotation_dmap(int rank, const std::vector<Fold>& folds, int k) {
  DirectionMap D(2 * rank);
  int n = static_cast<int>(folds.size());
  for (int x = 0; x < 2 * rank; ++x) {
    Dir d = dir_from_index(x);
    for (int s = 0; s < n; ++s) {
      const Fold& f = folds[(k + s) % n];
      if (d == f.j) d = f.i;
    }
    D[x] = d;
  }
  return D;
}

bool is_tight(int rank, const std::vector<Fold>& folds, int* bad) {
  int n = static_cast<int>(folds.size());
  for (int s = 0; s < n; ++s) {
    auto ill = illegal_turns(rotation_dmap(rank, folds, (s + 1) % n));
    if (ill.count(folds[s].created())) {
      if (bad) *bad = s + 1;
      return false;
    }
  }
  return true;
}

DecompReport validate_ideal_decomposition(const Decomposition& d) {
  DecompReport rep;
  auto fail = [&](const std::string& cond, const std::string& msg, int loc) {
    rep.ok = false;
    rep.condition = cond;
    rep.message = msg;
    rep.location = loc;
    return rep;
  };
  int r = d.rank, n = static_cast<int>(d.folds.size());
  if (r < 2) return fail("I", "rank must be at least 2", -1);
  if (n == 0) return fail("I", "no folds", -1);
  for (int k = 0; k < n; ++k) {
    const Fold& f = d.folds[k];
    if (f.i == 0 || f.j == 0 || edge_of(f.i) > r || edge_of(f.j) > r) return fail("II(b)", "fold edge out of range", k + 1);
    if (edge_of(f.i) == edge_of(f.j)) return fail("II(b)", "fold of an edge onto itself", k + 1);
    auto D = direction_map(f.map(r));
    for (int x = 0; x < 2 * r; ++x) {
      Dir t = dir_from_index(x);
      Dir want = t == f.j ? f.i : t;
      if (D[x] != want) return fail("II(c)", "direction map moves " + xs(t), k + 1);
    }
  }
  rep.composite = compose_folds(r, d.folds);
  if (d.expected) rep.matches_expected = *d.expected == rep.composite;
  std::vector<LttStructure> S;
  if (d.structures.empty()) {
    for (int k = 0; k < n; ++k) S.push_back(build_ltt(rotation(r, d.folds, k)));
    S.push_back(S.front());
  } else if (d.structures.size() == 1) {
    S.push_back(d.structures.front());
    for (int k = 0; k < n; ++k) {
      auto c = S.back();
      if (c.red_vertex() != d.folds[k].j && c.red_vertex() != d.folds[k].i) {
        rep.structures = S;
        return fail("extII/swII", "red vertex " + xs(c.red_vertex()) + " does not meet the fold", k + 1);
      }
      S.push_back(forced_destination(d.folds[k], c));
    }
  } else if (static_cast<int>(d.structures.size()) == n + 1) {
    S = d.structures;
  } else {
    return fail("I", "need G_0 only or all of G_0..G_n", -1);
  }
  rep.structures = S;
  if (!(S.front() == S.back())) return fail("I", "G_n differs from G_0, the indexing does not close up", n);
  for (int k = 0; k < n; ++k) {
    auto c = check_triple(d.folds[k], S[k], S[k + 1]);
    if (!c.ok) return fail(c.axiom, c.message, k + 1);
    rep.kinds.push_back(c.kind);
  }
  if (!rep.matches_expected) return fail("II(a)", "composite differs from the expected map", -1);
  return rep;
}

ScheduleReport pf_by_switch_schedule(const DecompReport& v) {
  ScheduleReport s;
  if (!v.ok) { s.message = "decomposition does not validate"; return s; }
  int n = static_cast<int>(v.kinds.size());
  int r = v.composite.rank();
  int start = -1;
  for (int k = 0; k < n; ++k)
    if (v.kinds[k] == TripleKind::switch_) { start = k; break; }
  if (start < 0) { s.message = "no switch, so no construction compositions"; return s; }
  s.red_vertex_kept = s.strict_same_structure = true;
  std::vector<bool> covered(r + 1, false);
  int k = start;
  for (int done = 0; done < n;) {
    int first = k;
    int len = 1;
    while (len < n && v.kinds[(first + len) % n] == TripleKind::extension) ++len;
    int last = (first + len - 1) % n;
    s.blocks.push_back({first + 1, last + 1});
    covered[edge_of(v.structures[first].red_vertex())] = true;
    const LttStructure& begin = v.structures[first + 1];
    const LttStructure& end = v.structures[last + 1];
    if (!(begin == end)) s.strict_same_structure = false;
    for (int t = 1; t < len; ++t)
      if (v.structures[(first + t) % n + 1].red_vertex() != begin.red_vertex()) s.red_vertex_kept = false;
    done += len;
    k = (first + len) % n;
  }
  for (int e = 1; e <= r; ++e)
    if (!covered[e]) s.uncovered.push_back(e);
  s.coverage = s.uncovered.empty();
  s.holds = s.red_vertex_kept && s.coverage;
  if (!s.coverage) s.message = "some edge pair never holds a switch-source red vertex";
  return s;
}

}  // namespace ttf
