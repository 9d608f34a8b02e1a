#pragma once
// hand-rolled random generators shared by the unit tests and the acceptance binary
#include <optional>
#include <random>
#include <vector>

#include "ttforge/decomposition.hpp"
#include "ttforge/rose_map.hpp"

namespace gen {

using Rng = std::mt19937;

inline ttf::Dir dir(Rng& rng, int rank) {
  int k = 1 + static_cast<int>(rng() % rank);
  return rng() % 2 ? k : -k;
}

inline ttf::Word word(Rng& rng, int rank, int len) {
  ttf::Word w;
  while (static_cast<int>(w.size()) < len) {
    ttf::Dir d = dir(rng, rank);
    if (!w.empty() && d == -w.back()) continue;
    w.push_back(d);
  }
  return w;
}

// not necessarily reduced
inline ttf::Word raw_word(Rng& rng, int rank, int len) {
  ttf::Word w;
  for (int k = 0; k < len; ++k) w.push_back(dir(rng, rank));
  return w;
}

inline std::vector<ttf::Fold> folds(Rng& rng, int rank, int n) {
  std::vector<ttf::Fold> f;
  while (static_cast<int>(f.size()) < n) {
    ttf::Dir j = dir(rng, rank), i = dir(rng, rank);
    if (ttf::edge_of(i) != ttf::edge_of(j)) f.push_back({j, i});
  }
  return f;
}

inline bool expanding(const ttf::RoseMap& g) {
  for (auto& w : g.images())
    if (w.size() > 1) return true;
  return false;
}

// tight fold sequence whose composite is an irreducible expanding train track with short images
inline std::vector<ttf::Fold> train_track(Rng& rng, int rank, size_t max_image) {
  while (true) {
    int n = rank + static_cast<int>(rng() % (2 * rank));
    auto f = folds(rng, rank, n);
    auto g = ttf::compose_folds(rank, f);
    bool short_images = true;
    for (auto& w : g.images()) short_images = short_images && w.size() <= max_image;
    if (!short_images || !expanding(g)) continue;
    if (!ttf::is_train_track(g).ok || !ttf::is_tight(rank, f)) continue;
    if (!ttf::is_irreducible(ttf::transition_matrix(g))) continue;
    return f;
  }
}

// random walk red edge, black, purple in G_C, black, ... that composition_from_path accepts
inline std::optional<ttf::SmoothPath> construction_walk(Rng& rng, const ttf::LttStructure& G, int max_folds) {
  auto view = ttf::construction_subgraph(G);
  ttf::Dir s = G.red_vertex();
  ttf::SmoothPath p;
  p.v = {s, G.dbar_a(), -G.dbar_a()};
  int k = 1 + static_cast<int>(rng() % max_folds);
  for (int m = 1; m < k; ++m) {
    ttf::Dir at = p.v.back();
    std::vector<ttf::Dir> next;
    for (auto& t : view.colored)
      if (t.contains(at) && t.a != t.b) {
        ttf::Dir o = t.other(at);
        if (ttf::edge_of(o) != ttf::edge_of(s)) next.push_back(o);
      }
    if (next.empty()) return std::nullopt;
    ttf::Dir o = next[rng() % next.size()];
    p.v.push_back(o);
    p.v.push_back(-o);
  }
  try {
    ttf::composition_from_path(G, p);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return p;
}

}  // namespace gen
