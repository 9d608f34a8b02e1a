#include "ttforge/rose_map.hpp"

#include <stdexcept>

namespace ttf {

RoseMap::RoseMap(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (static_cast<int>(images_.size()) != rank) throw std::invalid_argument("need one image per edge");
  for (int k = 0; k < rank; ++k) {
    const Word& w = images_[k];
    if (w.empty()) throw std::invalid_argument("empty image for edge " + std::to_string(k + 1));
    if (!is_reduced(w)) throw std::invalid_argument("unreduced image for edge " + std::to_string(k + 1));
    for (Dir d : w)
      if (d == 0 || edge_of(d) > rank) throw std::invalid_argument("image letter out of range");
  }
}

RoseMap RoseMap::identity(int rank) {
  std::vector<Word> im;
  for (int k = 1; k <= rank; ++k) im.push_back({k});
  return RoseMap(rank, im);
}

RoseMap RoseMap::fold(int rank, Dir j, Dir i) {
  if (edge_of(i) == edge_of(j)) throw std::invalid_argument("fold needs distinct edges");
  if (edge_of(i) > rank || edge_of(j) > rank) throw std::invalid_argument("fold edge out of range");
  std::vector<Word> im;
  for (int k = 1; k <= rank; ++k) im.push_back({k});
  if (j > 0)
    im[j - 1] = {i, j};
  else
    im[-j - 1] = {-j, -i};
  return RoseMap(rank, im);
}

Word RoseMap::image_of(Dir d) const { return d > 0 ? images_[d - 1] : invert(images_[-d - 1]); }

Dir RoseMap::first(Dir d) const { return d > 0 ? images_[d - 1].front() : -images_[-d - 1].back(); }

Word apply(const RoseMap& g, const Word& w) {
  Word out;
  for (Dir d : w) {
    if (edge_of(d) > g.rank()) throw std::invalid_argument("apply: rank mismatch");
    if (d > 0) {
      for (Dir x : g.image(d)) {
        if (!out.empty() && out.back() == -x) out.pop_back(); else out.push_back(x);
      }
    } else {
      const Word& im = g.image(-d);
      for (auto it = im.rbegin(); it != im.rend(); ++it) {
        Dir x = -*it;
        if (!out.empty() && out.back() == -x) out.pop_back(); else out.push_back(x);
      }
    }
  }
  return out;
}

RoseMap compose(const RoseMap& outer, const RoseMap& inner) {
  if (outer.rank() != inner.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<Word> im;
  for (int k = 1; k <= inner.rank(); ++k) im.push_back(ttf::apply(outer, inner.image(k)));
  return RoseMap(inner.rank(), im);
}

RoseMap power(const RoseMap& g, int p) {
  RoseMap out = RoseMap::identity(g.rank());
  for (int i = 0; i < p; ++i) out = compose(g, out);
  return out;
}

DirectionMap direction_map(const RoseMap& g) {
  DirectionMap D(2 * g.rank());
  for (int i = 0; i < 2 * g.rank(); ++i) D[i] = g.first(dir_from_index(i));
  return D;
}

Dir dmap(const DirectionMap& D, Dir d) { return D[dir_index(d)]; }

DirectionMap compose_dmaps(const DirectionMap& outer, const DirectionMap& inner) {
  DirectionMap out(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) out[i] = dmap(outer, inner[i]);
  return out;
}

std::set<Turn> illegal_turns(const DirectionMap& D) {
  int n = static_cast<int>(D.size());
  std::set<Turn> out;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Dir a = dir_from_index(x), b = dir_from_index(y);
      std::set<Turn> seen;
      while (true) {
        if (a == b) { out.insert(Turn(dir_from_index(x), dir_from_index(y))); break; }
        Turn t(a, b);
        if (!seen.insert(t).second) break;
        a = dmap(D, a);
        b = dmap(D, b);
      }
    }
  return out;
}

std::vector<bool> periodic_directions(const DirectionMap& D) {
  int n = static_cast<int>(D.size());
  std::vector<bool> per(n, false);
  for (int x = 0; x < n; ++x) {
    Dir d = dir_from_index(x), c = d;
    for (int s = 0; s < n; ++s) {
      c = dmap(D, c);
      if (c == d) { per[x] = true; break; }
    }
  }
  return per;
}

TurnClassification classify(const RoseMap& g) {
  DirectionMap D = direction_map(g);
  TurnClassification c;
  c.rank = g.rank();
  c.illegal = illegal_turns(D);
  c.periodic = periodic_directions(D);
  c.fixed.assign(D.size(), false);
  for (size_t i = 0; i < D.size(); ++i) c.fixed[i] = D[i] == dir_from_index(static_cast<int>(i));
  return c;
}

TrainTrackCheck is_train_track(const RoseMap& g) {
  auto ill = illegal_turns(direction_map(g));
  for (int k = 1; k <= g.rank(); ++k)
    for (const Turn& t : turns_of(g.image(k)))
      if (ill.count(t)) return {false, k, t};
  return {};
}

Matrix transition_matrix(const RoseMap& g) {
  int r = g.rank();
  Matrix m(r, std::vector<long long>(r, 0));
  for (int j = 1; j <= r; ++j)
    for (Dir d : g.image(j)) m[edge_of(d) - 1][j - 1]++;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  Matrix c(n, std::vector<long long>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      if (a[i][l])
        for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

namespace {
using BoolMat = std::vector<std::vector<char>>;
BoolMat support(const Matrix& m) {
  BoolMat b(m.size(), std::vector<char>(m.size(), 0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) b[i][j] = m[i][j] != 0;
  return b;
}
BoolMat bmul(const BoolMat& a, const BoolMat& b) {
  size_t n = a.size();
  BoolMat c(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < n; ++l)
      if (a[i][l])
        for (size_t j = 0; j < n; ++j) c[i][j] |= b[l][j];
  return c;
}
bool all_pos(const BoolMat& a) {
  for (auto& row : a)
    for (char x : row)
      if (!x) return false;
  return true;
}
}  // namespace

bool is_irreducible(const Matrix& m) {
  size_t n = m.size();
  if (n == 0) return false;
  // reachability closure (Warshall), then every pair must reach
  BoolMat r = support(m);
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (size_t j = 0; j < n; ++j) r[i][j] |= r[k][j];
  return all_pos(r);
}

std::optional<int> primitive_exponent(const Matrix& m) {
  size_t n = m.size();
  if (n == 0) return std::nullopt;
  BoolMat b = support(m);
  int bound = static_cast<int>((n - 1) * (n - 1) + 1);
  // binary search on squarings, then linear scan over the last window
  std::vector<BoolMat> sq{b};
  int e = 1;
  while (e < bound) { sq.push_back(bmul(sq.back(), sq.back())); e *= 2; }
  if (!all_pos(sq.back())) return std::nullopt;
  // smallest k: build from the highest bit down
  BoolMat acc;
  bool have = false;
  int k = 0;
  for (int bit = static_cast<int>(sq.size()) - 1; bit >= 0; --bit) {
    BoolMat trial = have ? bmul(acc, sq[bit]) : sq[bit];
    if (!all_pos(trial)) { acc = trial; have = true; k += 1 << bit; }
  }
  return k + 1;
}

bool is_primitive(const Matrix& m) { return primitive_exponent(m).has_value(); }

}  // namespace ttf
