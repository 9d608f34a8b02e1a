#include "ttforge/nielsen.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ttf {

const char* outcome_name(PnpOutcome o) {
  switch (o) {
    case PnpOutcome::none_found_exhaustive: return "none_found_exhaustive";
    case PnpOutcome::found: return "found";
    default: return "inconclusive_budget";
  }
}

namespace {

struct Token {
  Dir l;
  int birth;  // number of folds already applied
  int src;    // index of the path letter it descends from
};
using Side = std::vector<Token>;  // head at the back

enum class Ending { vertex, partial };
struct SideEnd {
  Ending kind;
  Word path;
};

class Search {
 public:
  Search(int rank, const std::vector<Fold>& folds, const Budget& b, const PrefixSpec* prefix)
      : r_(rank), n_(static_cast<int>(folds.size())), folds_(folds), b_(b), prefix_(prefix) {
    for (int d = 1; d <= r_; ++d) { order_.push_back(d); order_.push_back(-d); }
    if (!prefix_)
      for (int s = 0; s < n_; ++s) ill_.push_back(illegal_turns(rotation_dmap(r_, folds_, s)));
  }

  PnpReport run() {
    std::vector<Turn> starts;
    if (prefix_)
      starts.push_back(prefix_->illegal.at(0));
    else
      starts.assign(ill_[0].begin(), ill_[0].end());
    for (const Turn& t : starts) {
      Dir d1 = t.a, d2 = t.b;  // Turn keeps x-label order, which is the |d|, sign order
      explore(0, {d1}, {d2}, {{d1, 0, 0}}, {{d2, 0, 0}}, {});
    }
    if (!rep_.found.empty())
      rep_.outcome = PnpOutcome::found;
    else if (rep_.inconclusive > 0)
      rep_.outcome = PnpOutcome::inconclusive_budget;
    else
      rep_.outcome = PnpOutcome::none_found_exhaustive;
    return rep_;
  }

 private:
  int r_, n_;
  const std::vector<Fold>& folds_;
  Budget b_;
  const PrefixSpec* prefix_;
  std::vector<std::set<Turn>> ill_;
  std::vector<Dir> order_;
  PnpReport rep_;

  void head(Side& g, int T) const {
    while (!g.empty() && g.back().birth < T) {
      Token t = g.back();
      g.pop_back();
      Word im = folds_[t.birth % n_].image(t.l);
      for (auto it = im.rbegin(); it != im.rend(); ++it) g.push_back({*it, t.birth + 1, t.src});
    }
  }

  // first k letters (with source index) of g at time T; `full` if that is all of it
  std::vector<std::pair<Dir, int>> expand(Side g, int T, size_t k, bool& full) const {
    std::vector<std::pair<Dir, int>> out;
    while (out.size() < k && !g.empty()) {
      head(g, T);
      out.push_back({g.back().l, g.back().src});
      g.pop_back();
    }
    full = g.empty();
    return out;
  }

  bool legal0(Dir a, Dir b) const {
    if (a == b) return false;
    if (prefix_) return !(Turn(a, b) == prefix_->illegal[0]);
    return !ill_[0].count(Turn(a, b));
  }

  bool illegal_at(int T, const Turn& t) const {
    if (prefix_) return t == prefix_->illegal[T];
    return ill_[T % n_].count(t) > 0;
  }

  bool final_ok(const Turn& t) const {
    if (prefix_->final_turn) return t == *prefix_->final_turn;
    if (!t.contains(prefix_->final_red_vertex)) return false;
    return !(prefix_->final_red_edge && t == *prefix_->final_red_edge);
  }

  std::vector<Dir> candidates(Dir last) const {
    std::vector<Dir> out;
    for (Dir e : order_)
      if (e != bar(last) && legal0(bar(last), e)) out.push_back(e);
    return out;
  }

  void event(const Word& p1, const Word& p2, int T, const Turn& jt, const char* kind) {
    rep_.events.push_back({p1, p2, T, jt, kind});
  }

  void explore(int T, Word P1, Word P2, Side g1, Side g2, std::vector<std::string> trace) {
    if (++rep_.nodes > b_.max_nodes) {
      rep_.inconclusive++;
      event(P1, P2, T, Turn(), "budget");
      return;
    }
    while (true) {
      while (!g1.empty() && !g2.empty()) {
        head(g1, T);
        head(g2, T);
        if (g1.back().l != g2.back().l) break;
        g1.pop_back();
        g2.pop_back();
      }
      if (g1.empty() || g2.empty()) {
        int side = g1.empty() ? 1 : 2;
        Word& P = side == 1 ? P1 : P2;
        if (static_cast<int>(P.size()) >= b_.max_len) {
          rep_.inconclusive++;
          event(P1, P2, T, Turn(), "length");
          return;
        }
        for (Dir e : candidates(P.back())) {
          Word n1 = P1, n2 = P2;
          Side s1 = g1, s2 = g2;
          if (side == 1) { s1 = {{e, 0, static_cast<int>(P1.size())}}; n1.push_back(e); }
          else { s2 = {{e, 0, static_cast<int>(P2.size())}}; n2.push_back(e); }
          auto tr = trace;
          tr.push_back("stage " + std::to_string(T) + ": rho" + std::to_string(side) + " gains " + format_dir(e, r_));
          explore(T, n1, n2, s1, s2, tr);
        }
        return;
      }
      Turn jt(g1.back().l, g2.back().l);
      if (prefix_ && T == n_) {
        if (final_ok(jt)) {
          rep_.inconclusive++;
          event(P1, P2, T, jt, "survives");
        } else {
          event(P1, P2, T, jt, "final");
        }
        return;
      }
      if (!illegal_at(T, jt)) {
        event(P1, P2, T, jt, "IIc");
        return;
      }
      if (!prefix_ && T > 0 && T % n_ == 0) {
        int p = T / n_;
        auto c1 = closures(P1, g1, T);
        auto c2 = closures(P2, g2, T);
        for (auto& a : c1)
          for (auto& b : c2) {
            PnpCandidate c;
            c.rho1 = a.path;
            c.rho2 = b.path;
            c.period = p;
            if (a.kind == Ending::partial) c.partial1 = PartialMark{a.path.back(), p};
            if (b.kind == Ending::partial) c.partial2 = PartialMark{b.path.back(), p};
            c.case_trace = trace;
            rep_.found.push_back(c);
          }
        if (p >= b_.max_period) {
          rep_.inconclusive++;
          event(P1, P2, T, jt, "cap");
          return;
        }
      }
      ++T;
    }
  }

  std::vector<SideEnd> closures(const Word& P, const Side& g, int T) const {
    size_t m = P.size();
    bool full = false;
    auto ex = expand(g, T, m + 2, full);
    Word lets;
    for (auto& x : ex) lets.push_back(x.first);
    std::vector<SideEnd> res;
    if (full && lets == P) res.push_back({Ending::vertex, P});
    if (full && lets.size() < m && std::equal(lets.begin(), lets.end(), P.begin())) {
      Word owed(P.begin() + static_cast<long>(lets.size()), P.end());
      auto more = debt(P, owed, T);
      res.insert(res.end(), more.begin(), more.end());
    }
    if ((!full || lets.size() > m) && lets.size() >= m && std::equal(P.begin(), P.end(), lets.begin()) &&
        ex[m - 1].second == static_cast<int>(m) - 1)
      res.push_back({Ending::partial, P});
    return res;
  }

  // the image is a proper prefix of the path: keep appending letters until it catches up
  std::vector<SideEnd> debt(const Word& P, const Word& owed, int T) const {
    std::vector<SideEnd> res;
    std::set<std::pair<Word, Dir>> seen;
    struct Item { Word queue; Dir last; Word path; };
    std::vector<Item> stack{{owed, P.back(), P}};
    while (!stack.empty()) {
      Item it = stack.back();
      stack.pop_back();
      if (static_cast<int>(it.path.size()) > b_.max_len || !seen.insert({it.queue, it.last}).second) continue;
      for (Dir e : candidates(it.last)) {
        Word Q = it.queue;
        Q.push_back(e);
        bool full = false;
        auto ex = expand({{e, 0, 0}}, T, Q.size() + 1, full);
        Word H;
        for (auto& x : ex) H.push_back(x.first);
        Word path = it.path;
        path.push_back(e);
        if (full && H == Q)
          res.push_back({Ending::vertex, path});
        else if (H.size() > Q.size() && std::equal(Q.begin(), Q.end(), H.begin()))
          res.push_back({Ending::partial, path});
        else if (full && H.size() < Q.size() && std::equal(H.begin(), H.end(), Q.begin()))
          stack.push_back({Word(Q.begin() + static_cast<long>(H.size()), Q.end()), e, path});
      }
    }
    return res;
  }
};

bool expanding(const RoseMap& g) {
  for (auto& w : g.images())
    if (w.size() > 1) return true;
  return false;
}

}  // namespace

PnpReport detect_ipnps(int rank, const std::vector<Fold>& folds, const Budget& budget) {
  PnpReport rep;
  RoseMap g = compose_folds(rank, folds);
  if (!is_irreducible(transition_matrix(g))) rep.precondition = "transition matrix is reducible";
  else if (!expanding(g)) rep.precondition = "map is not expanding";
  else if (int bad = 0; !is_tight(rank, folds, &bad))
    rep.precondition = "fold " + std::to_string(bad) + " creates a turn that a later rotation folds";
  if (!rep.precondition.empty()) {
    rep.outcome = PnpOutcome::inconclusive_budget;
    return rep;
  }
  return Search(rank, folds, budget, nullptr).run();
}

PnpReport search_prefix(int rank, const std::vector<Fold>& folds, const PrefixSpec& spec, const Budget& budget) {
  if (spec.illegal.size() != folds.size()) {
    PnpReport rep;
    rep.precondition = "need one illegal turn per stage";
    rep.outcome = PnpOutcome::inconclusive_budget;
    return rep;
  }
  return Search(rank, folds, budget, &spec).run();
}

PreventionResult verify_prevention_sequence(const Composition& prefix, const Budget& budget) {
  PrefixSpec spec;
  std::vector<Fold> folds;
  for (auto& t : prefix.triples) {
    folds.push_back(t.fold);
    spec.illegal.push_back(t.fold.folded());
  }
  const auto& last = prefix.triples.back().dest;
  spec.final_red_vertex = last.red_vertex();
  spec.final_red_edge = last.red_edge();
  PreventionResult res;
  res.report = search_prefix(prefix.rank, folds, spec, budget);
  res.verified = res.report.outcome == PnpOutcome::none_found_exhaustive;
  res.inconclusive = !res.verified;
  return res;
}

namespace {

// tightened g^p(prefix) kept as slices of precomputed letter images, so a push costs only what cancels
struct Slice {
  const Word* w;
  int begin, end;
};

struct OracleStack {
  std::vector<Slice> s;
  long len = 0;

  void push(const Word& img) {
    int k = 0, n = static_cast<int>(img.size());
    while (k < n && !s.empty()) {
      Slice& top = s.back();
      if ((*top.w)[top.end - 1] != bar(img[k])) break;
      --top.end;
      --len;
      ++k;
      if (top.end == top.begin) s.pop_back();
    }
    if (k < n) {
      s.push_back({&img, k, n});
      len += n - k;
    }
  }

  bool equals(const Word& w) const {
    if (len != static_cast<long>(w.size())) return false;
    size_t at = 0;
    for (auto& sl : s)
      for (int i = sl.begin; i < sl.end; ++i)
        if ((*sl.w)[i] != w[at++]) return false;
    return true;
  }
};

struct Oracle {
  int rank, max_len, max_period;
  std::vector<std::vector<Word>> img;  // [p][dir_index]
  std::vector<NielsenPath> out;
  Word w;

  void rec(const std::vector<OracleStack>& st) {
    if (!w.empty())
      for (int p = 0; p < max_period; ++p)
        if (st[p].equals(w)) {
          out.push_back({w, p + 1});
          break;
        }
    if (static_cast<int>(w.size()) == max_len) return;
    for (int k = 1; k <= rank; ++k)
      for (Dir e : {k, -k}) {
        if (!w.empty() && e == bar(w.back())) continue;
        std::vector<OracleStack> next = st;
        for (int p = 0; p < max_period; ++p) next[p].push(img[p][dir_index(e)]);
        w.push_back(e);
        rec(next);
        w.pop_back();
      }
  }
};

}  // namespace

std::vector<NielsenPath> nielsen_oracle(const RoseMap& g, int max_len, int max_period) {
  Oracle o{g.rank(), max_len, max_period, {}, {}, {}};
  RoseMap cur = g;
  for (int p = 1; p <= max_period; ++p) {
    std::vector<Word> row;
    for (int i = 0; i < 2 * g.rank(); ++i) row.push_back(cur.image_of(dir_from_index(i)));
    o.img.push_back(std::move(row));
    if (p < max_period) cur = compose(g, cur);
  }
  o.rec(std::vector<OracleStack>(max_period));
  return o.out;
}

bool check_candidate(const RoseMap& g, const PnpCandidate& c, std::string* why) {
  auto fail = [&](const std::string& s) { if (why) *why = s; return false; };
  if (c.rho1.empty() || c.rho2.empty() || c.period < 1) return fail("empty side");
  RoseMap gp = power(g, c.period);
  Word A = ttf::apply(gp, c.rho1), B = ttf::apply(gp, c.rho2);
  size_t t = 0;
  while (t < A.size() && t < B.size() && A[t] == B[t]) ++t;
  auto side_ok = [&](const Word& rho, const Word& img, bool partial) {
    Word gam(img.begin() + static_cast<long>(t), img.end());
    if (!partial) return gam == rho;
    if (gam.size() <= rho.size() || !std::equal(rho.begin(), rho.end(), gam.begin())) return false;
    Word head(rho.begin(), rho.end() - 1);
    long before = static_cast<long>(ttf::apply(gp, head).size()) - static_cast<long>(t);
    return before <= static_cast<long>(rho.size()) - 1;
  };
  if (!side_ok(c.rho1, A, c.partial1.has_value())) return fail("rho1 side does not close up");
  if (!side_ok(c.rho2, B, c.partial2.has_value())) return fail("rho2 side does not close up");
  if (!c.partial1 && !c.partial2) {
    Word path = concat(invert(c.rho1), c.rho2);
    if (ttf::apply(gp, path) != path) return fail("path is not fixed");
  }
  return true;
}

std::string narrate(const PnpReport& r, int rank) {
  std::ostringstream os;
  os << "outcome: " << outcome_name(r.outcome) << "\n";
  if (!r.precondition.empty()) os << "precondition: " << r.precondition << "\n";
  os << "nodes: " << r.nodes << "\n";
  int k = 0;
  for (const auto& e : r.events) {
    os << "Case " << ++k << ": rho1 = " << format_word(e.rho1, rank) << "..., rho2 = " << format_word(e.rho2, rank) << "...\n  ";
    std::string jt = format_turn(e.junction, rank), st = std::to_string(e.stage);
    if (e.kind == "IIc") os << "stage " << st << ": junction " << jt << " is not the illegal turn T_" << st << ", ruled out";
    else if (e.kind == "final") os << "stage " << st << ": junction " << jt << " cannot be T_" << st << ", ruled out";
    else if (e.kind == "survives") os << "stage " << st << ": junction " << jt << " may still be T_" << st << ", undecided by the prefix";
    else if (e.kind == "cap") os << "stage " << st << ": period cap reached, undecided";
    else if (e.kind == "length") os << "side length cap reached, undecided";
    else os << "branch budget exhausted";
    os << "\n";
  }
  for (const auto& c : r.found) {
    os << "found: period " << c.period << " path " << format_word(invert(c.rho1), rank) << "." << format_word(c.rho2, rank);
    if (c.partial1) os << " (first edge partial)";
    if (c.partial2) os << " (last edge partial)";
    os << "\n";
  }
  return os.str();
}

}  // namespace ttf
