#include "ttforge/forge.hpp"

#include <future>
#include <stdexcept>

namespace ttf {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    default: return "unknown";
  }
}

FicReport verify_fic(const Decomposition& d, const Budget& budget, int jobs) {
  FicReport rep;
  auto v = validate_ideal_decomposition(d);
  rep.valid_decomposition = v.ok;
  rep.decomposition_message = v.ok ? "ok" : v.condition + ": " + v.message;
  const RoseMap& g = v.composite;
  auto pnp_job = [&]() { return detect_ipnps(d.rank, d.folds, budget); };
  std::future<PnpReport> fut;
  if (jobs > 1) fut = std::async(std::launch::async, pnp_job);
  rep.train_track = is_train_track(g).ok;
  auto M = transition_matrix(g);
  rep.pf_exponent = primitive_exponent(M);
  rep.pf = rep.pf_exponent.has_value();
  auto lw = local_whitehead_graph(g);
  rep.lw_components = component_count(lw);
  rep.lw_connected = is_connected(lw);
  rep.pnp = jobs > 1 ? fut.get() : pnp_job();
  switch (rep.pnp.outcome) {
    case PnpOutcome::none_found_exhaustive: rep.pnp_free = Verdict::yes; break;
    case PnpOutcome::found: rep.pnp_free = Verdict::no; break;
    default: rep.pnp_free = Verdict::unknown;
  }
  if (rep.pnp_free == Verdict::yes) rep.ideal = ideal_whitehead_graph(g, PnpFreeCertificate{g, true});
  if (!rep.train_track || !rep.pf || !rep.lw_connected || rep.pnp_free == Verdict::no)
    rep.verdict = Verdict::no;
  else if (rep.pnp_free == Verdict::unknown)
    rep.verdict = Verdict::unknown;
  else
    rep.verdict = Verdict::yes;
  return rep;
}

RoseMap rank3_map() {
  return RoseMap(3, {parse_word("abaBaacBabaBaacbabaBaacabaBaacBa"),
                     parse_word("babaBaacAbCAAbABACAAbABABCAAbABAb"), parse_word("abaBaac")});
}

std::vector<Fold> rank3_folds() {
  // recovered by peeling elementary folds off the map, first fold first
  return {{1, 3}, {-2, 1}, {-2, -3}, {1, -2}, {1, 3}, {1, 2}, {1, 3}, {1, 3},
          {1, -2}, {3, 1}, {3, 2}, {3, 1}, {3, -2}, {3, 1}, {3, 1}};
}

namespace {

int bx(int k) { return k % 2 ? k + 1 : k - 1; }

std::vector<int> cat(const std::vector<std::vector<int>>& parts) {
  std::vector<int> out = parts.front();
  for (size_t p = 1; p < parts.size(); ++p) {
    if (out.back() != parts[p].front()) throw std::logic_error("recipe pieces do not join");
    out.insert(out.end(), parts[p].begin() + 1, parts[p].end());
  }
  return out;
}

std::vector<int> L(int i, int k) { return {i, bx(k), k, bx(k), k, bx(i), i, bx(i), i, k, bx(k), bx(i), i}; }
std::vector<int> T(int i, int k) { return {i, bx(k), k}; }

// a construction path [s, p1, q1, ...] gives folds s -> q s, last q first
std::vector<std::pair<int, int>> path_folds(const std::vector<int>& path) {
  std::vector<std::pair<int, int>> out;
  for (size_t m = path.size() - 1; m >= 2; m -= 2) out.push_back({path[0], path[m]});
  return out;
}

struct RecipePaths {
  std::vector<int> third, gamma2, gamma1;
};

RecipePaths recipe_paths(int r) {
  int R = 2 * r;
  RecipePaths p;
  p.third = cat({{4, 5, 6}, {6, 2, 1, R - 1, R, 5, 6}});
  std::vector<std::vector<int>> g2{{2, 3, 4}, T(4, R - 1)};
  for (int k = 3; k <= R - 3; k += 2) g2.push_back(L(R - 1, k));
  g2.push_back(T(R - 1, 4));
  p.gamma2 = cat(g2);
  std::vector<std::vector<int>> g1{{R, 1, 2}};
  for (int a = 2; a <= R - 4; a += 2) {
    for (int k = a + 1; k <= R - 3; k += 2) g1.push_back(L(a, k));
    g1.push_back(a == R - 4 ? T(a, 2) : T(a, a + 2));
  }
  p.gamma1 = cat(g1);
  return p;
}

}  // namespace

std::vector<std::pair<int, int>> recipe_labels(int r) {
  if (r < 4) throw std::invalid_argument("the general recipe needs r >= 4");
  int R = 2 * r;
  std::vector<std::pair<int, int>> f{{5, R}, {3, 5}, {2, 3}, {2, R}, {2, 3}, {2, R}};
  f.push_back({R, 2});
  for (int m = 1; m <= r - 2; ++m) f.push_back({R - 2 * m, R - 2 * m + 2});
  auto P = recipe_paths(r);
  auto third = path_folds(P.third);
  f.insert(f.end(), third.begin() + 1, third.end());  // its switch closes the schedule
  for (auto* path : {&P.gamma2, &P.gamma1}) {
    auto pf = path_folds(*path);
    f.insert(f.end(), pf.begin(), pf.end());
  }
  return f;
}

GeneratedRep generate(int r) {
  if (r < 3) throw std::invalid_argument("generate needs r >= 3");
  GeneratedRep rep;
  rep.rank = r;
  rep.decomposition.rank = r;
  if (r == 3) {
    rep.decomposition.folds = rank3_folds();
    rep.decomposition.expected = rank3_map();
    rep.provenance.push_back("rank 3: fixed map; fold sequence recovered by peeling and checked against it");
  } else {
    for (auto [j, i] : recipe_labels(r)) rep.decomposition.folds.push_back({from_x_label(j), from_x_label(i)});
    rep.decomposition.structures.push_back(standard_structure(r, 1));
    rep.provenance.push_back("switch schedule indices between the fixed ends follow the step-down-by-two progression");
  }
  auto v = validate_ideal_decomposition(rep.decomposition);
  if (!v.ok)
    throw std::runtime_error("generated decomposition fails " + v.condition + " at fold " + std::to_string(v.location) +
                             ": " + v.message);
  rep.composite = v.composite;
  if (r > 3) {
    // rebuild each construction block from its path and compare with the assembled folds
    auto P = recipe_paths(r);
    int n6 = 6 + (r - 1);
    int third_first = n6;  // 1-based index of the schedule's last switch
    int third_len = static_cast<int>(P.third.size() - 1) / 2;
    int g2_first = third_first + third_len;
    int g2_len = static_cast<int>(P.gamma2.size() - 1) / 2;
    int g1_first = g2_first + g2_len;
    int g1_len = static_cast<int>(P.gamma1.size() - 1) / 2;
    struct B { const char* name; const std::vector<int>* path; int first, len; };
    for (B b : {B{"third loop", &P.third, third_first, third_len}, B{"gamma_II", &P.gamma2, g2_first, g2_len},
                B{"gamma_I", &P.gamma1, g1_first, g1_len}}) {
      const LttStructure& dest = v.structures[b.first - 1 + b.len];
      const LttStructure& src = v.structures[b.first - 1];
      auto comp = composition_from_path(dest, path_from_labels(*b.path), src.dbar_a());
      for (int t = 0; t < b.len; ++t)
        if (!(comp.triples[t].fold == rep.decomposition.folds[b.first - 1 + t]) ||
            !(comp.triples[t].source == v.structures[b.first - 1 + t]))
          throw std::runtime_error(std::string("construction block ") + b.name + " disagrees with its path");
      rep.blocks.push_back({b.name, b.first, b.first + b.len - 1, path_from_labels(*b.path)});
    }
  }
  return rep;
}

}  // namespace ttf
