// One line per acceptance criterion. Exit status is 0 when every criterion either
// passes or fails in exactly the way recorded in README (known failures); anything
// else, including a known failure that changes shape or starts passing, exits 1.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "gen.hpp"
#include "ttforge/forge.hpp"
#include "ttforge/io.hpp"

using namespace ttf;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  bool known = false;  // failed for the recorded reason
  std::string detail;
};

std::string ttforge_bin;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

DecompFile load(const char* name) { return parse_decomposition(read_file(std::string(TTF_DATA) + "/" + name)); }

// 1: rank 3 representative
Outcome golden_r3() {
  RoseMap g = rank3_map();
  bool tt = is_train_track(g).ok;
  auto e = primitive_exponent(transition_matrix(g));
  bool lw = is_connected(local_whitehead_graph(g));
  auto rep = detect_ipnps(3, rank3_folds());
  bool none = rep.outcome == PnpOutcome::none_found_exhaustive;
  std::size_t iw = 0;
  int verts = 0;
  bool b_loop = false;  // {b, B} untaken
  if (none) {
    auto G = ideal_whitehead_graph(g, PnpFreeCertificate{g, true});
    iw = G.edges.size();
    verts = G.vertex_count();
    b_loop = !G.edges.count(Turn(2, -2));
  }
  Outcome o;
  o.pass = tt && e && *e <= 5 && lw && none && verts == 5 && iw == 10;
  o.known = tt && e && *e <= 5 && lw && none && verts == 5 && iw == 9 && b_loop;
  std::ostringstream s;
  s << "tt=" << tt << " exponent=" << (e ? *e : -1) << " lw_connected=" << lw << " pnp=" << outcome_name(rep.outcome)
    << " ideal=" << verts << "v/" << iw << "e (want 10)";
  o.detail = s.str();
  return o;
}

// 2: generate(r) for r = 3..6
Outcome sweep() {
  Outcome o;
  o.pass = true;
  bool others = true, r3_shape = false;
  std::ostringstream s;
  for (int r = 3; r <= 6; ++r) {
    auto G = generate(r);
    auto v = validate_ideal_decomposition(G.decomposition);
    auto f = verify_fic(G.decomposition, {}, 2);
    std::size_t want = static_cast<std::size_t>((2 * r - 1) * (r - 1));
    std::size_t got = f.ideal ? f.ideal->edges.size() : 0;
    bool ok = v.ok && f.verdict == Verdict::yes && f.ideal && is_complete_on(*f.ideal, 2 * r - 1) && got == want;
    if (r == 3)
      r3_shape = v.ok && f.verdict == Verdict::yes && got == 9;
    else
      others = others && ok;
    o.pass = o.pass && ok;
    s << " r" << r << ":" << (v.ok ? "valid" : "invalid") << "," << verdict_name(f.verdict) << "," << got << "/" << want;
  }
  o.known = !o.pass && others && r3_shape;
  o.detail = s.str().substr(1);
  return o;
}

// 3: six-fold prevention block on its red-edge list
Outcome prevention_r4() {
  auto f = load("prevention_r4_prefix.txt");
  auto c = make_composition(4, f.decomposition.folds, f.decomposition.structures.front());
  auto res = verify_prevention_sequence(c);
  bool z_kill = false;
  int survivors = 0;
  std::string survivor;
  for (auto& e : res.report.events) {
    if (e.rho1 == parse_word("adc") && e.rho2 == parse_word("cB") && e.stage == 4 && e.junction == Turn(3, -2) &&
        e.kind == "IIc")
      z_kill = true;
    if (e.kind == "survives") {
      ++survivors;
      survivor = format_word(e.rho1, 4) + "/" + format_word(e.rho2, 4) + " at " + format_turn(e.junction, 4);
    }
  }
  Outcome o;
  o.pass = res.verified && z_kill;
  o.known = !res.verified && res.inconclusive && z_kill && survivors == 1 &&
            survivor == "adaB/cB at " + format_turn(Turn(-2, 4), 4);
  o.detail = std::string("verified=") + (res.verified ? "1" : "0") + " z_branch_killed=" + (z_kill ? "1" : "0") +
             (survivors ? " survivor " + survivor : "");
  return o;
}

// 4: search against brute force
Outcome oracle_agreement() {
  gen::Rng rng(4004);
  int contradictions = 0, found = 0, none = 0, inconclusive = 0, bad_candidates = 0;
  for (int it = 0; it < 200; ++it) {
    int r = 2 + it % 2;
    auto f = gen::train_track(rng, r, 6);
    RoseMap g = compose_folds(r, f);
    auto rep = detect_ipnps(r, f);
    auto orc = nielsen_oracle(g, 8, 3);
    if (!orc.empty() && rep.outcome == PnpOutcome::none_found_exhaustive) ++contradictions;
    for (auto& c : rep.found) bad_candidates += !check_candidate(g, c);
    found += rep.outcome == PnpOutcome::found;
    none += rep.outcome == PnpOutcome::none_found_exhaustive;
    inconclusive += rep.outcome == PnpOutcome::inconclusive_budget;
  }
  auto d = load("planted_inp.txt").decomposition;
  RoseMap pg = compose_folds(d.rank, d.folds);
  bool planted = detect_ipnps(d.rank, d.folds).outcome == PnpOutcome::found && !nielsen_oracle(pg, 8, 3).empty();
  Outcome o;
  o.pass = contradictions == 0 && bad_candidates == 0 && planted;
  std::ostringstream s;
  s << "maps=200 found=" << found << " none=" << none << " inconclusive=" << inconclusive
    << " contradictions=" << contradictions << " bad_candidates=" << bad_candidates << " planted=" << planted;
  o.detail = s.str();
  return o;
}

// 5: composition_from_path then construction_path
Outcome round_trip() {
  gen::Rng rng(5005);
  int done = 0, tries = 0, mismatches = 0;
  while (done < 100 && tries < 5000) {
    ++tries;
    int r = 3 + tries % 2;
    int j = 1 + static_cast<int>(rng() % (2 * r - 2));
    auto G = standard_structure(r, j);
    auto p = gen::construction_walk(rng, G, 8);
    if (!p) continue;
    ++done;
    mismatches += construction_path(composition_from_path(G, *p)) != *p;
  }
  auto G = parse_ltt(read_file(TTF_DATA "/twist_r3.ltt"));
  auto path = path_from_labels({2, 3, 4, 6, 5, 6, 5, 3, 4, 3, 4, 5, 6, 3, 4});
  auto c = composition_from_path(G, path);
  bool ex = construction_path(c) == path && c.automorphism().image(1) == parse_word("abCCbbcb");
  Outcome o;
  o.pass = done == 100 && mismatches == 0 && ex;
  o.detail = "paths=" + std::to_string(done) + " mismatches=" + std::to_string(mismatches) +
             " example=" + (ex ? "ok" : "bad");
  return o;
}

// 6: standard structures are birecurrent
Outcome birecurrence() {
  int total = 0, good = 0;
  for (int r = 3; r <= 6; ++r)
    for (int j = 1; j <= 2 * r - 2; ++j) {
      ++total;
      auto G = standard_structure(r, j);
      auto b = is_birecurrent(G);
      good += b.birecurrent && check_covering_loop(G, b.witness);
    }
  Outcome o;
  o.pass = good == total;
  o.detail = "structures=" + std::to_string(total) + " witnessed=" + std::to_string(good);
  return o;
}

// 7: schedule argument against the matrix
Outcome pf_schedule() {
  Outcome o;
  o.pass = true;
  std::ostringstream s;
  for (int r = 3; r <= 6; ++r) {
    auto G = generate(r);
    auto v = validate_ideal_decomposition(G.decomposition);
    bool sched = v.ok && pf_by_switch_schedule(v).holds;
    bool prim = is_primitive(transition_matrix(G.composite));
    o.pass = o.pass && sched && prim;
    s << " r" << r << ":" << sched << prim;
  }
  o.detail = "schedule,primitive" + s.str();
  return o;
}

// 8: CLI artifacts are reproducible
Outcome determinism() {
  Outcome o;
  if (ttforge_bin.empty()) {
    o.detail = "no ttforge binary given";
    return o;
  }
  fs::path base = fs::temp_directory_path() / ("ttforge_accept_" + std::to_string(::getpid()));
  fs::remove_all(base);
  fs::create_directories(base);
  for (const char* d : {"a", "b"}) {
    std::string cmd = "\"" + ttforge_bin + "\" generate --rank 4 --out \"" + (base / d).string() + "\" > /dev/null";
    if (std::system(cmd.c_str()) != 0) {
      o.detail = "generate failed";
      fs::remove_all(base);
      return o;
    }
  }
  int files = 0, differ = 0;
  for (auto& ent : fs::directory_iterator(base / "a")) {
    ++files;
    fs::path other = base / "b" / ent.path().filename();
    differ += !fs::exists(other) || slurp(ent.path()) != slurp(other);
  }
  int files_b = static_cast<int>(std::distance(fs::directory_iterator(base / "b"), fs::directory_iterator{}));
  o.pass = files > 0 && differ == 0 && files == files_b;
  o.detail = "files=" + std::to_string(files) + " differing=" + std::to_string(differ);
  fs::remove_all(base);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) ttforge_bin = argv[1];
  struct Criterion {
    int id;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{{1, 1, golden_r3},        {2, 30, sweep},       {3, 1, prevention_r4},
                             {4, 60, oracle_agreement}, {5, 10, round_trip},  {6, 10, birecurrence},
                             {7, 30, pf_schedule},      {8, 30, determinism}};
  int unexpected = 0;
  for (auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = o.known = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs <= c.limit_s;
    bool pass = o.pass && in_time;
    if (!o.pass && !o.known) ++unexpected;
    if (o.pass && !in_time) ++unexpected;
    char tbuf[64];
    std::snprintf(tbuf, sizeof tbuf, "%.2fs/%gs", secs, c.limit_s);
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << (!o.pass && o.known ? " (known)" : "")
              << " [" << tbuf << "] " << o.detail << "\n";
  }
  std::cout << (unexpected ? "unexpected results: " + std::to_string(unexpected) : std::string("no unexpected results"))
            << "\n";
  return unexpected ? 1 : 0;
}
