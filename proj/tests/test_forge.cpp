#include "doctest.h"
#include "ttforge/forge.hpp"
#include "ttforge/io.hpp"

using namespace ttf;

TEST_CASE("generate rejects small ranks") {
  CHECK_THROWS(generate(2));
  CHECK_THROWS(generate(0));
}

TEST_CASE("generate(3) is the fixed rank 3 map") {
  auto G = generate(3);
  CHECK(G.composite == rank3_map());
  CHECK(G.composite.image(3) == parse_word("abaBaac"));
  CHECK(G.decomposition.expected);
  CHECK_FALSE(G.provenance.empty());
}

TEST_CASE("verify_fic on the rank 3 representative") {
  auto G = generate(3);
  auto f = verify_fic(G.decomposition);
  CHECK(f.valid_decomposition);
  CHECK(f.train_track);
  CHECK(f.pnp_free == Verdict::yes);
  CHECK(f.pf);
  CHECK(f.lw_connected);
  CHECK(f.verdict == Verdict::yes);
  REQUIRE(f.ideal);
  // one short of complete: {b, B} never appears
  CHECK(f.ideal->vertex_count() == 5);
  CHECK(f.ideal->edges.size() == 9);
}

TEST_CASE("generated representatives for r = 4..6") {
  for (int r = 4; r <= 6; ++r) {
    auto G = generate(r);
    auto f = verify_fic(G.decomposition, {}, 2);
    CHECK(f.verdict == Verdict::yes);
    REQUIRE(f.ideal);
    CHECK(f.ideal->vertex_count() == 2 * r - 1);
    CHECK(f.ideal->edges.size() == static_cast<size_t>((2 * r - 1) * (r - 1)));
    CHECK(is_complete_on(*f.ideal, 2 * r - 1));
    CHECK(stable_whitehead_graph(G.composite).vertex_count() == 2 * r - 1);
    CHECK(G.blocks.size() == 3);
  }
}

TEST_CASE("verdict is the conjunction of the three conditions") {
  for (int r = 3; r <= 5; ++r) {
    auto f = verify_fic(generate(r).decomposition);
    bool all = f.train_track && f.pf && f.lw_connected && f.pnp_free == Verdict::yes;
    CHECK((f.verdict == Verdict::yes) == all);
  }
}

TEST_CASE("a reducible map fails primitivity") {
  Decomposition d;
  d.rank = 2;
  d.folds = {{2, 1}};  // b -> ab, a fixed
  auto f = verify_fic(d);
  CHECK_FALSE(f.pf);
  CHECK(f.verdict == Verdict::no);
}

TEST_CASE("the planted map fails condition I") {
  auto d = parse_decomposition(read_file(TTF_DATA "/planted_inp.txt")).decomposition;
  auto f = verify_fic(d);
  CHECK(f.pnp_free == Verdict::no);
  CHECK(f.pf);
  CHECK(f.verdict == Verdict::no);
  CHECK_FALSE(f.ideal);
}

TEST_CASE("budget exhaustion gives an unknown verdict") {
  auto f = verify_fic(generate(3).decomposition, Budget{32, 4, 2});
  CHECK(f.pnp_free == Verdict::unknown);
  CHECK(f.verdict == Verdict::unknown);
}

TEST_CASE("parallel and serial verification agree") {
  auto d = generate(4).decomposition;
  auto a = verify_fic(d, {}, 1), b = verify_fic(d, {}, 4);
  CHECK(a.verdict == b.verdict);
  CHECK(a.pnp.nodes == b.pnp.nodes);
  CHECK(a.pf_exponent == b.pf_exponent);
}

TEST_CASE("generate is deterministic") {
  auto a = generate(5), b = generate(5);
  CHECK(write_decomposition(a.decomposition) == write_decomposition(b.decomposition));
  CHECK(write_automorphism(a.composite) == write_automorphism(b.composite));
}

TEST_CASE("generated folds start with the prevention block") {
  auto G = generate(4);
  std::vector<Fold> want{{3, -4}, {2, 3}, {-1, 2}, {-1, -4}, {-1, 2}, {-1, -4}};
  CHECK(std::vector<Fold>(G.decomposition.folds.begin(), G.decomposition.folds.begin() + 6) == want);
}
