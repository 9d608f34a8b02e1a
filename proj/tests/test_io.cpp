#include "doctest.h"
#include "ttforge/forge.hpp"
#include "ttforge/io.hpp"

using namespace ttf;

TEST_CASE("automorphism files in both syntaxes") {
  auto a = parse_automorphism("# comment\na -> abA\nb -> b\n");
  auto b = parse_automorphism("rank: 2\nx1 -> x1 x2 X1\nx2 -> x2\n");
  CHECK(a == b);
  CHECK(a.image(1) == parse_word("abA"));
  CHECK(parse_automorphism(write_automorphism(a)) == a);
}

TEST_CASE("rank 3 map file") {
  auto g = parse_automorphism(read_file(TTF_DATA "/r3_map.txt"));
  CHECK(g == rank3_map());
}

TEST_CASE("bad automorphism files") {
  CHECK_THROWS_AS(parse_automorphism("a -> \n"), ParseError);
  CHECK_THROWS_AS(parse_automorphism("a => b\n"), ParseError);
  CHECK_THROWS(parse_automorphism("a -> aA\nb -> b\n"));
  CHECK_THROWS_AS(read_file("/nonexistent/file"), ParseError);
}

TEST_CASE("ltt files round trip") {
  for (int r = 3; r <= 5; ++r)
    for (int j = 1; j <= 2 * r - 1; ++j) {
      auto G = standard_structure(r, j);
      std::string text = write_ltt(G);
      CHECK(text.find("purple_edge: complete") != std::string::npos);
      CHECK(parse_ltt(text) == G);
    }
  // explicit edges when the purple part is not complete
  auto G = make_structure(3, from_x_label(6), from_x_label(1), {Turn(1, 2), Turn(2, -2)});
  std::string text = write_ltt(G);
  CHECK(text.find("complete") == std::string::npos);
  CHECK(parse_ltt(text) == G);
}

TEST_CASE("twist structure file") {
  auto G = parse_ltt(read_file(TTF_DATA "/twist_r3.ltt"));
  CHECK(G.rank == 3);
  CHECK(G.red_vertex() == -1);
  CHECK(*G.red_edge() == Turn(-1, 2));
  CHECK(validate(G, true).ok);
}

TEST_CASE("bad ltt files") {
  CHECK_THROWS_AS(parse_ltt("rank: 3\nred_vertex: a\n"), ParseError);
  CHECK_THROWS_AS(parse_ltt("rank: 3\nred_vertex: x9\n"), ParseError);
  CHECK_THROWS_AS(parse_ltt("rank: 3\nred_edge: x1\n"), ParseError);
  CHECK_THROWS_AS(parse_ltt("rank: 3\ncolour: x1\n"), ParseError);
}

TEST_CASE("decomposition files round trip") {
  for (int r = 3; r <= 4; ++r) {
    auto d = generate(r).decomposition;
    auto back = parse_decomposition(write_decomposition(d)).decomposition;
    CHECK(back.rank == d.rank);
    CHECK(back.folds == d.folds);
    CHECK(back.structures == d.structures);
    CHECK(back.expected == d.expected);
  }
  auto f = parse_decomposition(read_file(TTF_DATA "/r3_decomposition.txt"));
  CHECK_FALSE(f.prefix);
  CHECK(f.decomposition.folds == rank3_folds());
  CHECK(f.decomposition.expected == rank3_map());
}

TEST_CASE("fold lines in both syntaxes") {
  auto a = parse_decomposition("fold: c -> a c\nfold: B -> d B\n").decomposition;
  auto b = parse_decomposition("fold: e3 -> e1 e3\nfold: E2 -> e4 E2\n").decomposition;
  CHECK(a.folds == b.folds);
  CHECK(a.rank == 4);
  CHECK(a.folds[1] == Fold{-2, 4});
}

TEST_CASE("bad decomposition files") {
  CHECK_THROWS_AS(parse_decomposition("fold: c -> a b\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("fold: c -> c a\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("mode: sideways\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("rank: 2\nfold: b -> a b\nstructure: 1\n  red_vertex: x1\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("rank: 2\nfold: b -> a b\nexpect: a -> a\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("rank: 2\nfinal_turn: a\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("bogus: 1\n"), ParseError);
}

TEST_CASE("prefix files") {
  auto f = parse_decomposition(read_file(TTF_DATA "/prevention_r4_prefix.txt"));
  CHECK(f.prefix);
  CHECK(f.decomposition.rank == 4);
  CHECK(f.decomposition.folds.size() == 6);
  REQUIRE(f.decomposition.structures.size() == 1);
  CHECK(f.decomposition.structures[0] == complete_structure(4, 1, 2));
  CHECK_FALSE(f.final_turn);
}

TEST_CASE("sniffing file kinds") {
  CHECK(sniff("a -> ab\n") == FileKind::automorphism);
  CHECK(sniff("rank: 2\nfold: b -> a b\n") == FileKind::decomposition);
  CHECK(sniff("rank: 3\nred_vertex: x6\n") == FileKind::ltt);
}

TEST_CASE("directions, vertices and path specs") {
  CHECK(parse_direction("a") == 1);
  CHECK(parse_direction("C") == -3);
  CHECK(parse_direction("x4") == 4);
  CHECK(parse_direction("E2") == -2);
  CHECK(parse_vertex_label("x4") == -2);
  CHECK(parse_vertex_label("x5") == 3);
  CHECK_THROWS(parse_vertex_label("4"));
  auto p = parse_path_spec("[x2, x3, x4]");
  CHECK(path_labels(p) == std::vector<int>{2, 3, 4});
  CHECK(parse_path_spec("2,3,4") == p);
  CHECK(parse_path_spec("2 3 4") == p);
  CHECK_THROWS(parse_path_spec("2"));
}
