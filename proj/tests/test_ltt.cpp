#include "doctest.h"
#include "gen.hpp"
#include "ttforge/forge.hpp"

using namespace ttf;

namespace {

Dir X(int label) { return from_x_label(label); }

}  // namespace

TEST_CASE("standard structure for r=3, j=1") {
  auto G = standard_structure(3, 1);
  CHECK(G.purple_vertices().size() == 5);
  CHECK(G.purple_edges().size() == 10);
  CHECK(G.red_vertex() == X(6));
  REQUIRE(G.red_edge());
  CHECK(*G.red_edge() == Turn(X(6), X(1)));
  CHECK(G.dbar_a() == X(1));
  CHECK(G.d_a() == X(2));
  CHECK(validate(G, true).ok);
  CHECK_THROWS(standard_structure(3, 6));
  CHECK_THROWS(standard_structure(3, 0));
  CHECK(is_standard_index(3, 4));
  CHECK_FALSE(is_standard_index(3, 5));
}

TEST_CASE("standard structures validate with star") {
  for (int r = 3; r <= 6; ++r)
    for (int j = 1; j <= 2 * r - 1; ++j) {
      auto G = standard_structure(r, j);
      auto c = validate(G, true);
      CHECK_MESSAGE(c.ok, "r=" << r << " j=" << j << " " << c.axiom << " " << c.witness);
      CHECK(G.purple_edges().size() == static_cast<size_t>((2 * r - 1) * (r - 1)));
    }
}

TEST_CASE("G_{2r-1} contains the complete graph on x1..x_{2r-2}") {
  auto G = standard_structure(5, 9);
  auto pe = G.purple_edges();
  for (int a = 1; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b) CHECK(pe.count(Turn(X(a), X(b))));
}

TEST_CASE("axiom violations are named") {
  auto G = standard_structure(3, 1);
  auto two_colored = G;
  two_colored.edges.push_back({Turn(X(1), X(3)), Color::purple});
  std::sort(two_colored.edges.begin(), two_colored.edges.end());
  auto c = validate(two_colored, false);
  CHECK_FALSE(c.ok);
  CHECK(c.axiom == "ltt3");

  auto two_red = make_structure(3, X(6), X(1), G.purple_edges());
  two_red.add_edge(Turn(X(6), X(3)));
  two_red.normalize();
  c = validate(two_red, true);
  CHECK_FALSE(c.ok);
  CHECK(c.axiom == "ltt(*)4");
  CHECK(validate(two_red, false).ok);

  auto wrong_color = G;
  for (auto& e : wrong_color.edges)
    if (e.color == Color::red) e.color = Color::purple;
  c = validate(wrong_color, false);
  CHECK_FALSE(c.ok);
  CHECK(c.axiom == "ltt2");
}

TEST_CASE("identity map structure has no colored edges") {
  auto G = build_ltt(RoseMap::identity(3));
  CHECK(G.edges.empty());
  CHECK(validate(G, false).ok);
  CHECK_FALSE(validate(G, true).ok);
  CHECK_FALSE(is_birecurrent(G).birecurrent);
}

TEST_CASE("structures built from train tracks of the right type pass with star") {
  auto G3 = build_ltt(rank3_map());
  CHECK(validate(G3, true).ok);
  CHECK(G3.purple_vertices().size() == 5);
  CHECK(G3.red_vertex() == 3);  // c, the only non periodic direction
  auto G4 = build_ltt(generate(4).composite);
  CHECK(validate(G4, true).ok);
  CHECK(G4.purple_vertices().size() == 7);
}

TEST_CASE("standard loops and paths") {
  CHECK(path_labels(standard_path(3, 1, 3)) == std::vector<int>{1, 4, 3});
  auto L = path_labels(standard_loop(4, 2, 5));
  CHECK(L == std::vector<int>{2, 6, 5, 6, 5, 1, 2, 1, 2, 5, 6, 1, 2});
  CHECK(L.front() == L.back());
  CHECK_THROWS(standard_loop(4, 3, 3));
  CHECK_THROWS(standard_loop(4, 3, 4));
  CHECK_THROWS(standard_path(4, 6, 5));
  CHECK(is_smooth(standard_structure(4, 1), standard_loop(4, 2, 5)));
}

TEST_CASE("every standard loop and path is smooth where its edges exist") {
  for (int r = 3; r <= 5; ++r)
    for (int j = 1; j <= 2 * r - 1; ++j) {
      auto G = standard_structure(r, j);
      for (int i = 1; i <= 2 * r - 2; ++i)
        for (int k = 1; k <= 2 * r - 2; ++k) {
          if (i == k || edge_of(X(i)) == edge_of(X(k))) continue;
          std::string why;
          CHECK_MESSAGE(is_smooth(G, standard_loop(r, i, k), &why), r << " " << j << " " << i << " " << k << " " << why);
          CHECK(is_smooth(G, standard_path(r, i, k)));
        }
    }
}

TEST_CASE("smoothness rejects broken walks") {
  auto G = standard_structure(3, 1);
  std::string why;
  CHECK_FALSE(is_smooth(G, path_from_labels({1, 3, 1}), &why));  // no black [x3, x1]
  CHECK(is_smooth(G, path_from_labels({1, 2, 1})));  // purple [x1, x2] then its black edge
  CHECK_FALSE(is_smooth(G, path_from_labels({1, 3, 5}), &why));   // colored then colored
  CHECK_FALSE(is_smooth(G, path_from_labels({2, 6, 5}), &why));   // no purple [x2, x6]
  CHECK(is_smooth(G, path_from_labels({6, 1, 2, 3, 4})));
}

TEST_CASE("birecurrence of G_j with covering witnesses") {
  for (int r = 3; r <= 6; ++r)
    for (int j = 1; j <= 2 * r - 2; ++j) {
      auto G = standard_structure(r, j);
      auto b = is_birecurrent(G);
      REQUIRE(b.birecurrent);
      std::string why;
      CHECK_MESSAGE(check_covering_loop(G, b.witness, &why), why);
      CHECK(b.witness.v.front() == b.witness.v.back());
    }
}

TEST_CASE("a structure with a dangling red edge is not birecurrent") {
  // only purple edges from x1, so nothing re-enters x3..x6 smoothly
  std::set<Turn> pe{Turn(X(1), X(2))};
  auto G = make_structure(3, X(6), X(1), pe);
  CHECK_FALSE(is_birecurrent(G).birecurrent);
}

TEST_CASE("construction subgraph is idempotent and stable quickly") {
  for (int r = 3; r <= 5; ++r)
    for (int j = 1; j <= 2 * r - 2; ++j) {
      auto G = standard_structure(r, j);
      auto t = construction_subgraph_traced(G);
      CHECK(t.iterations <= 2 * r);
      CHECK(construction_subgraph(t.result, G.red_vertex()) == t.result);
      // step 1 drops the red vertex's black edge and the far end of it
      CHECK_FALSE(t.result.vertex[dir_index(bar(G.red_vertex()))]);
      CHECK_FALSE(t.result.black[edge_of(G.red_vertex()) - 1]);
      CHECK(t.result.vertex[dir_index(G.red_vertex())]);
    }
}

TEST_CASE("construction subgraph strips orphaned black edges") {
  // x3 and x4 carry no purple edges, so once x6 goes their black edge is orphaned
  std::set<Turn> pe{Turn(X(1), X(2))};
  auto G = make_structure(3, X(6), X(1), pe);
  auto V = construction_subgraph(G);
  CHECK_FALSE(V.black[1]);
  CHECK(V.black[0]);
  CHECK(V.colored.count(Turn(X(1), X(2))));
}

TEST_CASE("label paths round trip and splice") {
  auto p = path_from_labels({2, 3, 4, 6, 5});
  CHECK(path_labels(p) == std::vector<int>{2, 3, 4, 6, 5});
  auto s = splice({path_from_labels({1, 2, 3}), path_from_labels({3, 4, 5})});
  CHECK(path_labels(s) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK_THROWS(splice({path_from_labels({1, 2}), path_from_labels({3, 4})}));
}

TEST_CASE("edge pair permutation equivalence") {
  // flipping edge 1 swaps x1 and x2
  CHECK(epp_equivalent(standard_structure(3, 1), standard_structure(3, 2)));
  // red edge onto the other end of the red vertex's own edge is a different shape
  CHECK_FALSE(epp_equivalent(standard_structure(3, 1), standard_structure(3, 5)));
  CHECK(epp_equivalent(standard_structure(4, 3), standard_structure(4, 1)));
}

TEST_CASE("ltt dot export") {
  std::string d = to_dot(standard_structure(3, 1));
  CHECK(d == to_dot(standard_structure(3, 1)));
  CHECK(d.find("x6 [color=red]") != std::string::npos);
  CHECK(d.find("style=bold") != std::string::npos);
  CHECK(d.find("style=dashed") != std::string::npos);
}
