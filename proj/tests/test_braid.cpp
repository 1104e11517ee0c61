#include <doctest.h>

#include "helpers.hpp"

using namespace bp;
using bptest::Rng;

TEST_CASE("parse_braid_word accepts both syntaxes") {
  BraidWord b = parse_braid_word("[1,-2,1,-2]", 3);
  CHECK(b.width == 3);
  CHECK(b.letters == std::vector<int>{1, -2, 1, -2});
  BraidWord t = parse_braid_word("s1 s2^-1 s1 s2^-1");
  CHECK(t.width == 3);
  CHECK(t.letters == b.letters);
  // round trip on the canonical form
  CHECK(parse_braid_word(b.text(), b.width).letters == b.letters);
}

TEST_CASE("parse_braid_word rejections") {
  CHECK_NOTHROW(parse_braid_word("[1]", 2));          // unknot closure is a knot
  CHECK_THROWS_AS(parse_braid_word("[1,1]", 2), NotAKnot);  // Hopf link
  CHECK_THROWS_AS(parse_braid_word("[1,x]"), SyntaxError);
  CHECK_THROWS_AS(parse_braid_word("[3]", 2), IndexError);
  CHECK_THROWS_AS(parse_braid_word("[0]"), SyntaxError);
  CHECK_THROWS_AS(parse_braid_word("q7"), SyntaxError);
}

TEST_CASE("closure counts: arcs n, regions n+2, slots 3m+1") {
  Diagram d = fixture::knot41_kink_diagram();
  CHECK(d.num_arcs() == 5);
  CHECK(d.num_regions() == 7);
  CHECK(d.num_slots() == 13);
  Diagram e = closure_diagram(parse_braid_word("[1,-2,1,-2]", 3));
  CHECK(e.num_arcs() == 4);
  CHECK(e.num_regions() == 6);
  CHECK(e.num_slots() == 10);
  CHECK(e.writhe == 0);
  CHECK(fixture::knot41_kink_diagram().writhe == -1);
}

TEST_CASE("writhe is congruent to the length mod 2") {
  Rng rng(21);
  const char* words[] = {"[1]", "[1,1,1]", "[1,-2,1,-2]", "[-3,2,-3,2,-1]",
                         "[1,1,-1]", "[1,2,1,2]"};
  for (const char* w : words) {
    BraidWord b = parse_braid_word(w);
    CHECK(((b.writhe() - b.length()) % 2 + 2) % 2 == 0);
  }
}

TEST_CASE("closure identification and slot alternation") {
  Diagram d = fixture::knot41_kink_diagram();
  int n = d.num_arcs();
  auto top = d.level_slots(1), bottom = d.level_slots(n + 1);
  REQUIRE(top.size() == bottom.size());
  for (std::size_t s = 0; s < top.size(); ++s) {
    CHECK(top[s].kind == bottom[s].kind);
    CHECK(top[s].arc == bottom[s].arc);
    CHECK(top[s].region == bottom[s].region);
    int phase = static_cast<int>(s) % 3;
    CHECK(top[s].kind == (phase == 0 ? Slot::Region : phase == 1 ? Slot::Under : Slot::Over));
  }
}

TEST_CASE("fixture diagram matches the reference tables") {
  Diagram d = fixture::knot41_kink_diagram();
  const int arcs[5][4] = {{1, 2, 4, 3}, {1, 2, 3, 5}, {1, 4, 2, 5}, {1, 4, 5, 3}, {1, 1, 4, 3}};
  const int regs[5][5] = {{1, 2, 3, 6, 7},
                          {1, 2, 3, 5, 7},
                          {1, 2, 4, 5, 7},
                          {1, 2, 4, 6, 7},
                          {1, 2, 3, 6, 7}};
  for (int i = 1; i <= 5; ++i) {
    for (int p = 1; p <= 4; ++p) CHECK(d.arc(i, p) == arcs[i - 1][p - 1]);
    for (int g = 1; g <= 5; ++g) CHECK(d.region(i, g) == regs[i - 1][g - 1]);
  }
}

TEST_CASE("region renumbering validates its input") {
  Diagram d = closure_diagram(parse_braid_word("[1,1,1]", 2));
  CHECK_THROWS_AS(d.renumber_regions({1, 2, 3}), IndexError);        // wrong size
  CHECK_THROWS_AS(d.renumber_regions({1, 1, 2, 3, 4}), IndexError);  // not a bijection
  CHECK_NOTHROW(d.renumber_regions({5, 4, 3, 2, 1}));
  CHECK(d.region(1, 1) == 5);
}

TEST_CASE("wirtinger presentation shape") {
  Diagram tre = closure_diagram(parse_braid_word("[1,1,1]", 2));
  Presentation p = wirtinger_presentation(tre);
  CHECK(p.num_generators == 3);
  CHECK(p.relations.size() == 3);
  for (const auto& r : p.relations) CHECK(Presentation::relation_word(r).size() == 4);
}

TEST_CASE("fixture relations hold for the stored matrices") {
  WirtingerRep rep = fixture::knot41_kink_rep();
  Presentation p = wirtinger_presentation(rep.diagram);
  bool found_g234 = false;
  for (const auto& r : p.relations) {
    Mat2 m = evaluate_word(rep, Presentation::relation_word(r));
    CHECK(mat_dist(m, Mat2::Identity()) < 1e-12);
    if (r.over == 2 && r.in == 3 && r.out == 4) found_g234 = true;
  }
  CHECK(found_g234);  // the crossing shared by g2, g3, g4
}

TEST_CASE("longitude words have zero total exponent") {
  for (const char* w : {"[1]", "[1,1,1]", "[1,-2,1,-2]", "[-3,2,-3,2,-1]"}) {
    Diagram d = closure_diagram(parse_braid_word(w));
    LongitudeWords lw = longitude_word(d);
    int total = 0;
    for (const auto& [g, e] : lw.canonical) total += e;
    CHECK(total == 0);
    int bb = 0;
    for (const auto& [g, e] : lw.blackboard) bb += e;
    CHECK(bb == d.writhe);
  }
}

TEST_CASE("fixture longitude trace gives the obstruction") {
  WirtingerRep rep = fixture::knot41_kink_rep();
  LongitudeWords lw = longitude_word(rep.diagram);
  Mat2 lbf = evaluate_word(rep, lw.blackboard);
  // rho(lambda_bf) fixes the arc-1 eigendirection with eigenvalue +1
  CHECK((lbf * Vec2(1, 0) - Vec2(1, 0)).cwiseAbs().maxCoeff() < 1e-12);
  Mat2 lam = evaluate_word(rep, lw.canonical);
  CHECK(std::abs(lam.trace() / 2.0 - cx(-1, 0)) < 1e-12);
}
