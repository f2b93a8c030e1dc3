#include "doctest.h"
#include "fsg/parse.hpp"
#include "fsg/random_gen.hpp"

using namespace fsg;

TEST_CASE("tree parsing") {
  CHECK(parse_tree("I") == leaf());
  CHECK(parse_tree("a(I,I)") == caret(Colour::a));
  CHECK(parse_tree(" b ( a(I,I) , I ) ") ==
        node(Colour::b, caret(Colour::a), leaf()));
  CHECK(parse_tree("a(a(I,I),a(I,I))") == tau(3, Colour::a));

  CHECK_THROWS_AS(parse_tree("c(I,I)"), ParseError);
  CHECK_THROWS_AS(parse_tree("a(I I)"), ParseError);
  CHECK_THROWS_AS(parse_tree("a(I,I"), ParseError);
  CHECK_THROWS_AS(parse_tree("a(I,I))"), ParseError);
  try {
    parse_tree("a(I;I)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("forest parsing") {
  Forest f = parse_forest("a(I,I),I,b(I,I)");
  REQUIRE(f.roots() == 3);
  CHECK(f.trees[0] == caret(Colour::a));
  CHECK(f.trees[1] == leaf());
  CHECK(f.trees[2] == caret(Colour::b));
  CHECK(parse_forest(format_forest(f)) == f);
}

TEST_CASE("element parsing and type inference") {
  SkeinContext ctx(3);
  GroupElement g = parse_element("[b(I,I)|id|a(I,I)]", ctx);
  CHECK(g.type == GroupType::F);
  CHECK(g.t == caret(Colour::b));
  CHECK(g.s == caret(Colour::a));

  GroupElement r = parse_element("[a(I,I)|rot(1)|a(I,I)]", ctx);
  CHECK(r.type == GroupType::T);
  CHECK(r.pi == Permutation::rotation(2, 1));

  GroupElement v = parse_element("[a(a(I,I),a(I,I))|perm(3 1 4 2)|a(a(I,I),a(I,I))]", ctx);
  CHECK(v.type == GroupType::V);
  CHECK(v.pi == Permutation(std::vector<int>{2, 0, 3, 1}));

  // explicit type widening and mismatch
  GroupElement w = parse_element("[b(I,I)|id|a(I,I)]", ctx, GroupType::V);
  CHECK(w.type == GroupType::V);
  CHECK_THROWS_AS(parse_element("[a(I,I)|rot(1)|a(I,I)]", ctx, GroupType::F),
                  DomainError);
  // leaf count mismatch
  CHECK_THROWS_AS(parse_element("[a(I,I)|id|I]", ctx), DomainError);
  CHECK_THROWS_AS(parse_element("[a(I,I)|perm(1 1)|a(I,I)]", ctx), DomainError);
  CHECK_THROWS_AS(parse_element("[a(I,I)|id|a(I,I)", ctx), ParseError);
}

TEST_CASE("point parsing") {
  CHECK(parse_point("1(0)") == RationalPoint("1", "0"));
  CHECK(parse_point("(10)") == RationalPoint("", "10"));
  CHECK(parse_point("1 10(0)") == RationalPoint("110", "0"));
  CHECK(parse_point("(0)").is_zeros());
  CHECK_THROWS_AS(parse_point("12(0)"), ParseError);
  CHECK_THROWS_AS(parse_point("1(0"), ParseError);
  CHECK_THROWS_AS(parse_point("10"), ParseError);
  CHECK_THROWS_AS(parse_point("1()"), ParseError);
}

TEST_CASE("round trips") {
  SkeinContext ctx(3);
  Rng rng(600);
  GroupType types[3] = {GroupType::F, GroupType::T, GroupType::V};
  for (int it = 0; it < 300; ++it) {
    GroupElement x = random_element(rng, ctx, types[it % 3], rng.below(6));
    GroupElement y = parse_element(format_element(x), ctx);
    CHECK(y.t == x.t);
    CHECK(y.s == x.s);
    CHECK(y.pi == x.pi);

    Tree t = random_tree(rng, rng.below(8));
    CHECK(parse_tree(format_tree(t)) == t);

    RationalPoint p = random_point(rng);
    CHECK(parse_point(format_point(p)) == p);
  }
}
