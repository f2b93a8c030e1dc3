#include "doctest.h"
#include "fsg/random_gen.hpp"
#include "fsg/skein.hpp"
#include "fsg/transducer.hpp"

using namespace fsg;

TEST_CASE("flip is a local involution") {
  SkeinContext ctx(3);
  Tree t = ctx.tau_a();
  Tree r = skein_flip(ctx, t, "");
  CHECK(r == ctx.rho_b());
  CHECK(skein_flip(ctx, r, "") == t);

  Tree host = graft_at_leaf(caret(Colour::b), "0", ctx.tau_a());
  Tree flipped = skein_flip(ctx, host, "0");
  CHECK(flipped == graft_at_leaf(caret(Colour::b), "0", ctx.rho_b()));
  CHECK(subtree_at(flipped, "1").is_leaf());
  CHECK_THROWS_AS(skein_flip(ctx, host, "1"), DomainError);
}

TEST_CASE("grow_to_a_tree on the b-caret") {
  SkeinContext ctx(3);
  GrowthResult g = grow_to_a_tree(ctx, caret(Colour::b));
  CHECK(all_coloured(g.tree, Colour::a));
  CHECK(g.tree == ctx.tau_a());
  CHECK(g.growth.roots() == 2);
  CHECK(replay(ctx, caret(Colour::b), g.trace) == g.tree);
  CHECK(compose1(caret(Colour::b), g.growth).leaves() == g.tree.leaves());
}

TEST_CASE("grow_to_a_tree fixes a-trees") {
  SkeinContext ctx(4);
  Tree t = tau(4, Colour::a);
  GrowthResult g = grow_to_a_tree(ctx, t);
  CHECK(g.tree == t);
  CHECK(is_identity_forest(g.growth));
  CHECK(g.trace.moves.empty());
}

TEST_CASE("grow_to_a_tree random replay") {
  for (int n = 3; n <= 4; ++n) {
    SkeinContext ctx(n);
    Rng rng(100 + static_cast<std::uint32_t>(n));
    for (int it = 0; it < 120; ++it) {
      Tree t = random_tree(rng, rng.below(8));
      GrowthResult g = grow_to_a_tree(ctx, t);
      CHECK(all_coloured(g.tree, Colour::a));
      CHECK(g.growth.roots() == t.leaves());
      CHECK(compose1(t, g.growth).leaves() == g.tree.leaves());
      CHECK(replay(ctx, t, g.trace) == g.tree);
    }
  }
}

TEST_CASE("right common multiples") {
  SkeinContext ctx(3);
  SUBCASE("equal trees need no growth") {
    Rng rng(1);
    Tree t = random_tree(rng, 5);
    CommonMultiple cm = right_common_multiple(ctx, t, t);
    CHECK(is_identity_forest(cm.p));
    CHECK(is_identity_forest(cm.q));
  }
  SUBCASE("the two skein trees are already equal") {
    CommonMultiple cm = right_common_multiple(ctx, ctx.tau_a(), ctx.rho_b());
    CHECK(is_identity_forest(cm.p));
    CHECK(is_identity_forest(cm.q));
  }
  SUBCASE("random pairs agree as maps") {
    Rng rng(17);
    for (int it = 0; it < 40; ++it) {
      Tree u = random_tree(rng, rng.below(5));
      Tree v = random_tree(rng, rng.below(5));
      CommonMultiple cm = right_common_multiple(ctx, u, v);
      CHECK(cm.p.roots() == u.leaves());
      CHECK(cm.q.roots() == v.leaves());
      CHECK(replay(ctx, u, cm.trace_u) == cm.common);
      CHECK(replay(ctx, v, cm.trace_v) == cm.common);
      Tree up = compose1(u, cm.p);
      Tree vq = compose1(v, cm.q);
      REQUIRE(up.leaves() == vq.leaves());
      // u.p and v.q are skein-equal, hence equal as prefix replacements
      for (int i = 0; i < up.leaves(); ++i)
        CHECK(transducer_equal(local_action(ctx.n, up, i), local_action(ctx.n, vq, i))
                  .equal);
    }
  }
}

TEST_CASE("good words") {
  SkeinContext ctx(3);
  CHECK(good_word_check(ctx, ""));
  CHECK(good_word_check(ctx, "a"));
  CHECK(good_word_check(ctx, "ab"));
  CHECK(good_word_check(ctx, "abba"));
  CHECK(good_word_check(ctx, "aba"));
  CHECK(!good_word_check(ctx, "abbb"));
  CHECK(!good_word_check(ctx, "baa"));
  CHECK(good_word_check(ctx, "ba"));
  CHECK(good_word_check(SkeinContext(4), "abbb"));
}

TEST_CASE("make_good_vine") {
  SkeinContext ctx(3);
  SUBCASE("a-vines are already good") {
    Tree r = vine(VineKind::right, 4, Colour::a);
    GrowthResult g = make_good_vine(ctx, r);
    CHECK(g.tree == r);
    CHECK(is_identity_forest(g.growth));
  }
  SUBCASE("the b-caret") {
    GrowthResult g = make_good_vine(ctx, caret(Colour::b));
    CHECK(is_good_a_rooted(ctx, g.tree));
    for (const Tree& t : g.growth.trees) CHECK(all_coloured(t, Colour::a));
    CHECK(replay(ctx, caret(Colour::b), g.trace) == g.tree);
  }
  SUBCASE("random vines") {
    for (int n = 3; n <= 4; ++n) {
      SkeinContext cx(n);
      Rng rng(200 + static_cast<std::uint32_t>(n));
      for (int it = 0; it < 100; ++it) {
        Tree r = random_right_vine(rng, 1 + rng.below(7));
        GrowthResult g = make_good_vine(cx, r);
        CHECK(is_good_tree(cx, g.tree));
        CHECK(is_good_a_rooted(cx, g.tree));
        for (const Tree& t : g.growth.trees) CHECK(all_coloured(t, Colour::a));
        CHECK(replay(cx, r, g.trace) == g.tree);
      }
    }
  }
  SUBCASE("non-vines are rejected") {
    CHECK_THROWS_AS(make_good_vine(ctx, vine(VineKind::left, 2, Colour::a)),
                    DomainError);
  }
}

TEST_CASE("make_good_tree random") {
  for (int n = 3; n <= 4; ++n) {
    SkeinContext ctx(n);
    Rng rng(300 + static_cast<std::uint32_t>(n));
    for (int it = 0; it < 60; ++it) {
      Tree t = random_tree(rng, rng.below(8));
      GrowthResult g = make_good_tree(ctx, t);
      CHECK(is_good_tree(ctx, g.tree));
      CHECK(is_good_a_rooted(ctx, g.tree));
      for (const Tree& gt : g.growth.trees) CHECK(all_coloured(gt, Colour::a));
      CHECK(replay(ctx, t, g.trace) == g.tree);
    }
  }
}

TEST_CASE("trace formatting") {
  MoveTrace tr;
  tr.moves.push_back(GrowMove{"01", caret(Colour::a)});
  tr.moves.push_back(FlipMove{"", false});
  std::string s = format_trace(tr);
  CHECK(s == "grow 01 a(I,I)\nflip - rho2tau\n");
}
