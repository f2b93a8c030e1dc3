#include "doctest.h"
#include "fsg/random_gen.hpp"
#include "fsg/tree.hpp"

using namespace fsg;

TEST_CASE("basic shapes and counts") {
  Tree ya = caret(Colour::a);
  CHECK(ya.leaves() == 2);
  CHECK(ya.carets() == 1);
  CHECK(ya.colour() == Colour::a);
  CHECK(leaf().is_leaf());
  CHECK(leaf() == leaf());
  CHECK(ya != caret(Colour::b));

  Tree t3 = tau(3, Colour::a);
  CHECK(t3.leaves() == 4);
  CHECK(leaf_addresses(t3) == std::vector<Address>{"00", "01", "10", "11"});

  Tree t4 = tau(4, Colour::a);
  CHECK(t4.leaves() == 5);
  CHECK(leaf_addresses(t4) == std::vector<Address>{"000", "001", "01", "10", "11"});

  Tree r3 = vine(VineKind::right, 3, Colour::b);
  CHECK(leaf_addresses(r3) == std::vector<Address>{"0", "10", "110", "111"});
  Tree l2 = vine(VineKind::left, 2, Colour::a);
  CHECK(leaf_addresses(l2) == std::vector<Address>{"00", "01", "1"});
}

TEST_CASE("compose and tensor laws") {
  Rng rng(7);
  for (int it = 0; it < 50; ++it) {
    std::vector<Tree> fs, gs;
    int r = 1 + rng.below(3);
    for (int i = 0; i < r; ++i) fs.push_back(random_tree(rng, rng.below(4)));
    Forest f(fs);
    for (int i = 0; i < f.leaves(); ++i) gs.push_back(random_tree(rng, rng.below(3)));
    Forest g(gs);

    Forest fg = compose(f, g);
    CHECK(fg.roots() == f.roots());
    CHECK(fg.leaves() == g.leaves());
    CHECK(compose(f, identity_forest(f.leaves())) == f);
    CHECK(compose(identity_forest(f.roots()), f) == f);

    // associativity of compose
    std::vector<Tree> hs;
    for (int i = 0; i < g.leaves(); ++i) hs.push_back(random_tree(rng, rng.below(2)));
    Forest h(hs);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
  Forest x(caret(Colour::a)), y(caret(Colour::b));
  Forest xy = tensor(x, y);
  CHECK(xy.roots() == 2);
  CHECK(xy.trees[0] == caret(Colour::a));
  CHECK(xy.trees[1] == caret(Colour::b));
}

TEST_CASE("leaf addressing and grafting") {
  Tree t = node(Colour::a, caret(Colour::b), leaf());
  CHECK(leaf_addresses(t) == std::vector<Address>{"00", "01", "1"});
  CHECK(leaf_index(t, "01") == 1);
  CHECK(leaf_address(t, 2) == "1");
  CHECK_THROWS_AS(leaf_index(t, "0"), DomainError);

  Tree g = graft_at_leaf(t, "1", caret(Colour::a));
  CHECK(g.leaves() == 4);
  CHECK(subtree_at(g, "1") == caret(Colour::a));
  CHECK(with_subtree(g, "1", leaf()) == t);
  CHECK(has_vertex(t, "0"));
  CHECK(!has_vertex(t, "000"));
}

TEST_CASE("subtree_match and replace_at") {
  SUBCASE("flip tau3 to rho3 at the root") {
    Tree t = tau(3, Colour::a);
    Tree r = vine(VineKind::right, 3, Colour::b);
    CHECK(subtree_match(t, "", t));
    CHECK(!subtree_match(t, "", r));
    Tree flipped = replace_at(t, "", t, r);
    CHECK(flipped == r);
    CHECK(replace_at(flipped, "", r, t) == t);
  }
  SUBCASE("hanging subtrees ride along") {
    Tree t3 = tau(3, Colour::a);
    Tree big = graft_at_leaf(t3, "01", caret(Colour::b));
    Tree r = vine(VineKind::right, 3, Colour::b);
    Tree flipped = replace_at(big, "", t3, r);
    // leaf 01 of tau3 is leaf index 1, lands on leaf 10 of rho3
    CHECK(subtree_at(flipped, "10") == caret(Colour::b));
    CHECK(replace_at(flipped, "", r, t3) == big);
  }
}

TEST_CASE("right vine decomposition") {
  SUBCASE("left vine of two a-carets") {
    Tree t = vine(VineKind::left, 2, Colour::a);
    std::vector<Forest> layers = right_vine_decomposition(t);
    REQUIRE(layers.size() == 2);
    CHECK(layers[0] == Forest(caret(Colour::a)));
    CHECK(layers[1] == Forest({caret(Colour::a), leaf()}));
  }
  SUBCASE("recomposition round trip") {
    Rng rng(11);
    for (int it = 0; it < 80; ++it) {
      Tree t = random_tree(rng, rng.below(9));
      Forest acc = identity_forest(1);
      for (const Forest& layer : right_vine_decomposition(t))
        acc = compose(acc, layer);
      CHECK(acc.trees[0] == t);
    }
  }
}

TEST_CASE("colour words") {
  Tree t = node(Colour::a, caret(Colour::b), leaf());
  CHECK(colour_word(Side::minus, t) == "ab");
  CHECK(colour_word(Side::plus, t) == "a");
  CHECK(colour_word(Side::minus, leaf()).empty());
  CHECK(colour_word(Side::plus, vine(VineKind::right, 3, Colour::b)) == "bbb");
  CHECK(colour_word(Side::minus, vine(VineKind::right, 3, Colour::b)) == "b");

  // multiplicativity along composition
  Rng rng(5);
  for (int it = 0; it < 50; ++it) {
    Tree u = random_tree(rng, 1 + rng.below(4));
    std::vector<Tree> gs(static_cast<std::size_t>(u.leaves()));
    for (auto& g : gs) g = random_tree(rng, rng.below(3));
    Forest g(gs);
    Tree ug = compose1(u, g);
    CHECK(colour_word(Side::minus, ug) ==
          colour_word(Side::minus, u) + colour_word(Side::minus, g.trees.front()));
    CHECK(colour_word(Side::plus, ug) ==
          colour_word(Side::plus, u) + colour_word(Side::plus, g.trees.back()));
  }
}

TEST_CASE("formatting") {
  CHECK(format_tree(leaf()) == "I");
  CHECK(format_tree(caret(Colour::b)) == "b(I,I)");
  CHECK(format_tree(tau(3, Colour::a)) == "a(a(I,I),a(I,I))");
  CHECK(format_forest(Forest({caret(Colour::a), leaf()})) == "a(I,I),I");
}
