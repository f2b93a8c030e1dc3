#pragma once
#include <algorithm>
#include <random>

#include "fsg/group.hpp"
#include "fsg/transducer.hpp"
#include "fsg/tree.hpp"

namespace fsg {

struct Rng {
  std::mt19937 eng;
  explicit Rng(std::uint32_t seed) : eng(seed) {}
  int below(int n) { return static_cast<int>(eng() % static_cast<unsigned>(n)); }
  bool flip() { return (eng() & 1u) != 0; }
};

inline Tree random_tree(Rng& rng, int carets, bool a_only = false) {
  Tree t = leaf();
  for (int i = 0; i < carets; ++i) {
    int at = rng.below(t.leaves());
    Colour c = (a_only || rng.flip()) ? Colour::a : Colour::b;
    t = graft_at_leaf(t, leaf_address(t, at), caret(c));
  }
  return t;
}

inline Tree random_right_vine(Rng& rng, int carets) {
  Tree t = caret(rng.flip() ? Colour::a : Colour::b);
  for (int i = 1; i < carets; ++i)
    t = Tree(rng.flip() ? Colour::a : Colour::b, leaf(), t);
  return t;
}

inline RationalPoint random_point(Rng& rng, int max_pre = 6, int max_period = 4) {
  std::string pre, period;
  int lp = rng.below(max_pre + 1);
  for (int i = 0; i < lp; ++i) pre.push_back(rng.flip() ? '1' : '0');
  int pp = 1 + rng.below(max_period);
  for (int i = 0; i < pp; ++i) period.push_back(rng.flip() ? '1' : '0');
  return RationalPoint(pre, period);
}

inline GroupElement random_element(Rng& rng, const SkeinContext& ctx, GroupType ty,
                                   int carets) {
  Tree t = random_tree(rng, carets);
  Tree s = random_tree(rng, carets);
  int m = t.leaves();
  Permutation pi(m);
  if (ty == GroupType::T) {
    pi = Permutation::rotation(m, rng.below(m));
  } else if (ty == GroupType::V) {
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = i;
    std::shuffle(img.begin(), img.end(), rng.eng);
    pi = Permutation(std::move(img));
  }
  return GroupElement(ctx, std::move(t), std::move(pi), std::move(s), ty);
}

}  // namespace fsg
