#include "fsg/selftest.hpp"

#include <chrono>
#include <set>

#include "fsg/circle.hpp"
#include "fsg/gamma.hpp"
#include "fsg/group.hpp"
#include "fsg/parse.hpp"
#include "fsg/random_gen.hpp"
#include "fsg/skein.hpp"
#include "fsg/transducer.hpp"

namespace fsg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Checker {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& msg) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += msg;
    }
  }
};

GroupElement yb_over_ya(const SkeinContext& ctx) {
  return GroupElement(ctx, caret(Colour::b), caret(Colour::a));
}

// ---- criterion 1: graph of [Y_b/Y_a] at n = 3 ----

CriterionResult criterion_graph() {
  Checker c;
  auto t0 = Clock::now();
  SkeinContext ctx(3);
  PiecewiseGraph ph = render(yb_over_ya(ctx), 8);

  struct P {
    Rational x0, x1, y0, y1;
    int sl;
  };
  std::vector<P> want = {
      {Rational(0), Rational(1, 2), Rational(0), Rational(1, 4), -1},
      {Rational(1, 2), Rational(5, 8), Rational(1, 4), Rational(1, 2), 1},
      {Rational(5, 8), Rational(3, 4), Rational(1, 2), Rational(3, 4), 1},
      {Rational(3, 4), Rational(7, 8), Rational(3, 4), Rational(13, 16), -1}};
  c.require(ph.pieces.size() >= 4, "fewer than 4 pieces");
  for (std::size_t i = 0; i < want.size() && i < ph.pieces.size(); ++i) {
    const auto& p = ph.pieces[i];
    const auto& w = want[i];
    c.require(p.x0 == w.x0 && p.x1 == w.x1 && p.y0 == w.y0 && p.y1 == w.y1 &&
                  p.slope_log2 == w.sl,
              "piece " + std::to_string(i) + " mismatch: " + format_rational(p.x0) +
                  ".." + format_rational(p.x1) + " -> " + format_rational(p.y0) +
                  ".." + format_rational(p.y1));
  }
  if (ph.pieces.size() > 4)
    c.require(ph.pieces[4].x0 >= Rational(7, 8), "extra piece below 7/8");
  for (const auto& s : ph.singular)
    c.require(s.x0 >= Rational(7, 8) && s.x1 <= 1, "singular region outside [7/8,1]");
  c.require(!ph.singular.empty(), "no singular region reported");

  // the scaled repetition of the whole graph inside [7/8, 15/16]
  Rational lo(7, 8), hi(15, 16);
  std::vector<const GraphPiece*> rep;
  for (const auto& p : ph.pieces)
    if (p.x0 >= lo && p.x1 <= hi) rep.push_back(&p);
  c.require(!rep.empty(), "no pieces inside [7/8,15/16]");
  if (!rep.empty()) {
    c.require(rep.front()->x0 == lo && rep.back()->x1 == hi,
              "repetition does not span [7/8,15/16]");
    Rational ymin = rep.front()->y0, ymax = rep.front()->y1;
    bool contiguous = true;
    for (std::size_t i = 0; i < rep.size(); ++i) {
      if (i && rep[i]->x0 != rep[i - 1]->x1) contiguous = false;
      ymin = std::min(ymin, std::min(rep[i]->y0, rep[i]->y1));
      ymax = std::max(ymax, std::max(rep[i]->y0, rep[i]->y1));
    }
    c.require(contiguous, "repetition pieces not contiguous");
    c.require(ymin == Rational(13, 16) && ymax == hi,
              "repetition image is not [13/16,15/16]");
  }
  double dt = seconds_since(t0);
  c.require(dt < 1.0, "runtime " + std::to_string(dt) + "s >= 1s");
  if (c.detail.empty())
    c.detail = std::to_string(ph.pieces.size()) + " pieces, " +
               std::to_string(ph.singular.size()) + " singular, " +
               std::to_string(dt) + "s";
  return {"graph [Y_b/Y_a] n=3", c.pass, c.detail};
}

// ---- criterion 2: transducer identities ----

CriterionResult criterion_transducers(Rng& rng) {
  Checker c;
  auto t0 = Clock::now();
  for (int n = 3; n <= 6; ++n) {
    auto cross = [&](const Transducer& s, const Transducer& t, const std::string& what) {
      EquivResult eq = transducer_equal(s, t);
      c.require(eq.equal, what + " not equivalent (n=" + std::to_string(n) + ")");
      for (int i = 0; i < 200; ++i) {
        RationalPoint x = random_point(rng);
        if (eval(s, x) != eval(t, x)) {
          c.require(false, what + " differs at " + format_point(x));
          break;
        }
      }
    };
    Transducer a1 = generator_transducer(n, GenSym::A1);
    Transducer a1sq = compose_transducers(a1, a1);
    Transducer b1 = generator_transducer(n, GenSym::B1);
    Transducer b1n = Transducer::identity_copy();
    for (int i = 0; i < n; ++i) b1n = compose_transducers(b1n, b1);
    cross(a1sq, b1n, "A1^2 vs B1^n");

    Transducer a0 = generator_transducer(n, GenSym::A0);
    Transducer a0p = Transducer::identity_copy();
    for (int i = 0; i < n - 1; ++i) a0p = compose_transducers(a0p, a0);
    cross(generator_transducer(n, GenSym::B0), a0p, "B0 vs A0^{n-1}");

    Tree ta = tau(n, Colour::a), rb = vine(VineKind::right, n, Colour::b);
    for (int i = 0; i <= n; ++i)
      cross(local_action(n, ta, i), local_action(n, rb, i),
            "beta(tau," + std::to_string(i + 1) + ") vs beta(rho,..)");
  }
  double dt = seconds_since(t0);
  c.require(dt < 5.0, "runtime " + std::to_string(dt) + "s >= 5s");
  if (c.detail.empty()) c.detail = "n=3..6, " + std::to_string(dt) + "s";
  return {"transducer identities", c.pass, c.detail};
}

// ---- criterion 3: abelianisation ----

CriterionResult criterion_abelianisation(Rng& rng) {
  Checker c;
  for (int n : {3, 4, 5}) {
    SkeinContext ctx(n);
    GroupElement g = yb_over_ya(ctx);
    for (int k = 0; k <= 2 * n; ++k)
      c.require(abelianise(power(g, k)) == k % n,
                "chi([Y_b/Y_a]^" + std::to_string(k) + ") != " + std::to_string(k % n) +
                    " (n=" + std::to_string(n) + ")");
    for (int rep = 0; rep < 17; ++rep) {
      GroupElement x = random_element(rng, ctx, GroupType::T, 2 + rng.below(4));
      GroupElement y = random_element(rng, ctx, GroupType::T, 2 + rng.below(4));
      GroupElement comm = multiply(multiply(x, y), multiply(inverse(x), inverse(y)));
      c.require(abelianise(comm) == 0, "commutator with chi != 0");
    }
  }
  // invariance under representative mutation
  for (int rep = 0; rep < 100; ++rep) {
    int n = 3 + rep % 3;
    SkeinContext ctx(n);
    GroupElement x = random_element(rng, ctx, GroupType::F, 2 + rng.below(5));
    int before = abelianise(x);
    for (int step = 0; step < 3; ++step) {
      if (rng.flip()) {
        std::vector<Tree> p(static_cast<std::size_t>(x.s.leaves()));
        for (auto& tr : p) tr = random_tree(rng, rng.below(3));
        x = grown_representative(x, Forest(std::move(p)));
      } else {
        // flip the first matching site on one side, if any
        Tree* side = rng.flip() ? &x.t : &x.s;
        bool done = false;
        auto try_flip = [&](const Address& at) {
          if (done) return;
          if (subtree_match(*side, at, ctx.tau_a()) ||
              subtree_match(*side, at, ctx.rho_b())) {
            *side = skein_flip(ctx, *side, at);
            done = true;
          }
        };
        // scan all vertex addresses breadth-first
        std::vector<Address> frontier{""};
        while (!frontier.empty() && !done) {
          Address at = frontier.front();
          frontier.erase(frontier.begin());
          if (!has_vertex(*side, at) || subtree_at(*side, at).is_leaf()) continue;
          try_flip(at);
          frontier.push_back(at + "0");
          frontier.push_back(at + "1");
        }
      }
    }
    c.require(abelianise(x) == before, "chi changed under representative mutation");
  }
  if (c.detail.empty()) c.detail = "powers, 51 commutators, 100 mutations";
  return {"abelianisation", c.pass, c.detail};
}

// ---- criterion 4: germ quotients ----

bool fixes_endpoint_neighbourhood(const GroupElement& x, Side side) {
  GroupElement r = reduce_to_a_denominator(x);
  std::vector<Address> addrs = leaf_addresses(r.s);
  int i = side == Side::minus ? 0 : r.s.leaves() - 1;
  const Address& at = addrs[static_cast<std::size_t>(i)];
  Transducer w = local_action(r.ctx.n, r.t, r.pi(i));
  char b = side == Side::minus ? '0' : '1';
  for (int d = 0; d <= 2 * r.ctx.n + w.states() + 8; ++d) {
    std::string inner(static_cast<std::size_t>(d), b);
    Transducer restricted = compose_transducers(Transducer::prefix_map(inner), w);
    if (transducer_equal(restricted, Transducer::prefix_map(at + inner)).equal)
      return true;
  }
  return false;
}

CriterionResult criterion_germs(Rng& rng) {
  Checker c;
  for (int n : {3, 4, 5}) {
    SkeinContext ctx(n);
    for (Colour s : {Colour::a, Colour::b}) {
      GroupElement e(ctx, vine(VineKind::left, 2, s), vine(VineKind::right, 2, s));
      long long want = gamma_minus_of_word(n, std::string(1, colour_char(s)));
      c.require(c_bar_minus(e) == want, "c-([l2(s)/r2(s)]) != s");
    }
  }
  SkeinContext ctx(3);
  for (int rep = 0; rep < 100; ++rep) {
    GroupElement x = random_element(rng, ctx, GroupType::F, 1 + rng.below(5));
    if (rep % 2) x = iota_embed(x);
    bool tplus = c_bar_plus(x).is_trivial();
    bool tminus = c_bar_minus(x) == 0;
    c.require(tplus == fixes_endpoint_neighbourhood(x, Side::plus),
              "c+ triviality vs fixed neighbourhood of 1-bar disagree");
    c.require(tminus == fixes_endpoint_neighbourhood(x, Side::minus),
              "c- triviality vs fixed neighbourhood of 0-bar disagree");
  }
  if (c.detail.empty()) c.detail = "section values, 100 kernel checks";
  return {"germ quotients", c.pass, c.detail};
}

// ---- criterion 5: free subgroup ----

CriterionResult criterion_free_subgroup() {
  Checker c;
  auto t0 = Clock::now();
  long words = 0;
  for (int n : {3, 4}) {
    SkeinContext ctx(n);
    std::vector<GroupElement> letters;  // generator i at 2i, inverse at 2i+1
    for (int i = 1; i < n; ++i) {
      GroupElement g = free_generator(ctx, i);
      std::vector<int> want{0, i, 0, n - i};
      c.require(z2_zn_word(c_bar_plus(g)) == want,
                "c+(gen " + std::to_string(i) + ") is not a b^i a b^{n-i} (n=" +
                    std::to_string(n) + ")");
      letters.push_back(g);
      letters.push_back(inverse(g));
    }
    // reduced words of length <= 4, no letter followed by its inverse
    auto dfs = [&](auto&& self, const GroupElement& prod, int last, int len) -> void {
      if (!c.pass) return;
      if (len > 0) {
        ++words;
        if (is_identity(prod))
          c.require(false, "reduced word of length " + std::to_string(len) +
                               " is the identity (n=" + std::to_string(n) + ")");
      }
      if (len == 4 || !c.pass) return;
      for (int j = 0; j < static_cast<int>(letters.size()); ++j) {
        if (last >= 0 && j == (last ^ 1)) continue;
        self(self, len == 0 ? letters[static_cast<std::size_t>(j)]
                            : multiply(prod, letters[static_cast<std::size_t>(j)]),
             j, len + 1);
      }
    };
    dfs(dfs, GroupElement::identity(ctx), -1, 0);
  }
  double dt = seconds_since(t0);
  c.require(dt < 300.0, "runtime " + std::to_string(dt) + "s >= 300s");
  if (c.detail.empty())
    c.detail = std::to_string(words) + " words, " + std::to_string(dt) + "s";
  return {"free subgroup words", c.pass, c.detail};
}

// ---- criterion 6: word-problem soundness ----

CriterionResult criterion_word_problem(Rng& rng) {
  Checker c;
  SkeinContext ctx(3);
  auto rand_elem = [&](int maxc) {
    GroupType ty = static_cast<GroupType>(rng.below(3));
    return random_element(rng, ctx, ty, 1 + rng.below(maxc));
  };
  for (int rep = 0; rep < 200 && c.pass; ++rep) {
    GroupElement g = rand_elem(5);
    GroupElement h = inverse(g);
    bool gh = is_identity(multiply(g, h));
    bool hg = is_identity(multiply(h, g));
    c.require(gh, "g g^-1 not the identity");
    c.require(gh == hg, "g g^-1 and g^-1 g disagree");
  }
  for (int rep = 0; rep < 200 && c.pass; ++rep) {
    GroupElement x = rand_elem(4);
    GroupElement y = rng.below(8) == 0 ? x : rand_elem(4);
    bool eq = equals(x, y);
    PreparedAction px = prepare_action(x), py = prepare_action(y);
    bool agree = true;
    for (int k = 0; k < 200 && agree; ++k) {
      RationalPoint p = random_point(rng);
      agree = act(px, p) == act(py, p);
    }
    c.require(eq == agree, "equals() disagrees with sampled evaluation");
  }
  int with_b = 0;
  for (int tries = 0; with_b < 100 && tries < 2000 && c.pass; ++tries) {
    GroupElement x = random_element(rng, ctx, GroupType::F, 3 + rng.below(5));
    GroupElement sf = seminormal_form(x);
    if (count_colour(sf.t, Colour::b) == 0) continue;
    ++with_b;
    auto w = moved_point(sf);
    c.require(w.has_value(), "b-carrying seminormal diagram reported as identity");
    if (w) {
      PreparedAction pa = prepare_action(sf);
      c.require(act(pa, *w) != *w, "witness point is not moved");
    }
  }
  c.require(with_b == 100, "only " + std::to_string(with_b) + " b-carrying seminormal forms");
  if (c.detail.empty()) c.detail = "200 inverses, 200 sampled pairs, 100 witnesses";
  return {"word-problem soundness", c.pass, c.detail};
}

// ---- criterion 7: rewriting certificates ----

CriterionResult criterion_rewriting(Rng& rng) {
  Checker c;
  for (int n : {3, 4, 5}) {
    SkeinContext ctx(n);
    for (int rep = 0; rep < 167 && c.pass; ++rep) {
      Tree t = random_tree(rng, 1 + rng.below(10));
      GrowthResult g = grow_to_a_tree(ctx, t);
      c.require(all_coloured(g.tree, Colour::a), "grow_to_a_tree left a b-vertex");
      c.require(replay(ctx, t, g.trace) == g.tree, "grow trace does not replay");
      c.require(compose1(t, g.growth).leaves() == g.tree.leaves(),
                "growth forest arity mismatch");

      Tree s = random_tree(rng, t.carets(), /*a_only=*/rng.flip());
      GroupElement x(ctx, t, s);
      GroupElement sf = seminormal_form(x);
      c.require(all_coloured(sf.s, Colour::a), "seminormal denominator not an a-tree");
      c.require(is_good_tree(ctx, sf.t), "seminormal numerator not good");
      if (rep % 5 == 0)
        c.require(equals(sf, x), "seminormal form is a different element");
    }
  }
  if (c.detail.empty()) c.detail = "501 trees across n=3,4,5";
  return {"rewriting certificates", c.pass, c.detail};
}

// ---- criterion 8: distinguishing invariant ----

CriterionResult criterion_invariant() {
  Checker c;
  std::set<std::pair<int, int>> seen;
  for (int n : {3, 4, 5}) {
    SkeinContext ctx(n);
    GammaPlus ga = germ_at_zero(sigma_generator(ctx, Colour::a)).plus;
    GammaPlus gb = germ_at_zero(sigma_generator(ctx, Colour::b)).plus;
    auto order_in_ab = [&](const GammaPlus& g) {
      GammaPlus acc(n);
      for (int k = 1; k <= 2 * n + 2; ++k) {
        acc = gamma_plus_mul(acc, g);
        if (z2_zn_abelianise(n, z2_zn_word(acc)) == std::pair<int, int>{0, 0}) return k;
      }
      return -1;
    };
    int oa = order_in_ab(ga), ob = order_in_ab(gb);
    c.require(oa == 2, "image of a does not have order 2 (n=" + std::to_string(n) + ")");
    c.require(ob == n, "image of b does not have order n (n=" + std::to_string(n) + ")");
    c.require(seen.insert({oa, ob}).second, "invariant pair repeats across n");
  }
  if (c.detail.empty()) c.detail = "Z2 x Zn orders (2,3) (2,4) (2,5) pairwise distinct";
  return {"distinguishing invariant", c.pass, c.detail};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint32_t seed) {
  Rng rng(seed);
  std::vector<CriterionResult> out;
  out.push_back(criterion_graph());
  out.push_back(criterion_transducers(rng));
  out.push_back(criterion_abelianisation(rng));
  out.push_back(criterion_germs(rng));
  out.push_back(criterion_free_subgroup());
  out.push_back(criterion_word_problem(rng));
  out.push_back(criterion_rewriting(rng));
  out.push_back(criterion_invariant());
  return out;
}

}  // namespace fsg
