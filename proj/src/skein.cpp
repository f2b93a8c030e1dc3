#include "fsg/skein.hpp"

#include <optional>

namespace fsg {

namespace {

std::string ones(int k) { return std::string(static_cast<std::size_t>(k), '1'); }

// Tracks the tree being rewritten together with the accumulated growth
// forest (roots = leaves of the original tree) and the move trace.
struct Rewriter {
  const SkeinContext& ctx;
  Tree t;
  Forest growth;
  MoveTrace trace;
  int moves = 0;

  Rewriter(const SkeinContext& c, const Tree& t0)
      : ctx(c), t(t0), growth(identity_forest(t0.leaves())) {}

  void grow(const Address& at, const Tree& g) {
    int i = leaf_index(t, at);
    t = graft_at_leaf(t, at, g);
    std::vector<Tree> layer(static_cast<std::size_t>(growth.leaves()));
    layer[static_cast<std::size_t>(i)] = g;
    growth = compose(growth, Forest(std::move(layer)));
    trace.moves.push_back(GrowMove{at, g});
    ++moves;
  }

  void flip(const Address& at) {
    Tree ta = ctx.tau_a(), rb = ctx.rho_b();
    if (subtree_match(t, at, ta)) {
      t = replace_at(t, at, ta, rb);
      trace.moves.push_back(FlipMove{at, true});
    } else {
      t = replace_at(t, at, rb, ta);
      trace.moves.push_back(FlipMove{at, false});
    }
    ++moves;
  }

  // Grows minimal a-material so the all-a `pattern` matches at `at`.
  void ensure(const Address& at, const Tree& pattern) {
    if (pattern.is_leaf()) return;
    Tree sub = subtree_at(t, at);
    if (sub.is_leaf()) {
      grow(at, pattern);
      return;
    }
    if (sub.colour() != Colour::a)
      throw DomainError("pattern completion hit a b-vertex at " + at);
    ensure(at + "0", pattern.left());
    ensure(at + "1", pattern.right());
  }

  void complete_flip_tau_to_rho(const Address& at) {
    ensure(at, ctx.tau_a());
    flip(at);
  }
};

std::optional<Address> deepest_b(const Tree& t) {
  std::optional<Address> best;
  auto dfs = [&](auto&& self, const Tree& cur, Address& addr) -> void {
    if (cur.is_leaf()) return;
    if (cur.colour() == Colour::b) {
      if (!best || addr.size() > best->size() ||
          (addr.size() == best->size() && addr < *best))
        best = addr;
    }
    addr.push_back('0');
    self(self, cur.left(), addr);
    addr.back() = '1';
    self(self, cur.right(), addr);
    addr.pop_back();
  };
  Address a;
  dfs(dfs, t, a);
  return best;
}

}  // namespace

Tree replay(const SkeinContext& ctx, const Tree& start, const MoveTrace& trace) {
  Tree t = start;
  Tree ta = ctx.tau_a(), rb = ctx.rho_b();
  for (const Move& m : trace.moves) {
    if (const auto* g = std::get_if<GrowMove>(&m)) {
      t = graft_at_leaf(t, g->at, g->grown);
    } else {
      const auto& f = std::get<FlipMove>(m);
      t = f.tau_to_rho ? replace_at(t, f.at, ta, rb) : replace_at(t, f.at, rb, ta);
    }
  }
  return t;
}

std::string format_trace(const MoveTrace& trace) {
  std::string out;
  for (const Move& m : trace.moves) {
    if (const auto* g = std::get_if<GrowMove>(&m)) {
      out += "grow " + (g->at.empty() ? "-" : g->at) + " " + format_tree(g->grown) + "\n";
    } else {
      const auto& f = std::get<FlipMove>(m);
      out += "flip " + (f.at.empty() ? "-" : f.at) +
             (f.tau_to_rho ? " tau2rho" : " rho2tau") + "\n";
    }
  }
  return out;
}

Tree skein_flip(const SkeinContext& ctx, const Tree& t, const Address& at) {
  Tree ta = ctx.tau_a(), rb = ctx.rho_b();
  if (subtree_match(t, at, ta)) return replace_at(t, at, ta, rb);
  if (subtree_match(t, at, rb)) return replace_at(t, at, rb, ta);
  throw DomainError("skein_flip: no pattern match at " + (at.empty() ? std::string("root") : at));
}

GrowthResult grow_to_a_tree(const SkeinContext& ctx, const Tree& t0) {
  Rewriter rw(ctx, t0);
  int budget = 10 * std::max(1, t0.carets()) * ctx.n;
  while (auto v = deepest_b(rw.t)) {
    if (subtree_at(rw.t, *v + "1").is_leaf()) {
      rw.grow(*v + "1", vine(VineKind::right, ctx.n - 1, Colour::b));
      rw.flip(*v);  // rho -> tau
    } else {
      // v is the deepest b, so the subtree at v.1 is a-coloured
      rw.ensure(*v + "1", ctx.tau_a());
      rw.flip(*v + "1");  // tau -> rho
      rw.flip(*v);        // rho -> tau
    }
    if (rw.moves > budget)
      throw DomainError("grow_to_a_tree: move budget exceeded");
  }
  return {rw.t, rw.growth, rw.trace};
}

namespace {

// Flip-only normalization: repeatedly turn the first (preorder) full
// rho_n(b) pattern into tau_n(a). No growth; b-count strictly drops.
std::pair<Tree, MoveTrace> flip_normalize(const SkeinContext& ctx, const Tree& t0) {
  Tree t = t0;
  MoveTrace trace;
  Tree rb = ctx.rho_b();
  while (true) {
    std::optional<Address> hit;
    auto dfs = [&](auto&& self, const Tree& cur, Address& addr) -> void {
      if (hit || cur.is_leaf()) return;
      if (cur.colour() == Colour::b && subtree_match(cur, "", rb)) {
        hit = addr;
        return;
      }
      addr.push_back('0');
      self(self, cur.left(), addr);
      addr.back() = '1';
      self(self, cur.right(), addr);
      addr.pop_back();
    };
    Address a;
    dfs(dfs, t, a);
    if (!hit) break;
    t = replace_at(t, *hit, rb, ctx.tau_a());
    trace.moves.push_back(FlipMove{*hit, false});
  }
  return {t, trace};
}

// Least upper bound of two a-tree shapes.
Tree shape_join(const Tree& x, const Tree& y) {
  if (x.is_leaf()) return y;
  if (y.is_leaf()) return x;
  return Tree(Colour::a, shape_join(x.left(), y.left()),
              shape_join(x.right(), y.right()));
}

}  // namespace

CommonMultiple right_common_multiple(const SkeinContext& ctx, const Tree& u, const Tree& v) {
  auto [un, utrace] = flip_normalize(ctx, u);
  auto [vn, vtrace] = flip_normalize(ctx, v);
  if (un == vn) {
    return CommonMultiple{identity_forest(u.leaves()), identity_forest(v.leaves()),
                          un, utrace, vtrace};
  }
  GrowthResult gu = grow_to_a_tree(ctx, un);
  GrowthResult gv = grow_to_a_tree(ctx, vn);
  utrace.append(gu.trace);
  vtrace.append(gv.trace);
  Tree w = shape_join(gu.tree, gv.tree);

  auto pad = [&](const GrowthResult& g, MoveTrace* trace) {
    std::vector<Tree> fill;
    std::vector<Address> addrs = leaf_addresses(g.tree);
    for (const Address& at : addrs) {
      Tree sub = subtree_at(w, at);
      fill.push_back(sub);
      if (!sub.is_leaf()) trace->moves.push_back(GrowMove{at, sub});
    }
    return compose(g.growth, Forest(std::move(fill)));
  };
  Forest p = pad(gu, &utrace);
  Forest q = pad(gv, &vtrace);
  return CommonMultiple{std::move(p), std::move(q), w, std::move(utrace), std::move(vtrace)};
}

bool good_word_check(const SkeinContext& ctx, const std::string& w) {
  std::size_t i = 0;
  while (i < w.size() && w[i] == 'a') ++i;
  int brun = 0;
  for (std::size_t k = i; k < w.size(); ++k) {
    if (w[k] == 'a') {
      if (k + 1 < w.size() && w[k + 1] == 'a') return false;
      brun = 0;
    } else {
      if (++brun >= ctx.n) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::string> vine_words(const Tree& t) {
  std::vector<std::string> out;
  for (const Forest& layer : right_vine_decomposition(t))
    for (const Tree& tr : layer.trees)
      if (!tr.is_leaf()) out.push_back(colour_word(Side::plus, tr));
  return out;
}

}  // namespace

bool is_good_tree(const SkeinContext& ctx, const Tree& t) {
  for (const std::string& w : vine_words(t))
    if (!good_word_check(ctx, w)) return false;
  return true;
}

bool is_good_a_rooted(const SkeinContext& ctx, const Tree& t) {
  for (const std::string& w : vine_words(t))
    if (!good_word_check(ctx, w) || w.empty() || w[0] != 'a') return false;
  return true;
}

namespace {

struct SpineInfo {
  std::vector<Colour> colours;  // colours at root_addr . 1^j
};

SpineInfo spine_at(const Tree& whole, const Address& root_addr) {
  SpineInfo s;
  Tree cur = subtree_at(whole, root_addr);
  while (!cur.is_leaf()) {
    s.colours.push_back(cur.colour());
    cur = cur.right();
  }
  return s;
}

int max_b_run(const std::vector<Colour>& cs) {
  int best = 0, run = 0;
  for (Colour c : cs) {
    run = (c == Colour::b) ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

void make_good_at(Rewriter& rw, const Address& root_addr) {
  {
    Tree sub = subtree_at(rw.t, root_addr);
    if (sub.is_leaf() || all_coloured(sub, Colour::a)) return;
  }
  // hangings first (they are untouched spine-wise by the phases below)
  int spine_len = static_cast<int>(spine_at(rw.t, root_addr).colours.size());
  for (int j = 0; j < spine_len; ++j)
    make_good_at(rw, root_addr + ones(j) + "0");

  int n = rw.ctx.n;
  // ensure a b-block can reach the root when the root is b-coloured
  {
    SpineInfo sp = spine_at(rw.t, root_addr);
    if (sp.colours.front() == Colour::b && max_b_run(sp.colours) < n) {
      Address last = root_addr + ones(static_cast<int>(sp.colours.size()));
      rw.grow(last, rw.ctx.tau_a());
      rw.flip(last);  // tau -> rho, appends b^n to the spine word
    }
  }
  // move b-blocks up: eliminate "aa" and "a b^n" on the spine, deepest first
  for (long guard = 0;; ++guard) {
    if (guard > 100000)
      throw std::logic_error("make_good_at: spine rewriting did not terminate");
    SpineInfo sp = spine_at(rw.t, root_addr);
    int sz = static_cast<int>(sp.colours.size());
    int pick = -1;
    bool merge = false;
    for (int j = 0; j + 1 < sz; ++j) {
      if (sp.colours[static_cast<std::size_t>(j)] != Colour::a) continue;
      if (sp.colours[static_cast<std::size_t>(j + 1)] == Colour::a) {
        pick = j;
        merge = true;
        continue;
      }
      int run = 0;
      for (int k = j + 1; k < sz && sp.colours[static_cast<std::size_t>(k)] == Colour::b; ++k)
        ++run;
      if (run >= n) {
        pick = j;
        merge = false;
      }
    }
    if (pick < 0) break;
    Address at = root_addr + ones(pick);
    // earlier flips may have left a b-rooted (still good) piece hanging at
    // at.0, inside the tau footprint; fix it before completing the pattern
    make_good_at(rw, at + "0");
    if (merge) {
      rw.complete_flip_tau_to_rho(at);
    } else {
      rw.flip(at + "1");  // rho -> tau on the top n b's of the run
      rw.complete_flip_tau_to_rho(at);
    }
  }
  // convert the leading b-run into tau-blocks
  {
    SpineInfo sp = spine_at(rw.t, root_addr);
    int lead = 0;
    while (lead < static_cast<int>(sp.colours.size()) &&
           sp.colours[static_cast<std::size_t>(lead)] == Colour::b)
      ++lead;
    for (int i = 0; i < lead / n; ++i)
      rw.flip(root_addr + ones(2 * i));  // rho -> tau
  }
  // flips relocate subtrees; pieces landing in hanging positions stay good
  // but can be b-rooted, so fix the final hangings in place
  {
    int len = static_cast<int>(spine_at(rw.t, root_addr).colours.size());
    for (int j = 0; j < len; ++j)
      make_good_at(rw, root_addr + ones(j) + "0");
  }
}

}  // namespace

GrowthResult make_good_tree(const SkeinContext& ctx, const Tree& t) {
  Rewriter rw(ctx, t);
  make_good_at(rw, "");
  if (!is_good_a_rooted(ctx, rw.t))
    throw std::logic_error("make_good_tree: postcondition failed on " +
                           format_tree(rw.t));
  for (const Tree& g : rw.growth.trees)
    if (!all_coloured(g, Colour::a))
      throw std::logic_error("make_good_tree: growth is not an a-forest");
  return {rw.t, rw.growth, rw.trace};
}

GrowthResult make_good_vine(const SkeinContext& ctx, const Tree& r) {
  const Tree* cur = &r;
  while (!cur->is_leaf()) {
    if (!cur->left().is_leaf())
      throw DomainError("make_good_vine: input is not a right-vine");
    cur = &cur->right();
  }
  return make_good_tree(ctx, r);
}

}  // namespace fsg
