#pragma once
#include <string>
#include <variant>
#include <vector>

#include "fsg/tree.hpp"

namespace fsg {

struct SkeinContext {
  int n;
  explicit SkeinContext(int n_) : n(n_) {
    if (n < 3) throw DomainError("n must be >= 3");
  }
  Tree tau_a() const { return tau(n, Colour::a); }
  Tree rho_b() const { return vine(VineKind::right, n, Colour::b); }
  bool operator==(const SkeinContext& o) const { return n == o.n; }
};

struct GrowMove {
  Address at;   // leaf address at replay time
  Tree grown;   // tree grafted there
};
struct FlipMove {
  Address at;
  bool tau_to_rho;  // else rho -> tau
};
using Move = std::variant<GrowMove, FlipMove>;

struct MoveTrace {
  std::vector<Move> moves;
  void append(const MoveTrace& o) {
    moves.insert(moves.end(), o.moves.begin(), o.moves.end());
  }
};

// Re-verifies every grow site is a leaf and every flip site matches its
// pattern; returns the target tree.
Tree replay(const SkeinContext& ctx, const Tree& start, const MoveTrace& trace);

std::string format_trace(const MoveTrace& trace);

// Flip tau_n(a) <-> rho_n(b) at `at`, whichever matches.
Tree skein_flip(const SkeinContext& ctx, const Tree& t, const Address& at);

struct GrowthResult {
  Tree tree;
  Forest growth;  // roots = leaves of the input; input composed with growth
                  // equals `tree` in F_n, certified by `trace`
  MoveTrace trace;
};

// Eliminates every b-vertex by growing and flipping; growth may use b-carets.
GrowthResult grow_to_a_tree(const SkeinContext& ctx, const Tree& t);

struct CommonMultiple {
  Forest p, q;          // u.p = v.q in F_n
  Tree common;          // the common grown tree (free equality after replay)
  MoveTrace trace_u, trace_v;
};
CommonMultiple right_common_multiple(const SkeinContext& ctx, const Tree& u, const Tree& v);

// True iff w = a^i w' with w' empty or b-initial, containing no "aa" and no
// b^n factor.
bool good_word_check(const SkeinContext& ctx, const std::string& w);

// True iff every right-vine of t's decomposition carries a good colour word.
bool is_good_tree(const SkeinContext& ctx, const Tree& t);
// True iff additionally every vine root is a-coloured.
bool is_good_a_rooted(const SkeinContext& ctx, const Tree& t);

// Rewrites a tree into a good one with a-rooted vines, growing only by
// a-forests.
GrowthResult make_good_tree(const SkeinContext& ctx, const Tree& t);
// Same, restricted to right-vine inputs (validates the shape).
GrowthResult make_good_vine(const SkeinContext& ctx, const Tree& r);

}  // namespace fsg
