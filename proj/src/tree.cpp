#include "fsg/tree.hpp"

#include <algorithm>

namespace fsg {

Tree::Tree(Colour c, Tree l, Tree r) {
  int lv = l.leaves() + r.leaves();
  int d = 1 + std::max(l.depth(), r.depth());
  node_ = std::make_shared<const detail::TreeNode>(
      detail::TreeNode{c, std::move(l), std::move(r), lv, d});
}

Colour Tree::colour() const {
  if (!node_) throw DomainError("colour() on a leaf");
  return node_->c;
}

const Tree& Tree::left() const {
  if (!node_) throw DomainError("left() on a leaf");
  return node_->l;
}

const Tree& Tree::right() const {
  if (!node_) throw DomainError("right() on a leaf");
  return node_->r;
}

bool Tree::operator==(const Tree& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->c != o.node_->c || node_->leaves != o.node_->leaves ||
      node_->depth != o.node_->depth)
    return false;
  return node_->l == o.node_->l && node_->r == o.node_->r;
}

int Forest::leaves() const {
  int n = 0;
  for (const auto& t : trees) n += t.leaves();
  return n;
}

Tree leaf() { return Tree(); }
Tree caret(Colour c) { return Tree(c, Tree(), Tree()); }
Tree node(Colour c, Tree l, Tree r) { return Tree(c, std::move(l), std::move(r)); }

Forest identity_forest(int roots) {
  if (roots < 1) throw DomainError("forest needs at least one root");
  return Forest(std::vector<Tree>(static_cast<std::size_t>(roots)));
}

bool is_identity_forest(const Forest& f) {
  for (const auto& t : f.trees)
    if (!t.is_leaf()) return false;
  return true;
}

namespace {

// Grafts trees [*next, *next + t.leaves()) of g onto the leaves of t.
Tree graft_all(const Tree& t, const std::vector<Tree>& g, std::size_t* next) {
  if (t.is_leaf()) return g[(*next)++];
  Tree l = graft_all(t.left(), g, next);
  Tree r = graft_all(t.right(), g, next);
  return Tree(t.colour(), std::move(l), std::move(r));
}

}  // namespace

Forest compose(const Forest& f, const Forest& g) {
  if (f.leaves() != g.roots())
    throw DomainError("compose: leaves(f) != roots(g)");
  std::size_t next = 0;
  std::vector<Tree> out;
  out.reserve(f.trees.size());
  for (const auto& t : f.trees) out.push_back(graft_all(t, g.trees, &next));
  return Forest(std::move(out));
}

Tree compose1(const Tree& f, const Forest& g) {
  return compose(Forest(f), g).trees[0];
}

Forest tensor(const Forest& f, const Forest& g) {
  std::vector<Tree> out = f.trees;
  out.insert(out.end(), g.trees.begin(), g.trees.end());
  return Forest(std::move(out));
}

bool has_vertex(const Tree& t, const Address& at) {
  const Tree* cur = &t;
  for (char c : at) {
    if (cur->is_leaf()) return false;
    cur = (c == '0') ? &cur->left() : &cur->right();
  }
  return true;
}

Tree subtree_at(const Tree& t, const Address& at) {
  const Tree* cur = &t;
  for (char c : at) {
    if (cur->is_leaf()) throw DomainError("subtree_at: address " + at + " not in tree");
    cur = (c == '0') ? &cur->left() : &cur->right();
  }
  return *cur;
}

Tree with_subtree(const Tree& t, const Address& at, const Tree& sub) {
  if (at.empty()) return sub;
  if (t.is_leaf()) throw DomainError("with_subtree: address not in tree");
  Address rest = at.substr(1);
  if (at[0] == '0')
    return Tree(t.colour(), with_subtree(t.left(), rest, sub), t.right());
  return Tree(t.colour(), t.left(), with_subtree(t.right(), rest, sub));
}

Tree graft_at_leaf(const Tree& t, const Address& at, const Tree& sub) {
  if (!subtree_at(t, at).is_leaf())
    throw DomainError("graft_at_leaf: address " + at + " is not a leaf");
  return with_subtree(t, at, sub);
}

namespace {

void collect_leaves(const Tree& t, Address* cur, std::vector<Address>* out) {
  if (t.is_leaf()) {
    out->push_back(*cur);
    return;
  }
  cur->push_back('0');
  collect_leaves(t.left(), cur, out);
  cur->back() = '1';
  collect_leaves(t.right(), cur, out);
  cur->pop_back();
}

}  // namespace

std::vector<Address> leaf_addresses(const Tree& t) {
  std::vector<Address> out;
  out.reserve(static_cast<std::size_t>(t.leaves()));
  Address cur;
  collect_leaves(t, &cur, &out);
  return out;
}

int leaf_index(const Tree& t, const Address& at) {
  const Tree* cur = &t;
  int idx = 0;
  for (char c : at) {
    if (cur->is_leaf()) throw DomainError("leaf_index: address not in tree");
    if (c == '0') {
      cur = &cur->left();
    } else {
      idx += cur->left().leaves();
      cur = &cur->right();
    }
  }
  if (!cur->is_leaf()) throw DomainError("leaf_index: address is interior");
  return idx;
}

Address leaf_address(const Tree& t, int i) {
  if (i < 0 || i >= t.leaves()) throw DomainError("leaf_address: index out of range");
  Address out;
  const Tree* cur = &t;
  while (!cur->is_leaf()) {
    int ll = cur->left().leaves();
    if (i < ll) {
      out.push_back('0');
      cur = &cur->left();
    } else {
      out.push_back('1');
      i -= ll;
      cur = &cur->right();
    }
  }
  return out;
}

Tree vine(VineKind kind, int k, Colour c) {
  if (k < 1) throw DomainError("vine: k must be >= 1");
  Tree t = caret(c);
  for (int i = 1; i < k; ++i) {
    t = (kind == VineKind::left) ? Tree(c, t, leaf()) : Tree(c, leaf(), t);
  }
  return t;
}

Tree tau(int n, Colour c) {
  if (n < 3) throw DomainError("tau: n must be >= 3");
  return Tree(c, vine(VineKind::left, n - 2, c), caret(c));
}

namespace {

bool match_rec(const Tree& t, const Tree& pattern) {
  if (pattern.is_leaf()) return true;
  if (t.is_leaf() || t.colour() != pattern.colour()) return false;
  return match_rec(t.left(), pattern.left()) && match_rec(t.right(), pattern.right());
}

void collect_hangings(const Tree& t, const Tree& pattern, std::vector<Tree>* out) {
  if (pattern.is_leaf()) {
    out->push_back(t);
    return;
  }
  collect_hangings(t.left(), pattern.left(), out);
  collect_hangings(t.right(), pattern.right(), out);
}

}  // namespace

bool subtree_match(const Tree& t, const Address& at, const Tree& pattern) {
  if (!has_vertex(t, at)) return false;
  return match_rec(subtree_at(t, at), pattern);
}

Tree replace_at(const Tree& t, const Address& at, const Tree& from, const Tree& to) {
  if (from.leaves() != to.leaves())
    throw DomainError("replace_at: pattern leaf counts differ");
  if (!subtree_match(t, at, from))
    throw DomainError("replace_at: pattern does not match at " + (at.empty() ? std::string("root") : at));
  std::vector<Tree> hangings;
  collect_hangings(subtree_at(t, at), from, &hangings);
  Tree replacement = compose1(to, Forest(std::move(hangings)));
  return with_subtree(t, at, replacement);
}

bool all_coloured(const Tree& t, Colour c) {
  if (t.is_leaf()) return true;
  return t.colour() == c && all_coloured(t.left(), c) && all_coloured(t.right(), c);
}

int count_colour(const Tree& t, Colour c) {
  if (t.is_leaf()) return 0;
  return (t.colour() == c ? 1 : 0) + count_colour(t.left(), c) + count_colour(t.right(), c);
}

namespace {

Tree right_spine_vine(const Tree& t) {
  if (t.is_leaf()) throw DomainError("right_spine_vine of a leaf");
  std::vector<Colour> cs;
  const Tree* cur = &t;
  while (!cur->is_leaf()) {
    cs.push_back(cur->colour());
    cur = &cur->right();
  }
  Tree v = caret(cs.back());
  for (int i = static_cast<int>(cs.size()) - 2; i >= 0; --i)
    v = Tree(cs[static_cast<std::size_t>(i)], leaf(), v);
  return v;
}

// Hanging trees under a pure right-vine layer: the left child of each spine
// vertex, then the final right leaf position.
std::vector<Tree> vine_hangings(const Tree& t) {
  std::vector<Tree> out;
  const Tree* cur = &t;
  while (!cur->is_leaf()) {
    out.push_back(cur->left());
    cur = &cur->right();
  }
  out.push_back(leaf());
  return out;
}

}  // namespace

std::vector<Forest> right_vine_decomposition(const Tree& t) {
  std::vector<Forest> out;
  if (t.is_leaf()) return out;
  // Current frontier: a forest whose composition with the already-emitted
  // layers rebuilds t. Peel the leftmost nontrivial tree's root vine each step.
  std::vector<Tree> frontier{t};
  while (true) {
    std::size_t i = 0;
    while (i < frontier.size() && frontier[i].is_leaf()) ++i;
    if (i == frontier.size()) break;
    const Tree& cur = frontier[i];
    Tree v = right_spine_vine(cur);
    std::vector<Tree> layer;
    for (std::size_t j = 0; j < i; ++j) layer.push_back(leaf());
    layer.push_back(v);
    for (std::size_t j = i + 1; j < frontier.size(); ++j) layer.push_back(leaf());
    out.push_back(Forest(std::move(layer)));
    std::vector<Tree> next(frontier.begin(), frontier.begin() + static_cast<long>(i));
    for (const Tree& h : vine_hangings(cur)) next.push_back(h);
    next.insert(next.end(), frontier.begin() + static_cast<long>(i) + 1, frontier.end());
    frontier = std::move(next);
  }
  return out;
}

std::string colour_word(Side side, const Tree& t) {
  std::string w;
  const Tree* cur = &t;
  while (!cur->is_leaf()) {
    w.push_back(colour_char(cur->colour()));
    cur = (side == Side::minus) ? &cur->left() : &cur->right();
  }
  return w;
}

std::string colour_word(Side side, const Forest& f) {
  if (f.trees.empty()) return "";
  return colour_word(side, side == Side::minus ? f.trees.front() : f.trees.back());
}

std::string format_tree(const Tree& t) {
  if (t.is_leaf()) return "I";
  std::string s(1, colour_char(t.colour()));
  s += "(" + format_tree(t.left()) + "," + format_tree(t.right()) + ")";
  return s;
}

std::string format_forest(const Forest& f) {
  std::string s;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) s += ",";
    s += format_tree(f.trees[i]);
  }
  return s;
}

}  // namespace fsg
