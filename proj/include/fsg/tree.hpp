#pragma once
#include <memory>
#include <string>
#include <vector>

#include "fsg/error.hpp"

namespace fsg {

enum class Colour : unsigned char { a, b };

inline char colour_char(Colour c) { return c == Colour::a ? 'a' : 'b'; }

// Vertex address in the infinite binary tree: word over {0,1}, root = "".
using Address = std::string;

namespace detail {
struct TreeNode;
}

// Immutable full binary tree with {a,b}-coloured interior vertices.
// Shared substructure via shared_ptr; a default-constructed Tree is a leaf.
class Tree {
 public:
  Tree() = default;

  Tree(Colour c, Tree left, Tree right);

  bool is_leaf() const { return node_ == nullptr; }
  Colour colour() const;
  const Tree& left() const;
  const Tree& right() const;

  int leaves() const;
  int carets() const { return leaves() - 1; }
  int depth() const;

  bool operator==(const Tree& o) const;
  bool operator!=(const Tree& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const detail::TreeNode> node_;
};

namespace detail {
struct TreeNode {
  Colour c;
  Tree l, r;
  int leaves;
  int depth;
};
}

inline int Tree::leaves() const { return node_ ? node_->leaves : 1; }
inline int Tree::depth() const { return node_ ? node_->depth : 0; }

// Ordered nonempty tuple of trees.
struct Forest {
  std::vector<Tree> trees;

  Forest() = default;
  explicit Forest(std::vector<Tree> ts) : trees(std::move(ts)) {}
  explicit Forest(Tree t) : trees{std::move(t)} {}

  int roots() const { return static_cast<int>(trees.size()); }
  int leaves() const;

  bool operator==(const Forest& o) const { return trees == o.trees; }
  bool operator!=(const Forest& o) const { return !(o == *this); }
};

Tree leaf();
Tree caret(Colour c);
Tree node(Colour c, Tree l, Tree r);

Forest identity_forest(int roots);
bool is_identity_forest(const Forest& f);

// Grafts the i-th root of g onto the i-th leaf of f.
Forest compose(const Forest& f, const Forest& g);
Tree compose1(const Tree& f, const Forest& g);
Forest tensor(const Forest& f, const Forest& g);

bool has_vertex(const Tree& t, const Address& at);
// Subtree rooted at `at` (error if `at` is not a vertex of t).
Tree subtree_at(const Tree& t, const Address& at);
// Replaces the subtree rooted at `at`.
Tree with_subtree(const Tree& t, const Address& at, const Tree& sub);
// Grafts `sub` at a leaf of t (error if `at` is not a leaf).
Tree graft_at_leaf(const Tree& t, const Address& at, const Tree& sub);

std::vector<Address> leaf_addresses(const Tree& t);
// 0-based index of the leaf at `at` (error if not a leaf of t).
int leaf_index(const Tree& t, const Address& at);
// Address of the 0-based i-th leaf.
Address leaf_address(const Tree& t, int i);

enum class VineKind { left, right };
// lambda_k(c) / rho_k(c): k carets descending one side.
Tree vine(VineKind kind, int k, Colour c);
// tau_n(c) = Y(lambda_{n-2} tensor Y), n carets, n >= 3.
Tree tau(int n, Colour c);

// True iff every interior vertex of `pattern`, offset by `at`, lands on an
// interior vertex of t with the same colour.
bool subtree_match(const Tree& t, const Address& at, const Tree& pattern);
// Requires subtree_match(t, at, from) and leaves(from) == leaves(to);
// moves the subtrees hanging below `from`'s leaves onto `to`'s leaves.
Tree replace_at(const Tree& t, const Address& at, const Tree& from,
                const Tree& to);

bool all_coloured(const Tree& t, Colour c);
int count_colour(const Tree& t, Colour c);

// Factors t as a composition of elementary right-vine layers
// I^i (tensor) rho_j (tensor) I^k, carets further left emitted earlier.
std::vector<Forest> right_vine_decomposition(const Tree& t);

enum class Side { minus, plus };
// Colours along the root-to-first-leaf path of the first tree (minus) or the
// root-to-last-leaf path of the last tree (plus).
std::string colour_word(Side side, const Forest& f);
std::string colour_word(Side side, const Tree& t);

std::string format_tree(const Tree& t);
std::string format_forest(const Forest& f);

}  // namespace fsg
