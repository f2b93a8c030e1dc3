#include "fsg/parse.hpp"

#include <cctype>

namespace fsg {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    return text[pos];
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char take() {
    char c = peek();
    ++pos;
    return c;
  }
  void expect(char c) {
    char got = peek();
    if (got != c)
      throw ParseError(std::string("expected '") + c + "', found '" + got + "'", pos);
    ++pos;
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number", start);
    return std::stoi(text.substr(start, pos - start));
  }
  void done() {
    if (!at_end()) throw ParseError("trailing input", pos);
  }
};

Tree tree_expr(Cursor& c) {
  char h = c.take();
  if (h == 'I') return leaf();
  if (h != 'a' && h != 'b')
    throw ParseError("expected 'I', 'a' or 'b'", c.pos - 1);
  Colour col = h == 'a' ? Colour::a : Colour::b;
  c.expect('(');
  Tree l = tree_expr(c);
  c.expect(',');
  Tree r = tree_expr(c);
  c.expect(')');
  return Tree(col, std::move(l), std::move(r));
}

Permutation perm_expr(Cursor& c, int size) {
  if (c.peek() == 'i') {
    c.expect('i');
    c.expect('d');
    return Permutation(size);
  }
  if (c.peek() == 'r') {
    for (char ch : {'r', 'o', 't', '('}) c.expect(ch);
    int r = c.integer();
    c.expect(')');
    return Permutation::rotation(size, r);
  }
  for (char ch : {'p', 'e', 'r', 'm', '('}) c.expect(ch);
  std::vector<int> img;
  while (c.peek() != ')') img.push_back(c.integer() - 1);
  c.expect(')');
  if (static_cast<int>(img.size()) != size)
    throw ParseError("permutation size does not match leaf count", c.pos);
  return Permutation(std::move(img));
}

}  // namespace

Tree parse_tree(const std::string& text) {
  Cursor c{text};
  Tree t = tree_expr(c);
  c.done();
  return t;
}

Forest parse_forest(const std::string& text) {
  Cursor c{text};
  std::vector<Tree> trees{tree_expr(c)};
  while (!c.at_end()) {
    c.expect(',');
    trees.push_back(tree_expr(c));
  }
  return Forest(std::move(trees));
}

GroupElement parse_element(const std::string& text, const SkeinContext& ctx,
                           std::optional<GroupType> requested) {
  Cursor c{text};
  c.expect('[');
  Tree t = tree_expr(c);
  c.expect('|');
  Permutation pi = perm_expr(c, t.leaves());
  c.expect('|');
  Tree s = tree_expr(c);
  c.expect(']');
  c.done();
  GroupType ty;
  if (requested) {
    ty = *requested;
  } else if (pi.is_identity()) {
    ty = GroupType::F;
  } else if (pi.is_rotation()) {
    ty = GroupType::T;
  } else {
    ty = GroupType::V;
  }
  return GroupElement(ctx, std::move(t), std::move(pi), std::move(s), ty);
}

RationalPoint parse_point(const std::string& text) {
  Cursor c{text};
  std::string pre, period;
  while (c.peek() != '(') {
    char b = c.take();
    if (b != '0' && b != '1') throw ParseError("expected a bit", c.pos - 1);
    pre.push_back(b);
  }
  c.expect('(');
  while (c.peek() != ')') {
    char b = c.take();
    if (b != '0' && b != '1') throw ParseError("expected a bit", c.pos - 1);
    period.push_back(b);
  }
  c.expect(')');
  c.done();
  if (period.empty()) throw ParseError("period must be nonempty", c.pos);
  return RationalPoint(pre, period);
}

}  // namespace fsg
