#include "doctest.h"
#include "fsg/circle.hpp"
#include "fsg/parse.hpp"

using namespace fsg;

namespace {
RationalPoint pt(const std::string& s) { return parse_point(s); }
Rational pow2(int s) {
  Rational r = 1;
  for (int i = 0; i < s; ++i) r *= 2;
  for (int i = 0; i > s; --i) r /= 2;
  return r;
}
}

TEST_CASE("binary expansion values") {
  CHECK(sigma_circle(pt("1(0)")) == Rational(1, 2));
  CHECK(sigma_circle(pt("(10)")) == Rational(2, 3));
  CHECK(sigma_circle(pt("(0)")) == 0);
  CHECK(sigma_circle(pt("(1)")) == 0);
  CHECK(sigma_circle(pt("01(0)")) == Rational(1, 4));
  CHECK(sigma_circle(pt("11(01)")) == Rational(3, 4) + Rational(1, 12));
}

TEST_CASE("identity renders as one piece") {
  SkeinContext ctx(3);
  PiecewiseGraph g = render(GroupElement::identity(ctx));
  REQUIRE(g.pieces.size() == 1);
  CHECK(g.singular.empty());
  CHECK(g.pieces[0].x0 == 0);
  CHECK(g.pieces[0].x1 == 1);
  CHECK(g.pieces[0].y0 == 0);
  CHECK(g.pieces[0].y1 == 1);
  CHECK(g.pieces[0].slope_log2 == 0);
}

TEST_CASE("thompson-like generator graph") {
  SkeinContext ctx(3);
  GroupElement sa = sigma_generator(ctx, Colour::a);
  PiecewiseGraph g = render(sa);
  REQUIRE(g.pieces.size() == 3);
  CHECK(g.singular.empty());
  CHECK(g.pieces[0].x0 == 0);
  CHECK(g.pieces[0].x1 == Rational(1, 4));
  CHECK(g.pieces[0].y1 == Rational(1, 2));
  CHECK(g.pieces[0].slope_log2 == 1);
  CHECK(g.pieces[1].x1 == Rational(1, 2));
  CHECK(g.pieces[1].y1 == Rational(3, 4));
  CHECK(g.pieces[1].slope_log2 == 0);
  CHECK(g.pieces[2].x1 == 1);
  CHECK(g.pieces[2].y1 == 1);
  CHECK(g.pieces[2].slope_log2 == -1);
}

TEST_CASE("pieces are sorted, adjacent and inside the unit square") {
  SkeinContext ctx(3);
  GroupElement g(ctx, ctx.tau_a(), Permutation::rotation(4, 1), ctx.tau_a(),
                 GroupType::T);
  PiecewiseGraph ph = render(g);
  CHECK(ph.singular.empty());
  Rational x = 0;
  for (const GraphPiece& p : ph.pieces) {
    CHECK(p.x0 == x);
    CHECK(p.x0 < p.x1);
    CHECK(p.y0 >= 0);
    CHECK(p.y1 <= 1);
    CHECK(p.y1 - p.y0 == (p.x1 - p.x0) * pow2(p.slope_log2));
    x = p.x1;
  }
  CHECK(x == 1);
}

TEST_CASE("skein flip element needs splitting but stays affine") {
  SkeinContext ctx(3);
  GroupElement g(ctx, caret(Colour::b), caret(Colour::a));
  PiecewiseGraph ph = render(g, 8);
  REQUIRE(ph.pieces.size() >= 4);
  CHECK(!ph.singular.empty());
  CHECK(ph.pieces[0].x0 == 0);
  CHECK(ph.pieces[0].x1 == Rational(1, 2));
  CHECK(ph.pieces[0].y1 == Rational(1, 4));
  CHECK(ph.pieces[0].slope_log2 == -1);
  for (const SingularRegion& s : ph.singular) CHECK(s.x0 >= Rational(7, 8));
}

TEST_CASE("germ classification") {
  CHECK(germ_classify(pt("(0)")) == GermClass::dyadic_gamma_pair);
  CHECK(germ_classify(pt("101(0)")) == GermClass::dyadic_gamma_pair);
  CHECK(germ_classify(pt("0(1)")) == GermClass::dyadic_gamma_pair);
  CHECK(germ_classify(pt("(10)")) == GermClass::rational_z);
  CHECK(germ_classify(Rational(3, 4)) == GermClass::dyadic_gamma_pair);
  CHECK(germ_classify(Rational(2, 3)) == GermClass::rational_z);
  CHECK(germ_class_name(GermClass::rational_z) == "Z");
}

TEST_CASE("serialization") {
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK(format_rational(Rational(3, 4)) == "3/4");
  PiecewiseGraph g;
  g.pieces.push_back(GraphPiece{0, Rational(1, 2), 0, Rational(1, 4), -1});
  g.singular.push_back(SingularRegion{Rational(7, 8), 1});
  std::string csv = graph_csv(g);
  CHECK(csv.substr(0, csv.find('\n')) == "x0,x1,y0,y1,slope_log2");
  CHECK(csv.find("0/1,1/2,0/1,1/4,-1") != std::string::npos);
  CHECK(csv.find("#singular,7/8,1/1") != std::string::npos);
  std::string svg = graph_svg(g);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("rect") != std::string::npos);
}
