#include "fsg/circle.hpp"

#include <sstream>

namespace fsg {

namespace {

using Int = boost::multiprecision::cpp_int;

Int word_value(const std::string& w) {
  Int v = 0;
  for (char c : w) v = (v << 1) + (c - '0');
  return v;
}

Int pow2(std::size_t k) { return Int(1) << k; }

}  // namespace

Rational sigma_circle(const RationalPoint& x) {
  Rational v = Rational(word_value(x.pre), pow2(x.pre.size())) +
               Rational(word_value(x.period),
                        pow2(x.pre.size()) * (pow2(x.period.size()) - 1));
  if (v >= 1) v -= 1;  // only the all-ones tail reaches 1
  return v;
}

namespace {

struct RenderState {
  int n;
  int budget;
  PiecewiseGraph out;

  void cone(const Address& u, const Transducer& w, int depth_left) {
    RationalPoint e0 = eval(w, RationalPoint("", "0"));
    RationalPoint e1 = eval(w, RationalPoint("", "1"));
    // longest common prefix of two distinct eventually periodic sequences
    std::size_t cap = e0.pre.size() + e1.pre.size() +
                      e0.period.size() * e1.period.size() + 1;
    std::string v;
    for (std::size_t k = 0; k < cap && e0.bit(k) == e1.bit(k); ++k)
      v.push_back(e0.bit(k));
    if (transducer_equal(w, Transducer::prefix_map(v)).equal) {
      Rational x0(word_value(u), pow2(u.size()));
      Rational y0(word_value(v), pow2(v.size()));
      out.pieces.push_back(GraphPiece{
          x0, x0 + Rational(1, pow2(u.size())), y0,
          y0 + Rational(1, pow2(v.size())),
          static_cast<int>(u.size()) - static_cast<int>(v.size())});
      return;
    }
    if (depth_left <= 0) {
      Rational x0(word_value(u), pow2(u.size()));
      out.singular.push_back(SingularRegion{x0, x0 + Rational(1, pow2(u.size()))});
      return;
    }
    cone(u + "0", compose_transducers(Transducer::prefix_map("0"), w), depth_left - 1);
    cone(u + "1", compose_transducers(Transducer::prefix_map("1"), w), depth_left - 1);
  }
};

}  // namespace

PiecewiseGraph render(const GroupElement& g, int depth_budget) {
  if (depth_budget < 1) throw DomainError("render: depth budget must be >= 1");
  if (!g.pi.is_rotation())
    throw DomainError("render needs a circle-acting (type T) element");
  GroupElement r = reduce_to_a_denominator(g);
  RenderState st{r.ctx.n, depth_budget, {}};
  std::vector<Address> addrs = leaf_addresses(r.s);
  for (int i = 0; i < r.s.leaves(); ++i) {
    Transducer w = local_action(r.ctx.n, r.t, r.pi(i));
    st.cone(addrs[static_cast<std::size_t>(i)], w, depth_budget);
  }
  return st.out;
}

GermClass germ_classify(const RationalPoint& x) {
  return (x.period == "0" || x.period == "1") ? GermClass::dyadic_gamma_pair
                                              : GermClass::rational_z;
}

GermClass germ_classify(const Rational& x) {
  Int den = boost::multiprecision::denominator(x);
  return (den & (den - 1)) == 0 ? GermClass::dyadic_gamma_pair
                                : GermClass::rational_z;
}

std::string germ_class_name(GermClass c) {
  return c == GermClass::dyadic_gamma_pair ? "Gamma+ x Gamma-" : "Z";
}

std::string format_rational(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

std::string graph_csv(const PiecewiseGraph& g) {
  std::string out = "x0,x1,y0,y1,slope_log2\n";
  for (const auto& p : g.pieces) {
    out += format_rational(p.x0) + "," + format_rational(p.x1) + "," +
           format_rational(p.y0) + "," + format_rational(p.y1) + "," +
           std::to_string(p.slope_log2) + "\n";
  }
  for (const auto& s : g.singular)
    out += "#singular," + format_rational(s.x0) + "," + format_rational(s.x1) + "\n";
  return out;
}

namespace {

std::string dec(const Rational& x) {
  std::ostringstream os;
  os << static_cast<double>(x);
  return os.str();
}

}  // namespace

std::string graph_svg(const PiecewiseGraph& g) {
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\">\n";
  for (const auto& s : g.singular) {
    out += "  <rect x=\"" + dec(s.x0) + "\" y=\"0\" width=\"" + dec(s.x1 - s.x0) +
           "\" height=\"1\" fill=\"#f8c8c8\" opacity=\"0.6\"/>\n";
  }
  for (const auto& p : g.pieces) {
    out += "  <polyline fill=\"none\" stroke=\"#202020\" stroke-width=\"0.004\" points=\"" +
           dec(p.x0) + "," + dec(Rational(1) - p.y0) + " " + dec(p.x1) + "," +
           dec(Rational(1) - p.y1) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace fsg
