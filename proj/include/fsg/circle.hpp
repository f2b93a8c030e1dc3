#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "fsg/group.hpp"
#include "fsg/transducer.hpp"

namespace fsg {

using Rational = boost::multiprecision::cpp_rational;

// Binary expansion value of the point: sum x_k / 2^{k+1}; all-ones wraps to 0.
Rational sigma_circle(const RationalPoint& x);

struct GraphPiece {
  Rational x0, x1, y0, y1;
  int slope_log2;  // slope = 2^slope_log2
};
struct SingularRegion {
  Rational x0, x1;
};
// Exact affine pieces of the circle map plus the regions where the depth
// budget ran out before the map became a prefix replacement.
struct PiecewiseGraph {
  std::vector<GraphPiece> pieces;
  std::vector<SingularRegion> singular;
};

PiecewiseGraph render(const GroupElement& g, int depth_budget = 12);

enum class GermClass { dyadic_gamma_pair, rational_z };
GermClass germ_classify(const RationalPoint& x);
GermClass germ_classify(const Rational& x);
std::string germ_class_name(GermClass c);

// Always prints numerator/denominator, lowest terms (0 is "0/1").
std::string format_rational(const Rational& x);
std::string graph_csv(const PiecewiseGraph& g);
std::string graph_svg(const PiecewiseGraph& g);

}  // namespace fsg
