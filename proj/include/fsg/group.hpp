#pragma once
#include <optional>

#include "fsg/permutation.hpp"
#include "fsg/skein.hpp"
#include "fsg/transducer.hpp"
#include "fsg/tree.hpp"

namespace fsg {

enum class GroupType { F, T, V };

GroupType join_type(GroupType x, GroupType y);
char type_char(GroupType t);

// Fraction [t / pi / s]: class of a numerator tree, leaf permutation and
// denominator tree under growing and skein moves. The permutation routes
// denominator leaf i to numerator leaf pi(i).
struct GroupElement {
  SkeinContext ctx;
  Tree t;
  Permutation pi;
  Tree s;
  GroupType type;

  GroupElement(SkeinContext c, Tree t_, Permutation pi_, Tree s_, GroupType ty);
  // F-type element [t / s].
  GroupElement(SkeinContext c, Tree t_, Tree s_);

  static GroupElement identity(SkeinContext c, GroupType ty = GroupType::F);
};

GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);
GroupElement power(const GroupElement& x, int k);

// Representative with an a-tree denominator, obtained through the growing
// relation; same group element.
GroupElement reduce_to_a_denominator(const GroupElement& x);

// Growing relation applied with the forest p: [t.p^pi / pi^p / s.p].
GroupElement grown_representative(const GroupElement& x, const Forest& p);

// Denominator cones and numerator machines computed once for repeated
// evaluation of the same element.
struct PreparedAction {
  std::vector<Address> cones;
  std::vector<Transducer> machines;
};
PreparedAction prepare_action(const GroupElement& g);
RationalPoint act(const PreparedAction& p, const RationalPoint& x);

bool is_identity(const GroupElement& x);
bool equals(const GroupElement& x, const GroupElement& y);
// A rational point moved by x, if any (empty iff x is the identity).
std::optional<RationalPoint> moved_point(const GroupElement& x);

// b-vertex count difference mod n; the abelianisation of the T-type group.
int abelianise(const GroupElement& x);

// [t / pi / s'] with s' an a-tree and t good.
GroupElement seminormal_form(const GroupElement& x);

// Image of x under the canonical prefix-replacement action.
RationalPoint canonical_action(const GroupElement& g, const RationalPoint& x);

// sigma(s) = [rho_2(s) / lambda_2(s)]; c_bar(plus) maps it to s.
GroupElement sigma_generator(const SkeinContext& ctx, Colour c);
// Commutator [sigma(a), sigma(b)^i], 0 < i < n.
GroupElement free_generator(const SkeinContext& ctx, int i);

// iota(t) = Y_a (Y_a tensor I) (I tensor t tensor I); embeds fixing the
// cones 00 and 1.
GroupElement iota_embed(const GroupElement& x);

std::string format_element(const GroupElement& x);

}  // namespace fsg
