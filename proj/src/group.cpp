#include "fsg/group.hpp"

#include "fsg/gamma.hpp"

namespace fsg {

GroupType join_type(GroupType x, GroupType y) {
  return static_cast<GroupType>(std::max(static_cast<int>(x), static_cast<int>(y)));
}

char type_char(GroupType t) {
  switch (t) {
    case GroupType::F: return 'F';
    case GroupType::T: return 'T';
    default: return 'V';
  }
}

GroupElement::GroupElement(SkeinContext c, Tree t_, Permutation pi_, Tree s_, GroupType ty)
    : ctx(c), t(std::move(t_)), pi(std::move(pi_)), s(std::move(s_)), type(ty) {
  if (t.leaves() != s.leaves() || t.leaves() != pi.size())
    throw DomainError("element: leaf counts and permutation size must agree");
  if (ty == GroupType::F && !pi.is_identity())
    throw DomainError("type F requires the identity permutation");
  if (ty == GroupType::T && !pi.is_rotation())
    throw DomainError("type T requires a rotation");
}

GroupElement::GroupElement(SkeinContext c, Tree t_, Tree s_)
    : GroupElement(c, t_, Permutation(t_.leaves()), s_, GroupType::F) {}

GroupElement GroupElement::identity(SkeinContext c, GroupType ty) {
  return GroupElement(c, leaf(), Permutation(1), leaf(), ty);
}

namespace {

// Growing relation: [t/pi/s] = [t.p^pi / pi^p / s.p].
GroupElement grow_element(const GroupElement& x, const Forest& p) {
  BzsResult d = bzs_drag(p, x.pi);
  return GroupElement(x.ctx, compose1(x.t, d.g_pi), d.pi_g, compose1(x.s, p), x.type);
}

}  // namespace

GroupElement reduce_to_a_denominator(const GroupElement& x) {
  if (all_coloured(x.s, Colour::a)) return x;
  GrowthResult g = grow_to_a_tree(x.ctx, x.s);
  GroupElement grown = grow_element(x, g.growth);
  // the grown denominator equals g.tree in F_n; swap in the a-tree representative
  return GroupElement(x.ctx, grown.t, grown.pi, g.tree, x.type);
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  if (!(x.ctx == y.ctx)) throw DomainError("multiply: context mismatch");
  CommonMultiple cm = right_common_multiple(x.ctx, x.s, y.t);
  // q' permuted so that q^{pi_y} = q'
  std::vector<Tree> qt(static_cast<std::size_t>(cm.q.roots()));
  for (int i = 0; i < cm.q.roots(); ++i)
    qt[static_cast<std::size_t>(i)] = cm.q.trees[static_cast<std::size_t>(y.pi(i))];
  Forest q(std::move(qt));

  BzsResult dx = bzs_drag(cm.p, x.pi);
  BzsResult dy = bzs_drag(q, y.pi);
  Tree num = compose1(x.t, dx.g_pi);
  Tree den = compose1(y.s, q);
  return GroupElement(x.ctx, std::move(num), dx.pi_g * dy.pi_g, std::move(den),
                      join_type(x.type, y.type));
}

GroupElement inverse(const GroupElement& x) {
  return GroupElement(x.ctx, x.s, x.pi.inverse(), x.t, x.type);
}

GroupElement power(const GroupElement& x, int k) {
  GroupElement base = k < 0 ? inverse(x) : x;
  int m = k < 0 ? -k : k;
  GroupElement acc = GroupElement::identity(x.ctx, x.type);
  for (int i = 0; i < m; ++i) acc = multiply(acc, base);
  return acc;
}

namespace {

// Per-leaf comparison of the action against the identity on the a-tree
// denominator's cones; nullopt = identity, else a moved point.
std::optional<RationalPoint> action_defect(const GroupElement& x) {
  GroupElement r = reduce_to_a_denominator(x);
  std::vector<Address> addrs = leaf_addresses(r.s);
  for (int i = 0; i < r.s.leaves(); ++i) {
    const Address& at = addrs[static_cast<std::size_t>(i)];
    Transducer w = local_action(r.ctx.n, r.t, r.pi(i));
    EquivResult eq = transducer_equal(w, Transducer::prefix_map(at));
    if (!eq.equal) return prepend(at, *eq.witness);
  }
  return std::nullopt;
}

}  // namespace

bool is_identity(const GroupElement& x) {
  // cheap homomorphic invariants rule out most non-identities before the
  // per-leaf transducer comparison
  if (x.type != GroupType::V && abelianise(x) != 0) return false;
  if (x.pi.is_identity() &&
      (!c_bar_plus(x).is_trivial() || c_bar_minus(x) != 0))
    return false;
  return !action_defect(x).has_value();
}

std::optional<RationalPoint> moved_point(const GroupElement& x) {
  return action_defect(x);
}

bool equals(const GroupElement& x, const GroupElement& y) {
  return is_identity(multiply(x, inverse(y)));
}

int abelianise(const GroupElement& x) {
  if (x.type == GroupType::V)
    throw DomainError("abelianise is defined on types F and T");
  int d = count_colour(x.t, Colour::b) - count_colour(x.s, Colour::b);
  int n = x.ctx.n;
  return ((d % n) + n) % n;
}

GroupElement seminormal_form(const GroupElement& x) {
  GroupElement r = reduce_to_a_denominator(x);
  GrowthResult mg = make_good_tree(r.ctx, r.t);
  // grow with p chosen so the numerator receives exactly mg.growth
  std::vector<Tree> pt(static_cast<std::size_t>(mg.growth.roots()));
  for (int i = 0; i < mg.growth.roots(); ++i)
    pt[static_cast<std::size_t>(i)] = mg.growth.trees[static_cast<std::size_t>(r.pi(i))];
  Forest p(std::move(pt));
  BzsResult d = bzs_drag(p, r.pi);
  if (d.g_pi != mg.growth)
    throw std::logic_error("seminormal_form: growth permutation mismatch");
  return GroupElement(r.ctx, mg.tree, d.pi_g, compose1(r.s, p), r.type);
}

GroupElement grown_representative(const GroupElement& x, const Forest& p) {
  return grow_element(x, p);
}

PreparedAction prepare_action(const GroupElement& g) {
  GroupElement r = reduce_to_a_denominator(g);
  PreparedAction out;
  out.cones = leaf_addresses(r.s);
  for (int i = 0; i < r.s.leaves(); ++i)
    out.machines.push_back(local_action(r.ctx.n, r.t, r.pi(i)));
  return out;
}

RationalPoint act(const PreparedAction& p, const RationalPoint& x) {
  for (std::size_t i = 0; i < p.cones.size(); ++i) {
    if (!starts_with(x, p.cones[i])) continue;
    return eval(p.machines[i], drop_prefix(x, p.cones[i].size()));
  }
  throw std::logic_error("act: no cone of the denominator matched");
}

RationalPoint canonical_action(const GroupElement& g, const RationalPoint& x) {
  return act(prepare_action(g), x);
}

GroupElement sigma_generator(const SkeinContext& ctx, Colour c) {
  return GroupElement(ctx, vine(VineKind::right, 2, c), vine(VineKind::left, 2, c));
}

GroupElement free_generator(const SkeinContext& ctx, int i) {
  if (i <= 0 || i >= ctx.n) throw DomainError("free_generator: need 0 < i < n");
  GroupElement x = sigma_generator(ctx, Colour::a);
  GroupElement y = power(sigma_generator(ctx, Colour::b), i);
  return multiply(multiply(x, y), multiply(inverse(x), inverse(y)));
}

namespace {

Tree iota_tree(const Tree& t) {
  return graft_at_leaf(vine(VineKind::left, 2, Colour::a), "01", t);
}

}  // namespace

GroupElement iota_embed(const GroupElement& x) {
  if (!x.pi.is_identity())
    throw DomainError("iota_embed is defined on type F elements");
  return GroupElement(x.ctx, iota_tree(x.t), iota_tree(x.s));
}

std::string format_element(const GroupElement& x) {
  std::string mid;
  if (x.pi.is_identity()) {
    mid = "id";
  } else if (x.pi.is_rotation()) {
    mid = "rot(" + std::to_string(x.pi.rotation_amount()) + ")";
  } else {
    mid = "perm(";
    for (int i = 0; i < x.pi.size(); ++i) {
      if (i) mid += " ";
      mid += std::to_string(x.pi(i) + 1);
    }
    mid += ")";
  }
  return "[" + format_tree(x.t) + "|" + mid + "|" + format_tree(x.s) + "]";
}

}  // namespace fsg
