#pragma once
#include <vector>

#include "fsg/error.hpp"
#include "fsg/tree.hpp"

namespace fsg {

// Bijection of {0..m-1}; img_[i] is the image of strand i.
// Drawn as m strands with inputs on top: top position i connects to bottom
// position img(i).
class Permutation {
 public:
  explicit Permutation(int m = 1);
  explicit Permutation(std::vector<int> images);

  static Permutation rotation(int m, int r);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

  bool is_identity() const;
  // True iff i -> i + r (mod m) for some r.
  bool is_rotation() const;
  int rotation_amount() const;  // requires is_rotation()

  Permutation inverse() const;
  // (p * q)(i) = p(q(i)); q applied first.
  Permutation operator*(const Permutation& o) const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(o == *this); }

 private:
  std::vector<int> img_;
};

// Brin-Zappa-Szep drag: pi followed below by forest g equals g_pi followed by
// pi_g, where g_pi places the i-th tree of g at bottom position pi(i) and pi_g
// routes the leaf blocks accordingly.
struct BzsResult {
  Forest g_pi;
  Permutation pi_g;
};
BzsResult bzs_drag(const Forest& g, const Permutation& pi);

}  // namespace fsg
