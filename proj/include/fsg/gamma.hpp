#pragma once
#include <string>
#include <utility>
#include <vector>

#include "fsg/group.hpp"

namespace fsg {

// Element of Gamma+ = <a, b | a^2 = b^n> in normal form z^k w, where
// z = a^2 = b^n is central and w is the alternating Z2 * Zn normal form:
// tokens alternate between `a` (0) and b-blocks b^j (j = 1..n-1).
struct GammaPlus {
  int n;
  long long k = 0;
  std::vector<int> w;  // 0 = a, j in 1..n-1 = b^j

  explicit GammaPlus(int n_);

  bool is_trivial() const { return k == 0 && w.empty(); }
  bool operator==(const GammaPlus& o) const {
    return n == o.n && k == o.k && w == o.w;
  }
  bool operator!=(const GammaPlus& o) const { return !(o == *this); }
};

GammaPlus gamma_plus_letter(int n, char c, bool inverted);
GammaPlus gamma_plus_mul(const GammaPlus& x, const GammaPlus& y);
GammaPlus gamma_plus_inverse(const GammaPlus& x);
// Word over a, b, A, B (capitals = inverses).
GammaPlus gamma_plus_normalise(int n, const std::string& word);
std::string format_gamma_plus(const GammaPlus& x);

// Image in the quotient Z2 * Zn (forget z).
std::vector<int> z2_zn_word(const GammaPlus& x);
std::string format_z2_zn(const std::vector<int>& w);
// Abelianisation of Z2 * Zn: (residue mod 2, residue mod n).
std::pair<int, int> z2_zn_abelianise(int n, const std::vector<int>& w);

// Gamma- is Z via a -> 1, b -> n-1.
long long gamma_minus_of_word(int n, const std::string& colours);

// c_bar(side, [t/s]) = c(side, t) * c(side, s)^{-1}.
GammaPlus c_bar_plus(const GroupElement& x);
long long c_bar_minus(const GroupElement& x);

struct GermAtZero {
  GammaPlus plus;
  long long minus;
};
// Requires the action of x to fix the point 0 (both endpoint sequences).
GermAtZero germ_at_zero(const GroupElement& x);

}  // namespace fsg
