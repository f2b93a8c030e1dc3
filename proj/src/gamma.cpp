#include "fsg/gamma.hpp"

namespace fsg {

GammaPlus::GammaPlus(int n_) : n(n_) {
  if (n < 3) throw DomainError("n must be >= 3");
}

namespace {

// Appends one alternating token (0 = a, j = b^j) with reduction at the seam.
void push_token(GammaPlus* g, int tok) {
  if (g->w.empty()) {
    g->w.push_back(tok);
    return;
  }
  int last = g->w.back();
  if (tok == 0 && last == 0) {
    g->w.pop_back();
    g->k += 1;  // a a = z
    return;
  }
  if (tok > 0 && last > 0) {
    g->w.pop_back();
    int sum = last + tok;
    if (sum >= g->n) {
      g->k += 1;  // b^n = z
      sum -= g->n;
    }
    if (sum > 0) push_token(g, sum);
    return;
  }
  g->w.push_back(tok);
}

}  // namespace

GammaPlus gamma_plus_letter(int n, char c, bool inverted) {
  GammaPlus g(n);
  if (c == 'a') {
    if (inverted) g.k = -1;  // a^-1 = z^-1 a
    g.w.push_back(0);
  } else if (c == 'b') {
    if (inverted) {
      g.k = -1;  // b^-1 = z^-1 b^{n-1}
      g.w.push_back(n - 1);
    } else {
      g.w.push_back(1);
    }
  } else {
    throw DomainError("gamma letter must be a or b");
  }
  return g;
}

GammaPlus gamma_plus_mul(const GammaPlus& x, const GammaPlus& y) {
  if (x.n != y.n) throw DomainError("gamma: n mismatch");
  GammaPlus g = x;
  g.k += y.k;
  for (int tok : y.w) push_token(&g, tok);
  return g;
}

GammaPlus gamma_plus_inverse(const GammaPlus& x) {
  GammaPlus g(x.n);
  g.k = -x.k;
  for (auto it = x.w.rbegin(); it != x.w.rend(); ++it) {
    g.k -= 1;
    push_token(&g, *it == 0 ? 0 : x.n - *it);
  }
  return g;
}

GammaPlus gamma_plus_normalise(int n, const std::string& word) {
  GammaPlus g(n);
  for (char c : word) {
    if (c == ' ') continue;
    bool inv = (c == 'A' || c == 'B');
    char base = inv ? static_cast<char>(c - 'A' + 'a') : c;
    g = gamma_plus_mul(g, gamma_plus_letter(n, base, inv));
  }
  return g;
}

std::string format_gamma_plus(const GammaPlus& x) {
  if (x.is_trivial()) return "e";
  std::string out;
  if (x.k != 0) out = "z^" + std::to_string(x.k);
  for (int tok : x.w) {
    if (!out.empty()) out += " ";
    if (tok == 0)
      out += "a";
    else if (tok == 1)
      out += "b";
    else
      out += "b^" + std::to_string(tok);
  }
  return out;
}

std::vector<int> z2_zn_word(const GammaPlus& x) { return x.w; }

std::string format_z2_zn(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string out;
  for (int tok : w) {
    if (!out.empty()) out += " ";
    if (tok == 0)
      out += "a";
    else if (tok == 1)
      out += "b";
    else
      out += "b^" + std::to_string(tok);
  }
  return out;
}

std::pair<int, int> z2_zn_abelianise(int n, const std::vector<int>& w) {
  int pa = 0, pb = 0;
  for (int tok : w) {
    if (tok == 0)
      pa ^= 1;
    else
      pb = (pb + tok) % n;
  }
  return {pa, pb};
}

long long gamma_minus_of_word(int n, const std::string& colours) {
  long long v = 0;
  for (char c : colours) v += (c == 'a') ? 1 : n - 1;
  return v;
}

GammaPlus c_bar_plus(const GroupElement& x) {
  if (!x.pi.is_identity())
    throw DomainError("c_bar is defined on elements with trivial permutation");
  int n = x.ctx.n;
  GammaPlus num(n), den(n);
  for (char c : colour_word(Side::plus, x.t))
    num = gamma_plus_mul(num, gamma_plus_letter(n, c, false));
  for (char c : colour_word(Side::plus, x.s))
    den = gamma_plus_mul(den, gamma_plus_letter(n, c, false));
  return gamma_plus_mul(num, gamma_plus_inverse(den));
}

long long c_bar_minus(const GroupElement& x) {
  if (!x.pi.is_identity())
    throw DomainError("c_bar is defined on elements with trivial permutation");
  int n = x.ctx.n;
  return gamma_minus_of_word(n, colour_word(Side::minus, x.t)) -
         gamma_minus_of_word(n, colour_word(Side::minus, x.s));
}

GermAtZero germ_at_zero(const GroupElement& x) {
  RationalPoint zero("", "0"), one("", "1");
  if (canonical_action(x, zero) != zero || canonical_action(x, one) != one)
    throw DomainError("germ_at_zero: element does not fix the point 0");
  if (!x.pi.is_identity())
    throw DomainError("germ_at_zero: element has no trivial-permutation representative");
  return {c_bar_plus(x), c_bar_minus(x)};
}

}  // namespace fsg
