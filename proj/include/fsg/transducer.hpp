#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fsg/error.hpp"
#include "fsg/tree.hpp"

namespace fsg {

// Eventually periodic binary sequence u . p p p ..., held in normal form
// (minimal period, minimal preperiod). Normal forms are equal iff the
// sequences are equal.
struct RationalPoint {
  std::string pre;     // over {0,1}
  std::string period;  // over {0,1}, nonempty

  RationalPoint() : period("0") {}
  RationalPoint(std::string u, std::string p);

  char bit(std::size_t k) const;
  bool operator==(const RationalPoint& o) const {
    return pre == o.pre && period == o.period;
  }
  bool operator!=(const RationalPoint& o) const { return !(o == *this); }
  // Lexicographic order on the sequences.
  bool operator<(const RationalPoint& o) const;

  bool is_zeros() const { return pre.empty() && period == "0"; }
  bool is_ones() const { return pre.empty() && period == "1"; }
};

RationalPoint prepend(const std::string& w, RationalPoint x);
RationalPoint drop_prefix(const RationalPoint& x, std::size_t k);
bool starts_with(const RationalPoint& x, const std::string& w);
std::string format_point(const RationalPoint& x);

// Deterministic total binary-input word-output machine. Non-stalling: no
// cycle in the transition graph emits only empty words, so every infinite
// input yields an infinite output.
class Transducer {
 public:
  struct Edge {
    std::string out;
    int next;
  };

  Transducer(std::string initial_output, std::vector<std::array<Edge, 2>> delta,
             int start = 0);

  static Transducer identity_copy();
  // Emits w up front, then copies.
  static Transducer prefix_map(const std::string& w);

  int states() const { return static_cast<int>(delta_.size()); }
  int start() const { return start_; }
  const std::string& initial_output() const { return init_; }
  const Edge& edge(int state, int b) const {
    return delta_[static_cast<std::size_t>(state)][static_cast<std::size_t>(b)];
  }
  std::size_t max_output_len() const { return max_out_; }

  // Runs on a finite word from `state`; returns output and final state.
  std::pair<std::string, int> run(int state, const std::string& word) const;

 private:
  std::string init_;
  std::vector<std::array<Edge, 2>> delta_;
  int start_;
  std::size_t max_out_;
};

enum class GenSym { A0, A1, B0, B1 };

// The four generating prefix-replacement maps of the canonical action.
Transducer generator_transducer(int n, GenSym sym);

// Machine computing then(first_applied(x)). Product construction restricted
// to reachable states.
Transducer compose_transducers(const Transducer& first_applied, const Transducer& then);

// Exact image of an eventually periodic point.
RationalPoint eval(const Transducer& t, const RationalPoint& x);

struct EquivResult {
  bool equal;
  std::optional<RationalPoint> witness;  // set iff !equal
};

// Decides whether two machines compute the same map on infinite words, by a
// product search with bounded output lag. Inequivalence comes with a point
// where the images differ.
EquivResult transducer_equal(const Transducer& s, const Transducer& t);

// Colour/turn word along the root-to-leaf path, root first.
std::vector<GenSym> local_action_word(int n, const Tree& t, int leaf_idx);
// The composite machine C1 .. Cl with the deepest caret applied first.
Transducer local_action(int n, const Tree& t, int leaf_idx);

// Leaf addresses of tau_n and the mu_i cone addresses partitioning the
// complement of {all-ones}.
struct PartitionTable {
  explicit PartitionTable(int n);
  int n;
  std::vector<Address> ell;  // ell[j-1] = address of leaf j of tau_n, j = 1..n+1
  Address mu(int i) const;   // i >= 1
};

// Stepwise preimage under one generator map; empty if x is outside the image.
std::optional<RationalPoint> generator_preimage(int n, GenSym sym, const RationalPoint& x);

}  // namespace fsg
