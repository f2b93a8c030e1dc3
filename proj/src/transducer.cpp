#include "fsg/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace fsg {

namespace {

void check_bits(const std::string& w, const char* what) {
  for (char c : w)
    if (c != '0' && c != '1')
      throw DomainError(std::string(what) + ": expected a word over {0,1}");
}

}  // namespace

RationalPoint::RationalPoint(std::string u, std::string p)
    : pre(std::move(u)), period(std::move(p)) {
  check_bits(pre, "preperiod");
  check_bits(period, "period");
  if (period.empty()) throw DomainError("period must be nonempty");
  // minimal period
  std::size_t len = period.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool ok = true;
    for (std::size_t k = d; k < len && ok; ++k) ok = period[k] == period[k - d];
    if (ok) {
      period.resize(d);
      break;
    }
  }
  // minimal preperiod: fold trailing bits of `pre` into the cycle
  while (!pre.empty() && pre.back() == period.back()) {
    pre.pop_back();
    period = period.back() + period.substr(0, period.size() - 1);
  }
}

char RationalPoint::bit(std::size_t k) const {
  if (k < pre.size()) return pre[k];
  return period[(k - pre.size()) % period.size()];
}

bool RationalPoint::operator<(const RationalPoint& o) const {
  std::size_t bound = std::max(pre.size(), o.pre.size()) + period.size() * o.period.size();
  for (std::size_t k = 0; k < bound; ++k) {
    char x = bit(k), y = o.bit(k);
    if (x != y) return x < y;
  }
  return false;
}

RationalPoint prepend(const std::string& w, RationalPoint x) {
  return RationalPoint(w + x.pre, x.period);
}

RationalPoint drop_prefix(const RationalPoint& x, std::size_t k) {
  if (k <= x.pre.size()) return RationalPoint(x.pre.substr(k), x.period);
  std::size_t r = (k - x.pre.size()) % x.period.size();
  return RationalPoint("", x.period.substr(r) + x.period.substr(0, r));
}

bool starts_with(const RationalPoint& x, const std::string& w) {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (x.bit(k) != w[k]) return false;
  return true;
}

std::string format_point(const RationalPoint& x) {
  return x.pre + "(" + x.period + ")";
}

Transducer::Transducer(std::string initial_output,
                       std::vector<std::array<Edge, 2>> delta, int start)
    : init_(std::move(initial_output)), delta_(std::move(delta)), start_(start) {
  if (delta_.empty()) throw DomainError("transducer needs at least one state");
  if (start_ < 0 || start_ >= states()) throw DomainError("bad start state");
  check_bits(init_, "initial output");
  max_out_ = std::max<std::size_t>(1, init_.size());
  for (const auto& st : delta_)
    for (const auto& e : st) {
      check_bits(e.out, "transition output");
      if (e.next < 0 || e.next >= states()) throw DomainError("bad target state");
      max_out_ = std::max(max_out_, e.out.size());
    }
  // non-stalling: the subgraph of empty-output edges must be acyclic
  std::vector<int> mark(delta_.size(), 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<int, int>> stack;
  for (int s0 = 0; s0 < states(); ++s0) {
    if (mark[static_cast<std::size_t>(s0)]) continue;
    stack.push_back({s0, 0});
    mark[static_cast<std::size_t>(s0)] = 1;
    while (!stack.empty()) {
      auto& [s, b] = stack.back();
      if (b == 2) {
        mark[static_cast<std::size_t>(s)] = 2;
        stack.pop_back();
        continue;
      }
      const Edge& e = edge(s, b++);
      if (!e.out.empty()) continue;
      int m = mark[static_cast<std::size_t>(e.next)];
      if (m == 1) throw DomainError("stalling transducer: silent cycle");
      if (m == 0) {
        mark[static_cast<std::size_t>(e.next)] = 1;
        stack.push_back({e.next, 0});
      }
    }
  }
}

Transducer Transducer::identity_copy() { return prefix_map(""); }

Transducer Transducer::prefix_map(const std::string& w) {
  return Transducer(w, {{Edge{"0", 0}, Edge{"1", 0}}});
}

std::pair<std::string, int> Transducer::run(int state, const std::string& word) const {
  std::string out;
  for (char c : word) {
    const Edge& e = edge(state, c - '0');
    out += e.out;
    state = e.next;
  }
  return {out, state};
}

Transducer generator_transducer(int n, GenSym sym) {
  if (n < 3) throw DomainError("n must be >= 3");
  using E = Transducer::Edge;
  switch (sym) {
    case GenSym::A0:
      return Transducer::prefix_map("0");
    case GenSym::A1:
      return Transducer::prefix_map("1");
    case GenSym::B0:
      return Transducer::prefix_map(std::string(static_cast<std::size_t>(n - 1), '0'));
    case GenSym::B1:
      break;
  }
  // B1 advances mu_i cones: states 0 = start/"even ones", 1 = odd ones,
  // 2..n-1 = zero-run counters, n = copy.
  int copy = n;
  std::vector<std::array<E, 2>> d(static_cast<std::size_t>(n + 1));
  std::string zeros_n1(static_cast<std::size_t>(n - 1), '0');
  d[0] = {E{"", 2}, E{"", 1}};
  d[1] = {E{"11" + zeros_n1, copy}, E{"11", 0}};
  for (int k = 1; k <= n - 2; ++k) {
    E on0 = (k < n - 2) ? E{"", 2 + k}
                        : E{std::string(static_cast<std::size_t>(n - 2), '0') + "1", copy};
    E on1 = (k == 1) ? E{"10", copy}
                     : E{std::string(static_cast<std::size_t>(k - 1), '0') + "1", copy};
    d[static_cast<std::size_t>(1 + k)] = {on0, on1};
  }
  d[static_cast<std::size_t>(copy)] = {E{"0", copy}, E{"1", copy}};
  return Transducer("", std::move(d));
}

Transducer compose_transducers(const Transducer& first, const Transducer& then) {
  using E = Transducer::Edge;
  auto key = [&](int s, int t) {
    return static_cast<long long>(s) * then.states() + t;
  };
  std::unordered_map<long long, int> id;
  std::vector<std::pair<int, int>> pairs;
  auto intern = [&](int s, int t) {
    auto [it, fresh] = id.try_emplace(key(s, t), static_cast<int>(pairs.size()));
    if (fresh) pairs.push_back({s, t});
    return it->second;
  };
  auto [boot, t0] = then.run(then.start(), first.initial_output());
  std::string init = then.initial_output() + boot;
  intern(first.start(), t0);
  std::vector<std::array<E, 2>> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [s, t] = pairs[i];
    std::array<E, 2> row;
    for (int b = 0; b < 2; ++b) {
      const E& e = first.edge(s, b);
      auto [out, t2] = then.run(t, e.out);
      row[static_cast<std::size_t>(b)] = E{out, intern(e.next, t2)};
    }
    delta.push_back(row);
  }
  return Transducer(std::move(init), std::move(delta));
}

RationalPoint eval(const Transducer& t, const RationalPoint& x) {
  std::string out = t.initial_output();
  int state = t.start();
  std::size_t pos = 0;
  std::map<std::pair<int, std::size_t>, std::size_t> seen;  // (state, phase) -> out length
  while (true) {
    if (pos >= x.pre.size()) {
      std::size_t phase = (pos - x.pre.size()) % x.period.size();
      auto [it, fresh] = seen.try_emplace({state, phase}, out.size());
      if (!fresh) {
        std::size_t o1 = it->second;
        return RationalPoint(out.substr(0, o1), out.substr(o1));
      }
    }
    const auto& e = t.edge(state, x.bit(pos) - '0');
    out += e.out;
    state = e.next;
    ++pos;
  }
}

namespace {

// Continuations tried when the lag bound is exceeded without a committed
// output mismatch; short eventually periodic points.
std::vector<RationalPoint> witness_candidates() {
  std::vector<std::string> words{""};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() >= 3) continue;
    words.push_back(words[i] + "0");
    words.push_back(words[i] + "1");
  }
  std::vector<RationalPoint> out;
  for (const auto& u : words)
    for (const auto& p : words)
      if (!p.empty()) out.push_back(RationalPoint(u, p));
  return out;
}

}  // namespace

EquivResult transducer_equal(const Transducer& s, const Transducer& t) {
  auto validated = [&](RationalPoint x) -> std::optional<RationalPoint> {
    if (eval(s, x) != eval(t, x)) return x;
    return std::nullopt;
  };
  auto search_witness = [&](const std::string& input) -> RationalPoint {
    for (const auto& c : witness_candidates()) {
      RationalPoint x = prepend(input, c);
      if (auto w = validated(x)) return *w;
    }
    throw std::logic_error("transducer_equal: lag bound exceeded but no witness found");
  };

  std::size_t maxlen = std::max(s.max_output_len(), t.max_output_len());
  std::size_t bound =
      (static_cast<std::size_t>(s.states()) * static_cast<std::size_t>(t.states()) + 1) * maxlen;

  // lag: output emitted by one side not yet matched by the other.
  struct Cfg {
    int s, t;
    int side;  // +1 = s ahead, -1 = t ahead, 0 = balanced
    std::string lag;
    std::string input;
  };
  auto settle = [&](int s2, int t2, std::string os, std::string ot,
                    std::string input) -> std::optional<Cfg> {
    std::size_t m = std::min(os.size(), ot.size());
    for (std::size_t k = 0; k < m; ++k)
      if (os[k] != ot[k]) return std::nullopt;  // committed mismatch
    if (os.size() >= ot.size())
      return Cfg{s2, t2, os.size() == ot.size() ? 0 : 1, os.substr(m), std::move(input)};
    return Cfg{s2, t2, -1, ot.substr(m), std::move(input)};
  };

  std::deque<Cfg> queue;
  std::unordered_set<std::string> visited;
  auto push = [&](std::optional<Cfg> c) {
    if (!c) return false;
    std::string k = std::to_string(c->s) + ":" + std::to_string(c->t) + ":" +
                    std::to_string(c->side) + ":" + c->lag;
    if (visited.insert(k).second) queue.push_back(std::move(*c));
    return true;
  };

  auto start = settle(s.start(), t.start(), s.initial_output(), t.initial_output(), "");
  if (!start) {
    // initial outputs already disagree; any point witnesses it
    RationalPoint x("", "0");
    if (auto w = validated(x)) return {false, *w};
    return {false, search_witness("")};
  }
  if (start->lag.size() > bound) return {false, search_witness("")};
  push(std::move(start));

  while (!queue.empty()) {
    Cfg c = std::move(queue.front());
    queue.pop_front();
    for (int b = 0; b < 2; ++b) {
      const auto& es = s.edge(c.s, b);
      const auto& et = t.edge(c.t, b);
      std::string os = (c.side >= 0 ? c.lag : "") + es.out;
      std::string ot = (c.side <= 0 ? c.lag : "") + et.out;
      std::string input = c.input + static_cast<char>('0' + b);
      auto next = settle(es.next, et.next, std::move(os), std::move(ot), input);
      if (!next) {
        RationalPoint x(input, "0");
        if (auto w = validated(x)) return {false, *w};
        return {false, search_witness(input)};
      }
      if (next->lag.size() > bound) return {false, search_witness(input)};
      push(std::move(next));
    }
  }
  return {true, std::nullopt};
}

std::vector<GenSym> local_action_word(int n, const Tree& t, int leaf_idx) {
  if (n < 3) throw DomainError("n must be >= 3");
  if (leaf_idx < 0 || leaf_idx >= t.leaves())
    throw DomainError("local_action: leaf index out of range");
  std::vector<GenSym> word;
  const Tree* cur = &t;
  int i = leaf_idx;
  while (!cur->is_leaf()) {
    bool right = i >= cur->left().leaves();
    if (cur->colour() == Colour::a)
      word.push_back(right ? GenSym::A1 : GenSym::A0);
    else
      word.push_back(right ? GenSym::B1 : GenSym::B0);
    if (right) i -= cur->left().leaves();
    cur = right ? &cur->right() : &cur->left();
  }
  return word;
}

Transducer local_action(int n, const Tree& t, int leaf_idx) {
  std::vector<GenSym> word = local_action_word(n, t, leaf_idx);
  Transducer m = Transducer::identity_copy();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    m = compose_transducers(m, generator_transducer(n, *it));
  return m;
}

PartitionTable::PartitionTable(int n_) : n(n_) {
  if (n < 3) throw DomainError("n must be >= 3");
  ell = leaf_addresses(tau(n, Colour::a));
}

Address PartitionTable::mu(int i) const {
  if (i < 1) throw DomainError("mu index must be >= 1");
  int m = (i - 1) / n;
  int j = (i - 1) % n;  // 0-based: ell[j] = address of leaf j+1
  std::string out;
  for (int k = 0; k < m; ++k) out += "11";
  return out + ell[static_cast<std::size_t>(j)];
}

std::optional<RationalPoint> generator_preimage(int n, GenSym sym, const RationalPoint& x) {
  switch (sym) {
    case GenSym::A0:
      if (x.bit(0) != '0') return std::nullopt;
      return drop_prefix(x, 1);
    case GenSym::A1:
      if (x.bit(0) != '1') return std::nullopt;
      return drop_prefix(x, 1);
    case GenSym::B0: {
      std::string zeros(static_cast<std::size_t>(n - 1), '0');
      if (!starts_with(x, zeros)) return std::nullopt;
      return drop_prefix(x, static_cast<std::size_t>(n - 1));
    }
    case GenSym::B1:
      break;
  }
  if (x.is_ones()) return x;
  PartitionTable table(n);
  // parse x = 1^{2m} ell_j rest, the unique mu decomposition
  std::size_t consumed = 0;
  int m = 0;
  RationalPoint r = x;
  while (starts_with(r, "11")) {
    r = drop_prefix(r, 2);
    consumed += 2;
    ++m;
  }
  int j;
  if (r.bit(0) == '1') {
    // must be ell_n = "10"
    j = n;
    consumed += 2;
  } else {
    std::size_t z0 = 0;
    while (z0 < static_cast<std::size_t>(n - 1) && r.bit(z0) == '0') ++z0;
    if (z0 == static_cast<std::size_t>(n - 1)) {
      j = 1;
      consumed += z0;
    } else {
      // 0^{z0} then a 1: ell_j with n - j = z0
      j = n - static_cast<int>(z0);
      consumed += z0 + 1;
    }
  }
  int i = m * n + j;
  if (i == 1) return std::nullopt;  // mu_1 cone is outside the image
  RationalPoint rest = drop_prefix(x, consumed);
  return prepend(table.mu(i - 1), rest);
}

}  // namespace fsg
