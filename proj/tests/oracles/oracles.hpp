#pragma once

// Reference computations written independently of the library, used to check it.

#include "knotguts/diagram.hpp"
#include "knotguts/notation.hpp"
#include "knotguts/numeric.hpp"
#include "knotguts/polynomial.hpp"
#include "knotguts/states.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Poly = std::map<int, long long>;  // exponent of A -> coefficient

inline void trim(Poly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

// Kauffman bracket by skein recursion over the PD labels, memoized on the pairing
// of open arc ends. For X(a,b,c,d) the A-smoothing joins a-b and c-d, the B-smoothing
// b-c and d-a. Loops are counted as powers of delta and expanded at the end.
class SkeinBracket {
 public:
  explicit SkeinBracket(const knotguts::PDCode& pd) : pd_(pd) {}

  Poly evaluate() {
    if (pd_.crossings.empty()) return {{0, 1}};
    auto terms = go(0, {});
    // sum c A^a delta^(L-1), delta = -A^2 - A^-2
    Poly out;
    for (const auto& [key, c] : terms) {
      auto [a, loops] = key;
      Poly d{{a, c}};
      for (int k = 1; k < loops; ++k) {
        Poly next;
        for (const auto& [e, v] : d) {
          next[e + 2] -= v;
          next[e - 2] -= v;
        }
        d = std::move(next);
      }
      for (const auto& [e, v] : d) out[e] += v;
    }
    trim(out);
    return out;
  }

 private:
  using Matching = std::vector<std::pair<int, int>>;  // sorted (label, partner) pairs, both directions
  using Terms = std::map<std::pair<int, int>, long long>;  // (A exponent, loops) -> count

  const knotguts::PDCode& pd_;
  std::map<std::pair<std::size_t, Matching>, Terms> memo_;

  static int find(const Matching& m, int label) {
    for (const auto& [u, v] : m)
      if (u == label) return v;
    return -1;
  }

  static Matching join(Matching m, int u, int v, int& loops) {
    auto erase = [&m](int label) {
      m.erase(std::remove_if(m.begin(), m.end(), [label](const auto& p) { return p.first == label; }), m.end());
    };
    auto pair_up = [&m](int x, int y) {
      m.push_back({x, y});
      m.push_back({y, x});
    };
    if (u == v) {
      ++loops;  // both ends of one arc meet inside a single smoothing
      return m;
    }
    const int pu = find(m, u), pv = find(m, v);
    if (pu >= 0 && pv >= 0) {
      erase(u);
      erase(v);
      if (pu == v) {
        ++loops;
      } else {
        erase(pu);
        erase(pv);
        pair_up(pu, pv);
      }
    } else if (pu >= 0) {
      erase(u);
      erase(pu);
      pair_up(pu, v);
    } else if (pv >= 0) {
      erase(v);
      erase(pv);
      pair_up(pv, u);
    } else {
      pair_up(u, v);
    }
    std::sort(m.begin(), m.end());
    return m;
  }

  Terms go(std::size_t i, const Matching& m) {
    if (i == pd_.crossings.size()) return {{{0, 0}, 1}};
    auto key = std::make_pair(i, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto& x = pd_.crossings[i];
    Terms out;
    for (int s = 0; s < 2; ++s) {
      int loops = 0;
      Matching next = s == 0 ? join(join(m, x[0], x[1], loops), x[2], x[3], loops)
                             : join(join(m, x[1], x[2], loops), x[3], x[0], loops);
      for (const auto& [k, c] : go(i + 1, next)) out[{k.first + (s == 0 ? 1 : -1), k.second + loops}] += c;
    }
    memo_[key] = out;
    return out;
  }
};

inline Poly skein_bracket(const knotguts::PDCode& pd) { return SkeinBracket(pd).evaluate(); }

inline Poly to_poly(const knotguts::LaurentPolynomial& p) {
  Poly out;
  for (const auto& [e, c] : p.terms()) out[e] = static_cast<long long>(c);
  return out;
}

// Number of cycles of the permutation induced by a braid word.
inline int braid_components(const knotguts::BraidWord& w) {
  std::vector<int> perm(w.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& l : w.letters)
    if (std::abs(l.exponent) % 2 == 1) std::swap(perm[l.generator - 1], perm[l.generator]);
  std::vector<bool> seen(w.strands, false);
  int cycles = 0;
  for (int s = 0; s < w.strands; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
  }
  return cycles;
}

// Nested evaluation a0 + 1/(a1 + 1/(... + 1/an)).
inline knotguts::Rational nested(const std::vector<long long>& a) {
  knotguts::Rational v = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) v = knotguts::Rational(a[i]) + 1 / v;
  return v;
}

// Two state graphs whose edges carry the same crossing ids are isomorphic through a
// vertex bijection respecting every labeled edge iff their vertices have the same
// multiset of incident-label multisets.
inline bool labeled_isomorphic(const knotguts::StateGraph& g, const knotguts::StateGraph& h) {
  auto signature = [](const knotguts::StateGraph& x) {
    std::vector<std::vector<int>> inc(x.vertex_count);
    for (const auto& e : x.edges) {
      inc[e.u].push_back(e.crossing);
      inc[e.v].push_back(e.crossing);
    }
    for (auto& v : inc) std::sort(v.begin(), v.end());
    std::sort(inc.begin(), inc.end());
    return inc;
  };
  return g.vertex_count == h.vertex_count && signature(g) == signature(h);
}

// 4 * Catalan's constant from the alternating series sum (-1)^k / (2k+1)^2, summed
// in pairs from the small end; the remainder after N pairs is O(1/N^2).
inline double octahedron_volume_series(long long pairs = 20000000) {
  long double s = 0;
  for (long long k = pairs - 1; k >= 0; --k) {
    long double a = 4.0L * k + 1, b = 4.0L * k + 3;
    s += 1 / (a * a) - 1 / (b * b);
  }
  return static_cast<double>(4 * s);
}

// 3 * Lobachevsky(pi/3) = (3 sqrt(3) / 4) * sum over n of chi(n) / n^2 with chi of period 3.
inline double tetrahedron_volume_series(long long triples = 20000000) {
  long double s = 0;
  for (long long k = triples - 1; k >= 0; --k) {
    long double a = 3.0L * k + 1, b = 3.0L * k + 2;
    s += 1 / (a * a) - 1 / (b * b);
  }
  return static_cast<double>(3.0L * std::sqrt(3.0L) / 4.0L * s);
}

}  // namespace oracle
