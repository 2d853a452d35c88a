#include "knotguts/jones.hpp"

#include "knotguts/error.hpp"
#include "knotguts/states.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <thread>

namespace knotguts {

namespace {

LaurentPolynomial delta() {
  LaurentPolynomial p;
  p.add_term(2, -1);
  p.add_term(-2, -1);
  return p;
}

void check_cap(const LinkDiagram& d, const BracketOptions& opts) {
  if (d.crossing_count() > opts.crossing_cap)
    throw Error(ErrorCode::CrossingCapExceeded, "diagram has " + std::to_string(d.crossing_count()) +
                                                    " crossings; bracket cap is " + std::to_string(opts.crossing_cap));
}

// Greedy order keeping the set of open arc ends small.
std::vector<int> processing_order(const LinkDiagram& d) {
  const int c = d.crossing_count();
  std::vector<int> order;
  std::vector<bool> done(c, false);
  std::vector<int> links(c, 0);
  for (int step = 0; step < c; ++step) {
    int best = -1;
    for (int x = 0; x < c; ++x)
      if (!done[x] && (best < 0 || links[x] > links[best])) best = x;
    done[best] = true;
    order.push_back(best);
    for (int k = 0; k < 4; ++k) ++links[crossing_of(d.partner(half_edge(best, k)))];
  }
  return order;
}

}  // namespace

LaurentPolynomial kauffman_bracket(const LinkDiagram& d, const BracketOptions& opts) {
  check_cap(d, opts);
  const int c = d.crossing_count();
  if (c == 0) return LaurentPolynomial::constant(1);
  const LaurentPolynomial del = delta();
  std::vector<LaurentPolynomial> del_pow{LaurentPolynomial::constant(1)};
  auto power = [&](int k) -> const LaurentPolynomial& {
    while (static_cast<int>(del_pow.size()) <= k) del_pow.push_back(del_pow.back() * del);
    return del_pow[k];
  };

  std::vector<bool> processed(c, false);
  std::vector<int> frontier;  // sorted open half-edges of processed crossings
  // key[i] = index of the frontier end joined to frontier[i] through the processed part
  std::map<std::vector<int>, LaurentPolynomial> states;
  states.emplace(std::vector<int>{}, LaurentPolynomial::constant(1));

  for (int x : processing_order(d)) {
    std::vector<int> next_frontier;
    for (int h : frontier)
      if (crossing_of(d.partner(h)) != x) next_frontier.push_back(h);
    for (int k = 0; k < 4; ++k) {
      int p = d.partner(half_edge(x, k));
      if (!processed[crossing_of(p)] && crossing_of(p) != x) next_frontier.push_back(half_edge(x, k));
    }
    std::sort(next_frontier.begin(), next_frontier.end());

    const int f = static_cast<int>(frontier.size());
    const int nodes = f + 4;  // frontier ends, then the four slots of x
    auto node_of_half = [&](int h) -> int {
      if (crossing_of(h) == x) return f + slot_of(h);
      return static_cast<int>(std::lower_bound(frontier.begin(), frontier.end(), h) - frontier.begin());
    };
    std::vector<bool> open(nodes, false);
    std::vector<int> new_index(nodes, -1);
    for (int i = 0; i < static_cast<int>(next_frontier.size()); ++i) {
      int node = node_of_half(next_frontier[i]);
      open[node] = true;
      new_index[node] = i;
    }
    // Arc links fixed by the diagram.
    std::vector<std::pair<int, int>> arc_links;
    for (int k = 0; k < 4; ++k) {
      int h = half_edge(x, k), p = d.partner(h);
      if (crossing_of(p) == x) {
        if (h < p) arc_links.emplace_back(f + k, f + slot_of(p));
      } else if (processed[crossing_of(p)]) {
        arc_links.emplace_back(node_of_half(p), f + k);
      }
    }

    std::map<std::vector<int>, LaurentPolynomial> next_states;
    for (const auto& [key, weight] : states) {
      for (Smoothing s : {Smoothing::A, Smoothing::B}) {
        std::vector<std::pair<int, int>> links = arc_links;
        for (int i = 0; i < f; ++i)
          if (i < key[i]) links.emplace_back(i, key[i]);
        for (int k = 0; k < 4; ++k) {
          int m = smoothing_mate(k, s);
          if (k < m) links.emplace_back(f + k, f + m);
        }
        std::vector<std::array<int, 2>> incident(nodes, {-1, -1});
        for (int l = 0; l < static_cast<int>(links.size()); ++l) {
          for (int end : {links[l].first, links[l].second}) {
            auto& slot = incident[end];
            (slot[0] < 0 ? slot[0] : slot[1]) = l;
          }
        }
        std::vector<bool> used(links.size(), false);
        std::vector<int> next_key(next_frontier.size(), -1);
        auto walk = [&](int start, int link) {
          int cur = start;
          while (true) {
            used[link] = true;
            int nxt = links[link].first == cur ? links[link].second : links[link].first;
            if (open[nxt]) return nxt;
            int other = incident[nxt][0] == link ? incident[nxt][1] : incident[nxt][0];
            cur = nxt;
            link = other;
          }
        };
        for (int node = 0; node < nodes; ++node) {
          if (!open[node] || next_key[new_index[node]] >= 0) continue;
          int end = walk(node, incident[node][0]);
          next_key[new_index[node]] = new_index[end];
          next_key[new_index[end]] = new_index[node];
        }
        int loops = 0;
        for (int l = 0; l < static_cast<int>(links.size()); ++l) {
          if (used[l]) continue;
          ++loops;
          int start = links[l].first;
          int link = l;
          int cur = start;
          while (!used[link]) {
            used[link] = true;
            int nxt = links[link].first == cur ? links[link].second : links[link].first;
            link = incident[nxt][0] == link ? incident[nxt][1] : incident[nxt][0];
            cur = nxt;
          }
        }
        LaurentPolynomial term = weight.shifted(s == Smoothing::A ? 1 : -1);
        if (loops > 0) term = term * power(loops);
        next_states[next_key] += term;
      }
    }
    states.swap(next_states);
    frontier.swap(next_frontier);
    processed[x] = true;
  }
  // Every state circle contributed a factor delta; the normalization divides one out.
  return states.begin()->second.divided_by(del);
}

LaurentPolynomial state_sum_bracket(const LinkDiagram& d, const BracketOptions& opts) {
  check_cap(d, opts);
  const int c = d.crossing_count();
  if (c == 0) return LaurentPolynomial::constant(1);
  const int n = 4 * c;
  const std::uint64_t total = std::uint64_t{1} << c;
  const int workers = std::max(1, std::min<int>(opts.workers, 64));
  // tally[a][k]: states with a A-smoothings and k circles
  using Tally = std::vector<std::vector<std::int64_t>>;
  std::vector<Tally> tallies(workers, Tally(c + 1, std::vector<std::int64_t>(n + 1, 0)));

  auto run = [&](int w) {
    std::vector<int> parent(n);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (std::uint64_t mask = w; mask < total; mask += workers) {
      for (int i = 0; i < n; ++i) parent[i] = i;
      int sets = n;
      auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[a] = b;
          --sets;
        }
      };
      for (int h = 0; h < n; ++h)
        if (h < d.partner(h)) unite(h, d.partner(h));
      int a_count = 0;
      for (int x = 0; x < c; ++x) {
        bool b = (mask >> x) & 1;
        if (!b) ++a_count;
        if (!b) {
          unite(half_edge(x, 0), half_edge(x, 1));
          unite(half_edge(x, 2), half_edge(x, 3));
        } else {
          unite(half_edge(x, 1), half_edge(x, 2));
          unite(half_edge(x, 3), half_edge(x, 0));
        }
      }
      ++tallies[w][a_count][sets];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  const LaurentPolynomial del = delta();
  std::vector<LaurentPolynomial> del_pow{LaurentPolynomial::constant(1)};
  for (int k = 1; k <= n; ++k) del_pow.push_back(del_pow.back() * del);
  LaurentPolynomial out;
  for (int a = 0; a <= c; ++a) {
    for (int k = 1; k <= n; ++k) {
      std::int64_t count = 0;
      for (const auto& t : tallies) count += t[a][k];
      if (count == 0) continue;
      LaurentPolynomial term = del_pow[k - 1].shifted(a - (c - a));
      term *= BigInt(count);
      out += term;
    }
  }
  return out;
}

JonesPolynomial jones_from_bracket(const LinkDiagram& d, const LaurentPolynomial& bracket) {
  const int w = d.writhe();
  LaurentPolynomial half;
  for (const auto& [deg, coeff] : bracket.terms()) {
    const int a_degree = deg - 3 * w;
    if (a_degree % 2 != 0) throw std::logic_error("bracket degree parity mismatch");
    half.add_term(-a_degree / 2, (w % 2 == 0) ? coeff : BigInt(-coeff));
  }
  return JonesPolynomial(half);
}

JonesPolynomial jones_polynomial(const LinkDiagram& d, const BracketOptions& opts) {
  return jones_from_bracket(d, kauffman_bracket(d, opts));
}

std::string degree_label(int half_degree) {
  if (half_degree % 2 == 0) return std::to_string(half_degree / 2);
  return std::to_string(half_degree) + "/2";
}

std::string to_string(const JonesPolynomial& j) {
  const auto& terms = j.half_degrees().terms();
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [hd, c] : terms) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (hd == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "t";
    if (hd % 2 != 0) out += "^(" + degree_label(hd) + ")";
    else if (hd != 2) out += "^" + std::to_string(hd / 2);
  }
  return out;
}

JonesPolynomial parse_jones(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "empty polynomial");
  LaurentPolynomial half;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(i), i);
  };
  auto read_int = [&]() -> long long {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || !std::isdigit(static_cast<unsigned char>(s[i - 1]))) fail("expected integer");
    return std::stoll(s.substr(start, i - start));
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    BigInt coeff = 1;
    bool has_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      coeff = BigInt(s.substr(start, i - start));
      has_coeff = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    int hd = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      hd = 2;
      if (i < s.size() && s[i] == '^') {
        ++i;
        char close = 0;
        if (i < s.size() && (s[i] == '(' || s[i] == '{')) close = s[i++] == '(' ? ')' : '}';
        long long num = read_int();
        long long den = 1;
        if (i < s.size() && s[i] == '/') {
          ++i;
          den = read_int();
        }
        if (close) {
          if (i >= s.size() || s[i] != close) fail("unbalanced exponent");
          ++i;
        }
        if (den == 1) hd = static_cast<int>(2 * num);
        else if (den == 2) hd = static_cast<int>(num);
        else fail("exponent must be an integer or half-integer");
      }
    } else if (!has_coeff) {
      fail("expected term");
    }
    half.add_term(hd, sign * coeff);
  }
  return JonesPolynomial(half);
}

JonesReport jones_report(const JonesPolynomial& j) {
  if (j.half_degrees().is_zero()) throw Error(ErrorCode::InvalidArgument, "zero Jones polynomial");
  JonesReport r;
  r.polynomial = j;
  r.max_half_degree = j.max_half_degree();
  r.min_half_degree = j.min_half_degree();
  r.alpha = j.coeff_half(r.max_half_degree);
  r.beta = j.coeff_half(r.max_half_degree - 2);
  r.alpha_prime = j.coeff_half(r.min_half_degree);
  r.beta_prime = j.coeff_half(r.min_half_degree + 2);
  if (r.max_half_degree == r.min_half_degree) r.beta = r.beta_prime = 0;
  r.epsilon = r.beta == 0;
  r.epsilon_prime = r.beta_prime == 0;
  r.value_at_one = j.value_at_one();
  return r;
}

namespace {

StableIdentity identity_for(const LinkDiagram& d, const State& state, const BigInt& extreme, const BigInt& next,
                            const char* side) {
  auto h = resolve(d, state);
  auto g = state_graph(h);
  if (!is_adequate(g)) throw Error(ErrorCode::NotAdequate, std::string("diagram is not ") + side + "-adequate");
  auto ed = euler_data(g, reduce(g));
  StableIdentity out;
  out.expected = BigInt(1 - ed.chi_reduced);
  out.observed = next < 0 ? BigInt(-next) : next;
  out.extreme_is_unit = extreme == 1 || extreme == -1;
  out.holds = out.extreme_is_unit && out.expected == out.observed;
  return out;
}

}  // namespace

StableIdentity stable_identity_a(const LinkDiagram& d, const JonesReport& r) {
  return identity_for(d, all_a(d), r.alpha_prime, r.beta_prime, "A");
}

StableIdentity stable_identity_b(const LinkDiagram& d, const JonesReport& r) {
  return identity_for(d, all_b(d), r.alpha, r.beta, "B");
}

AdequacyObstruction adequacy_obstruction(const JonesReport& r) {
  AdequacyObstruction out;
  out.a_side_possible = r.alpha_prime == 1 || r.alpha_prime == -1;
  out.b_side_possible = r.alpha == 1 || r.alpha == -1;
  return out;
}

}  // namespace knotguts
