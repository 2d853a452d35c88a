#include "knotguts/montesinos.hpp"

#include "knotguts/error.hpp"
#include "knotguts/states.hpp"

#include <algorithm>
#include <set>

namespace knotguts {

bool is_reduced(const std::vector<Rational>& slopes) {
  bool all_pos = std::all_of(slopes.begin(), slopes.end(), [](const Rational& q) { return q > 0; });
  bool all_neg = std::all_of(slopes.begin(), slopes.end(), [](const Rational& q) { return q < 0; });
  bool all_small = std::all_of(slopes.begin(), slopes.end(), [](const Rational& q) { return q > -1 && q < 1 && q != 0; });
  return all_pos || all_neg || all_small;
}

std::vector<Rational> dihedral_canonical(const std::vector<Rational>& v) {
  std::vector<Rational> best = v;
  const std::size_t n = v.size();
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      std::vector<Rational> cand(n);
      for (std::size_t i = 0; i < n; ++i) cand[i] = dir == 0 ? v[(i + shift) % n] : v[(shift + n - i) % n];
      if (cand < best) best = cand;
    }
  }
  return best;
}

namespace {

std::vector<Rational> negated(std::vector<Rational> v) {
  for (auto& q : v) q = -q;
  return v;
}

std::vector<Rational> fractions_of(const std::vector<Rational>& q) {
  std::vector<Rational> f(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) f[i] = q[i] - Rational(floor_of(q[i]));
  return f;
}

// All-positive reduced forms with fractional parts f and integer total n: the whole
// integer part sits on one tangle. Returns the dihedrally smallest.
std::vector<Rational> best_positive(const std::vector<Rational>& f, const BigInt& n) {
  std::vector<Rational> best;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto cand = f;
    cand[i] += Rational(n);
    cand = dihedral_canonical(cand);
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

// Mixed signs with every |q_i| < 1: exactly k tangles get slope f_i - 1. Every choice of
// k tangles is tried; very long vectors fall back to the first k positions of the
// smallest rotation.
std::vector<Rational> best_mixed(const std::vector<Rational>& f, long long k) {
  const std::size_t r = f.size();
  double combos = 1;
  for (long long j = 0; j < k; ++j) combos = combos * static_cast<double>(r - j) / static_cast<double>(j + 1);
  std::vector<Rational> best;
  if (combos > 20000) {
    best = dihedral_canonical(f);
    for (long long j = 0; j < k; ++j) best[j] -= 1;
    return dihedral_canonical(best);
  }
  std::vector<bool> pick(r, false);
  std::fill(pick.end() - k, pick.end(), true);
  do {
    auto cand = f;
    for (std::size_t i = 0; i < r; ++i)
      if (pick[i]) cand[i] -= 1;
    cand = dihedral_canonical(cand);
    if (best.empty() || cand < best) best = cand;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

std::vector<Rational> reduce_slopes(const std::vector<Rational>& q) {
  if (is_reduced(q)) return dihedral_canonical(q);
  const BigInt r = static_cast<long long>(q.size());
  BigInt total_floor = 0;
  for (const auto& x : q) total_floor += floor_of(x);
  const auto f = fractions_of(q);
  if (total_floor >= 0) return best_positive(f, total_floor);
  if (total_floor <= -r) return dihedral_canonical(negated(best_positive(fractions_of(negated(q)), -total_floor - r)));
  return best_mixed(f, static_cast<long long>(-total_floor));
}

std::vector<Rational> fractional_parts(const std::vector<Rational>& q) {
  std::vector<Rational> f(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) f[i] = q[i] - Rational(floor_of(q[i]));
  return dihedral_canonical(f);
}

}  // namespace

MontesinosNormalForm normalize(const MontesinosVector& m) {
  if (m.slopes.size() < 3) throw Error(ErrorCode::LengthTooSmall, "Montesinos vector needs at least 3 slopes");
  for (const auto& q : m.slopes)
    if (is_integer(q)) throw Error(ErrorCode::IntegerSlope, "integer slope " + to_string(q));
  MontesinosNormalForm n;
  n.slopes = reduce_slopes(m.slopes);
  for (const auto& q : n.slopes) {
    if (q > 0) ++n.positive_count;
    else ++n.negative_count;
    n.sum += q;
  }
  n.fractional_parts = fractional_parts(m.slopes);
  return n;
}

bool equivalent(const MontesinosVector& a, const MontesinosVector& b) {
  if (a.slopes.size() != b.slopes.size()) return false;
  Rational sa = 0, sb = 0;
  for (const auto& q : a.slopes) sa += q;
  for (const auto& q : b.slopes) sb += q;
  return sa == sb && fractional_parts(a.slopes) == fractional_parts(b.slopes);
}

namespace {

struct Ends {
  int nw, ne, se, sw;
};

Ends crossing_ends(PlanarBuilder& b, int x, bool positive) {
  // Positive crossings resolve by their A-smoothing into arcs NW-SW and NE-SE.
  if (positive) return {b.port(x, 0), b.port(x, 3), b.port(x, 2), b.port(x, 1)};
  return {b.port(x, 1), b.port(x, 0), b.port(x, 3), b.port(x, 2)};
}

}  // namespace

MontesinosDiagram build_diagram(const std::vector<Rational>& slopes) {
  if (slopes.empty()) throw Error(ErrorCode::LengthTooSmall, "no tangles");
  MontesinosDiagram out;
  out.slopes = slopes;
  PlanarBuilder b;
  std::vector<Ends> tangles;
  for (int t = 0; t < static_cast<int>(slopes.size()); ++t) {
    const Rational& q = slopes[t];
    if (q == 0) throw Error(ErrorCode::InvalidArgument, "slope 0 tangle");
    auto cf = continued_fraction(q);
    out.continued_fractions.push_back(cf);
    const bool positive = q > 0;
    const int last = static_cast<int>(cf.size()) - 1;
    Ends e{b.add_terminal(), b.add_terminal(), b.add_terminal(), b.add_terminal()};
    if (last % 2 == 0) {
      b.connect(e.nw, e.ne);
      b.connect(e.sw, e.se);
    } else {
      b.connect(e.nw, e.sw);
      b.connect(e.ne, e.se);
    }
    for (int j = last; j >= 0; --j) {
      const long long a = cf[j] < 0 ? -cf[j] : cf[j];
      if (a == 0) continue;
      const bool horizontal = j % 2 == 0;
      const int band = static_cast<int>(out.bands.size());
      out.bands.push_back({t, j, horizontal, static_cast<int>(a)});
      for (long long i = 0; i < a; ++i) {
        const int x = b.add_crossing();
        out.tangle_of.push_back(t);
        out.band_of.push_back(band);
        Ends c = crossing_ends(b, x, positive);
        if (!horizontal) {
          b.connect(e.nw, c.sw);
          b.connect(e.ne, c.se);
          e = {c.nw, c.ne, e.se, e.sw};
        } else if (positive) {
          b.connect(e.ne, c.nw);
          b.connect(e.se, c.sw);
          e = {e.nw, c.ne, c.se, e.sw};
        } else {
          b.connect(c.ne, e.nw);
          b.connect(c.se, e.sw);
          e = {c.nw, e.ne, e.se, c.sw};
        }
      }
    }
    tangles.push_back(e);
  }
  const int r = static_cast<int>(tangles.size());
  for (int t = 0; t < r; ++t) {
    const Ends& left = tangles[t];
    const Ends& right = tangles[(t + 1) % r];
    b.connect(left.ne, right.nw);
    b.connect(left.se, right.sw);
  }
  out.diagram = b.build();
  return out;
}

MontesinosDiagram build_diagram(const MontesinosNormalForm& n) { return build_diagram(n.slopes); }

MontesinosReport montesinos_report(const MontesinosNormalForm& n) {
  MontesinosReport rep;
  rep.normal_form = n;
  auto md = build_diagram(n);
  const LinkDiagram& d = md.diagram;
  rep.crossings = d.crossing_count();
  rep.bands = static_cast<int>(md.bands.size());
  rep.components = d.component_count();
  auto twist = twist_regions(d);
  rep.twist_number = twist.twist_number;
  for (const auto& q : n.slopes) {
    Rational a = q < 0 ? Rational(-q) : q;
    if (a >= Rational(1, 2) && a < 1) ++rep.half_count;
  }
  const int r = n.positive_count, s = n.negative_count;
  auto ga = state_graph(resolve(d, all_a(d)));
  auto gb = state_graph(resolve(d, all_b(d)));
  rep.a_adequate = is_adequate(ga);
  rep.b_adequate = is_adequate(gb);
  rep.chi_reduced_a = euler_data(ga, reduce(ga)).chi_reduced;
  rep.chi_reduced_b = euler_data(gb, reduce(gb)).chi_reduced;
  if (r > 0 && s > 0) {
    rep.predicted_a_adequate = r >= 2;
    rep.predicted_b_adequate = s >= 2;
  }
  if (rep.a_adequate) rep.guts_a = guts_interval(d, MontesinosHint{true, r});
  if (rep.b_adequate) rep.guts_b = guts_interval_b(d, MontesinosHint{true, s});
  rep.hyperbolic_sufficient = r >= 3 && s >= 3;
  if (rep.hyperbolic_sufficient) {
    const long long lhs = -rep.chi_reduced_a - rep.chi_reduced_b;
    rep.identity_holds = lhs == rep.twist_number - rep.half_count;
    rep.inequality_holds = 2 * lhs >= rep.twist_number - rep.components;
  }
  return rep;
}

LoopTaxonomy negative_loop_taxonomy(const MontesinosNormalForm& n) {
  if (n.positive_count == 0 || n.negative_count == 0)
    throw Error(ErrorCode::HypothesisNotMet, "loop taxonomy needs tangles of both signs (non-alternating diagram)");
  auto md = build_diagram(n);
  const LinkDiagram& d = md.diagram;
  auto g = state_graph(resolve(d, all_a(d)));
  if (!is_adequate(g)) throw Error(ErrorCode::NotAdequate, "diagram is not A-adequate");
  auto twist = twist_regions(d);
  LoopTaxonomy out;
  for (const auto& band : md.bands) {
    const bool positive = n.slopes[band.tangle] > 0;
    // Bands resolved short by the A-smoothing: vertical in positive tangles, horizontal in negative ones.
    if (band.crossings >= 2 && band.horizontal != positive) out.twist_loops_predicted = true;
  }
  for (int t = 0; t < static_cast<int>(n.slopes.size()); ++t)
    if (n.slopes[t] > -1 && n.slopes[t] <= Rational(-1, 2)) out.negative_tangles_predicted.push_back(t);
  out.two_positive_predicted = n.positive_count == 2;

  std::set<int> negative_found;
  for (const auto& loop : two_edge_loops(g, twist)) {
    const int ta = md.tangle_of[loop.first], tb = md.tangle_of[loop.second];
    const int ba = md.band_of[loop.first], bb = md.band_of[loop.second];
    const bool short_band = md.bands[ba].horizontal != (n.slopes[ta] > 0);
    if (ba == bb && short_band && loop.same_twist_region) {
      out.twist_loops_found = true;
    } else if (ta == tb && n.slopes[ta] < 0) {
      negative_found.insert(ta);
    } else if (ta != tb && n.slopes[ta] > 0 && n.slopes[tb] > 0) {
      out.two_positive_found = true;
    } else {
      ++out.unexplained;
    }
  }
  out.negative_tangles_found.assign(negative_found.begin(), negative_found.end());
  out.matches = out.unexplained == 0 && out.twist_loops_predicted == out.twist_loops_found &&
                out.negative_tangles_predicted == out.negative_tangles_found &&
                out.two_positive_predicted == out.two_positive_found;
  return out;
}

}  // namespace knotguts
