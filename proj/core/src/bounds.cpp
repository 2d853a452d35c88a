#include "knotguts/bounds.hpp"

#include "knotguts/error.hpp"
#include "knotguts/polyhedra.hpp"
#include "knotguts/states.hpp"

#include <algorithm>

namespace knotguts {

namespace {

long long abs_ll(const BigInt& v) { return static_cast<long long>(v < 0 ? BigInt(-v) : v); }

}  // namespace

std::vector<std::string> nonhyperbolic_flags(const LinkDiagram& d) {
  std::vector<std::string> flags;
  if (d.crossing_count() == 0) {
    flags.push_back("crossingless diagram: unknot");
    return flags;
  }
  if (twist_regions(d).twist_number <= 1) flags.push_back("single twist region: (2,q) torus pattern");
  if (!primeness(d).is_prime) flags.push_back("diagram is composite");
  return flags;
}

std::vector<std::string> nonhyperbolic_flags(const BraidWord& word) {
  std::vector<std::string> flags;
  if (word.strands <= 2) flags.push_back("two-strand braid closure: torus link");
  const auto merged = merge_letters(word);
  if (word.strands > 2 && !merged.letters.empty() && merged.letters.size() % (word.strands - 1) == 0) {
    bool torus = true;
    for (std::size_t i = 0; i < merged.letters.size(); ++i) {
      const auto& l = merged.letters[i];
      if (l.exponent != 1 || l.generator != static_cast<int>(i % (word.strands - 1)) + 1) torus = false;
    }
    if (torus) flags.push_back("power of s1 s2 ... s(n-1): torus link");
  }
  return flags;
}

VolumeBounds general_bounds(const LinkDiagram& d, const BracketOptions& opts) {
  (void)opts;
  auto prime = primeness(d);
  if (!prime.is_prime) throw Error(ErrorCode::NotPrimeDiagram, "diagram is not prime");
  auto guts = guts_interval(d);
  auto twist = twist_regions(d);
  VolumeBounds out;
  out.lower = kV8 * static_cast<double>(guts.lo);
  out.methods.push_back("guts lower bound (" + guts_tag_name(guts.tag) + ")");
  out.assumptions.push_back("K hyperbolic");
  if (twist.twist_reduced && twist.twist_number >= 2) {
    out.upper = 10.0 * kV3 * (twist.twist_number - 1);
    out.methods.push_back("twist number upper bound 10 v3 (t - 1)");
    out.assumptions.push_back("twist-reduced diagram");
  }
  out.flags = nonhyperbolic_flags(d);
  return out;
}

VolumeBounds positive_braid_bounds(const BraidWord& word, const BracketOptions& opts) {
  const auto merged = merge_letters(word);
  if (!is_positive(merged)) throw Error(ErrorCode::NotPositiveBraid, "braid word has a negative letter");
  auto d = LinkDiagram::from_braid(merged);
  auto twist = twist_regions(d);
  for (const auto& region : twist.regions)
    if (region.size() < 3)
      throw Error(ErrorCode::ExponentTooSmall, "twist region with " + std::to_string(region.size()) +
                                                   " crossings; every region needs at least 3");
  if (!primeness(d).is_prime) throw Error(ErrorCode::NotPrimeDiagram, "braid closure diagram is not prime");
  const int t = twist.twist_number;
  VolumeBounds out;
  out.lower = 2.0 * kV8 / 3.0 * t;
  out.upper = 10.0 * kV3 * (t - 1);
  out.methods.push_back("positive braid twist bound");
  out.assumptions.push_back("K hyperbolic");
  out.flags = nonhyperbolic_flags(merged);
  for (const auto& f : nonhyperbolic_flags(d))
    if (std::find(out.flags.begin(), out.flags.end(), f) == out.flags.end()) out.flags.push_back(f);

  auto g = state_graph(resolve(d, all_a(d)));
  auto reduced = reduce(g);
  if (reduced.edges.size() != g.edges.size()) out.notes.push_back("all-A state graph has parallel edges");
  const long long chi = euler_data(g, reduced).chi_reduced;
  if (3 * chi > -2 * t) out.notes.push_back("chi(G'_A) exceeds -2t/3");

  long long beta_prime = 1 - chi;
  std::string source = "state-graph";
  if (d.crossing_count() <= opts.crossing_cap) {
    beta_prime = abs_ll(jones_report(jones_polynomial(d, opts)).beta_prime);
    source = "jones";
  }
  out.jones_form = JonesVolumeForm{kV8 * static_cast<double>(beta_prime - 1),
                                   15.0 * kV3 * static_cast<double>(beta_prime - 1) - 10.0 * kV3, true, source};
  return out;
}

VolumeBounds montesinos_bounds(const MontesinosNormalForm& n, const BracketOptions& opts) {
  if (n.positive_count < 3 || n.negative_count < 3)
    throw Error(ErrorCode::HypothesisNotMet, "needs at least three positive and three negative tangles (r=" +
                                                 std::to_string(n.positive_count) +
                                                 ", s=" + std::to_string(n.negative_count) + ")");
  auto rep = montesinos_report(n);
  const int t = rep.twist_number;
  VolumeBounds out;
  out.lower = std::max(kV8 / 4.0 * (t - rep.components), kV8 / 2.0 * (t - rep.half_count));
  out.upper = 2.0 * kV8 * t;
  out.methods.push_back("Montesinos guts lower bound");
  out.methods.push_back("Montesinos twist upper bound 2 v8 t");
  out.assumptions.push_back("reduced Montesinos diagram");

  auto md = build_diagram(n);
  long long beta_prime = 1 - rep.chi_reduced_a;
  long long beta = 1 - rep.chi_reduced_b;
  std::string source = "state-graph";
  if (md.diagram.crossing_count() <= opts.crossing_cap) {
    auto jr = jones_report(jones_polynomial(md.diagram, opts));
    beta_prime = abs_ll(jr.beta_prime);
    beta = abs_ll(jr.beta);
    source = "jones";
  }
  out.jones_form = JonesVolumeForm{kV8 * static_cast<double>(std::max(beta, beta_prime) - 1),
                                   4.0 * kV8 * static_cast<double>(beta + beta_prime - 2) + 2.0 * kV8 * rep.components,
                                   true, source};

  // Alternating-sign pretzel families (1/m, -1/m, ...) approach the upper bound.
  bool pretzel_pairs = n.slopes.size() % 2 == 0;
  for (std::size_t i = 0; pretzel_pairs && i < n.slopes.size(); ++i) {
    const Rational& q = n.slopes[i];
    if (numerator(q) != 1 && numerator(q) != -1) pretzel_pairs = false;
    if (q != -n.slopes[(i + 1) % n.slopes.size()]) pretzel_pairs = false;
  }
  if (pretzel_pairs) out.notes.push_back("alternating pretzel family: upper bound is asymptotically sharp");
  return out;
}

}  // namespace knotguts
