#include "common.hpp"

#include "knotguts/montesinos.hpp"
#include "knotguts/polyhedra.hpp"
#include "knotguts/states.hpp"

#include <random>
#include <set>

using namespace knotguts;
using fixtures::braid;
using fixtures::pd;

namespace {

struct Probe {
  LinkDiagram d;
  StateResolution h;
  StateGraph g;
  ReducedStateGraph r;
  TwistRegions t;
};

Probe probe(const LinkDiagram& d) {
  Probe p{d, resolve(d, all_a(d)), {}, {}, twist_regions(d)};
  p.g = state_graph(p.h);
  p.r = reduce(p.g);
  return p;
}

LinkDiagram montesinos(const std::string& text) { return build_diagram(normalize(parse_montesinos(text))).diagram; }
MontesinosHint hint(const std::string& text) {
  auto n = normalize(parse_montesinos(text));
  return MontesinosHint{true, n.positive_count};
}

// -chi of the simple graph underlying G_A, counting distinct vertex pairs.
long long neg_chi_simple(const StateGraph& g) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : g.edges) pairs.insert(std::minmax(e.u, e.v));
  return static_cast<long long>(pairs.size()) - g.vertex_count;
}

}  // namespace

TEST_SUITE("polyhedra") {

TEST_CASE("guts of small diagrams") {
  auto t = guts_interval(pd(fixtures::kTrefoilPd));
  CHECK(t.lo == 0);
  CHECK(t.hi == 0);
  CHECK(t.exact);
  auto b = guts_interval(braid("B3: s1^3 s2^3 s1^3 s2^3"));
  CHECK(b.lo == 3);
  CHECK(b.hi == 3);
  CHECK(b.tag == GutsTag::OnlyBigonLoops);
  auto four = guts_interval(braid("B4: s1^3 s2^3 s3^3 s1^3 s2^3 s3^3"));
  CHECK(four.lo == 4);
  CHECK(four.exact);
  auto tree = guts_interval(braid("B2: s1^-5"));
  CHECK(tree.tag == GutsTag::Tree);
  CHECK(tree.hi == 0);
  CHECK_ERROR_CODE(guts_interval(pd(fixtures::kKinkPd)), NotAdequate);
}

TEST_CASE("exact guts equal -chi of the simple graph on bigon-only diagrams") {
  for (const char* w : {"B3: s1^3 s2^3 s1^3 s2^3", "B4: s1^3 s2^3 s3^3 s1^3 s2^3 s3^3", "B3: s1^4 s2^3 s1^5 s2^3",
                        "B3: s1^3 s2^5 s1^3 s2^4 s1^3 s2^3"}) {
    auto p = probe(braid(w));
    auto gi = guts_interval(p.d);
    REQUIRE(gi.exact);
    CHECK(gi.lo == std::max(0LL, neg_chi_simple(p.g)));
  }
}

TEST_CASE("the pretzel (3,-3,3,-3,3,-3)") {
  const std::string m = "M(1/3,-1/3,1/3,-1/3,1/3,-1/3)";
  auto p = probe(montesinos(m));
  CHECK(p.d.crossing_count() == 18);
  auto sc = spanning_counts(p.g, p.r, p.t);
  CHECK(sc.bigons == 6);
  CHECK(sc.excess == 0);
  CHECK(sc.a_regions.size() == 3);
  auto gi = guts_interval(p.d, hint(m));
  CHECK(gi.lo == 3);
  CHECK(gi.hi == 3);
  CHECK(gi.tag == GutsTag::Montesinos);
  auto loops = two_edge_loops(p.g, p.t);
  CHECK(loops.size() == 9);
  for (const auto& l : loops) CHECK(l.same_twist_region);
}

TEST_CASE("non-prime arcs in a grouped Montesinos diagram") {
  auto p = probe(montesinos("M(-1/3,-1/3,1/3,1/3,1/3)"));
  auto regions = polyhedral_regions(p.d, p.h);
  CHECK(regions.size() == 2);
  auto census = nonprime_census(regions);
  CHECK(census.arc_count == 1);
  CHECK_FALSE(census.none_exist);
  CHECK(census.polyhedra == 3);
  auto gi = guts_interval(p.d, hint("M(-1/3,-1/3,1/3,1/3,1/3)"));
  CHECK(gi.lo == 2);
  CHECK(gi.exact);
}

TEST_CASE("every segment lies in exactly one polyhedral region") {
  for (const char* m : {"M(2/5,2/3,3/7,-1/3,-2/5,-3/4)", "M(-2/3,1/3,1/3,1/3)", "M(3/5,1/2,1/3)"}) {
    auto p = probe(montesinos(m));
    std::vector<int> seen(p.d.crossing_count(), 0);
    for (const auto& r : polyhedral_regions(p.d, p.h))
      for (int x : r.segments) ++seen[x];
    for (int s : seen) CHECK(s == 1);
  }
}

TEST_CASE("spanning counts with a negative tangle") {
  auto p = probe(montesinos("M(-2/3,1/3,1/3,1/3)"));
  auto sc = spanning_counts(p.g, p.r, p.t);
  CHECK(sc.bigons == 7);
  CHECK(sc.excess == 1);
  CHECK(sc.spanning == 9);
  const int e = static_cast<int>(p.g.edges.size()), er = static_cast<int>(p.r.edges.size());
  CHECK(sc.excess == e - er - sc.bigons);
}

TEST_CASE("prime summands") {
  CHECK(prime_summand_count(braid("B3: s1^3 s2^3 s1^3")) == 2);
  CHECK(prime_summand_count(braid("B3: s1^3 s2^3 s1^3 s2^3")) == 1);
  CHECK(prime_summand_count(pd(fixtures::kFigureEightPd)) == 1);
}

TEST_CASE("Montesinos hint pins guts that are otherwise bracketed") {
  const std::string m = "M(2/5,2/3,3/7,-1/3,-2/5,-3/4)";
  auto d = montesinos(m);
  auto generic = guts_interval(d);
  CHECK_FALSE(generic.exact);
  CHECK(generic.lo <= 5);
  CHECK(generic.hi >= 5);
  auto pinned = guts_interval(d, hint(m));
  CHECK(pinned.exact);
  CHECK(pinned.lo == 5);
}

TEST_CASE("smoothing a crossing of an A-region keeps chi_minus and the guts") {
  auto p = probe(montesinos("M(1/3,-1/3,1/3,-1/3,1/3,-1/3)"));
  auto sc = spanning_counts(p.g, p.r, p.t);
  REQUIRE_FALSE(sc.a_regions.empty());
  const auto before = guts_interval(p.d);
  const auto chi_before = euler_data(p.g, p.r).chi_minus;
  const int x = p.t.regions[sc.a_regions.front()].front();
  auto q = probe(smooth_crossing(p.d, x, Smoothing::A));
  CHECK(euler_data(q.g, q.r).chi_minus == chi_before);
  auto after = guts_interval(q.d);
  CHECK(after.lo == before.lo);
  CHECK(after.hi == before.hi);
}

TEST_CASE("figure eight and trefoil regions") {
  auto f = probe(pd(fixtures::kFigureEightPd));
  auto regions = polyhedral_regions(f.d, f.h);
  CHECK(regions.size() == 1);
  auto census = nonprime_census(regions);
  CHECK(census.arc_count == 0);
  CHECK(census.none_exist);
  auto g = guts_interval(f.d);
  CHECK(g.exact);
  CHECK(g.lo == 0);
  auto t = probe(braid("B2: s1^3"));
  CHECK(nonprime_census(polyhedral_regions(t.d, t.h)).arc_count == 0);
  CHECK(two_edge_loops(t.g, t.t).empty());
  auto o = probe(LinkDiagram::unknot());
  CHECK(polyhedral_regions(o.d, o.h).empty());
}

TEST_CASE("Hopf link loops and counts") {
  auto p = probe(braid("B2: s1^2"));
  auto loops = two_edge_loops(p.g, p.t);
  REQUIRE(loops.size() == 1);
  CHECK(loops[0].same_twist_region);
  auto sc = spanning_counts(p.g, p.r, p.t);
  CHECK(p.g.edges.size() == 2);
  CHECK(p.r.edges.size() == 1);
  CHECK(sc.bigons == 1);
  CHECK(sc.excess == 0);
  auto t = probe(pd(fixtures::kTrefoilPd));
  auto st = spanning_counts(t.g, t.r, t.t);
  CHECK(st.excess == 0);
  CHECK(st.spanning == 0);
}

TEST_CASE("interval invariants on Montesinos diagrams") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 60; ++i) {
    MontesinosVector v;
    const int r = 2 + static_cast<int>(rng() % 3), s = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < r + s; ++k) {
      long long q = 2 + static_cast<long long>(rng() % 4);
      long long num = 1 + static_cast<long long>(rng() % (q - 1));
      v.slopes.emplace_back(k < r ? num : -num, q);
    }
    auto p = probe(build_diagram(normalize(v)).diagram);
    auto gi = guts_interval(p.d);
    CHECK(gi.lo <= gi.hi);
    CHECK(gi.hi == euler_data(p.g, p.r).chi_minus);
    if (gi.exact) CHECK(gi.lo == gi.hi);
  }
}

}  // TEST_SUITE
