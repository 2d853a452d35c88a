#include "knotguts/polyhedra.hpp"

#include "knotguts/error.hpp"

#include <algorithm>
#include <map>

namespace knotguts {

std::vector<PolyhedralRegion> polyhedral_regions(const LinkDiagram& d, const StateResolution& h) {
  const int c = d.crossing_count();
  std::vector<PolyhedralRegion> out;
  std::vector<std::vector<int>> segments(h.region_count);
  for (int x = 0; x < c; ++x) segments[h.segment_region[x]].push_back(x);
  for (int r = 0; r < h.region_count; ++r) {
    if (segments[r].empty()) continue;
    PolyhedralRegion region;
    region.region = r;
    region.segments = segments[r];
    for (int i = 0; i < h.circle_count; ++i)
      if (h.circle_regions[i][0] == r || h.circle_regions[i][1] == r) region.circles.push_back(i);

    const int m = static_cast<int>(region.segments.size());
    std::vector<int> index(c, -1);
    for (int i = 0; i < m; ++i) index[region.segments[i]] = i;
    std::vector<int> partner(4 * m);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < 4; ++k) {
        // Follow the state circle past attachments that lie on its other side.
        int g = d.partner(half_edge(region.segments[i], k));
        while (index[crossing_of(g)] < 0) {
          int y = crossing_of(g);
          g = d.partner(half_edge(y, smoothing_mate(slot_of(g), h.state[y])));
        }
        partner[half_edge(i, k)] = half_edge(index[crossing_of(g)], slot_of(g));
      }
    }
    region.diagram = LinkDiagram::from_planar_map(partner, std::vector<bool>(m, true));
    out.push_back(std::move(region));
  }
  return out;
}

int prime_summand_count(const LinkDiagram& d) {
  auto cut = find_essential_cut(d);
  if (!cut) return 1;
  auto parts = split_along(d, *cut);
  return prime_summand_count(parts.first) + prime_summand_count(parts.second);
}

NonPrimeCensus nonprime_census(const std::vector<PolyhedralRegion>& regions) {
  NonPrimeCensus out;
  for (const auto& r : regions) {
    int s = prime_summand_count(r.diagram);
    out.summands_per_region.push_back(s);
    out.arc_count += s - 1;
    out.polyhedra += s;
  }
  out.none_exist = out.arc_count == 0;
  return out;
}

std::vector<TwoEdgeLoop> two_edge_loops(const StateGraph& g, const TwistRegions& twist) {
  std::map<std::pair<int, int>, std::vector<int>> parallel;
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    parallel[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.crossing);
  }
  std::vector<TwoEdgeLoop> out;
  for (const auto& [ends, xs] : parallel)
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        out.push_back({xs[i], xs[j], twist.region_of[xs[i]] == twist.region_of[xs[j]]});
  return out;
}

SpanningCounts spanning_counts(const StateGraph& g, const ReducedStateGraph& reduced, const TwistRegions& twist) {
  if (!is_adequate(g)) throw Error(ErrorCode::NotAdequate, "state graph has a loop");
  std::vector<std::pair<int, int>> ends(g.edges.size());
  for (const auto& e : g.edges) ends[e.crossing] = {std::min(e.u, e.v), std::max(e.u, e.v)};
  SpanningCounts out;
  for (int r = 0; r < static_cast<int>(twist.regions.size()); ++r) {
    const auto& xs = twist.regions[r];
    if (xs.size() < 2) continue;
    bool parallel = std::all_of(xs.begin(), xs.end(), [&](int x) { return ends[x] == ends[xs[0]]; });
    if (!parallel) continue;
    out.a_regions.push_back(r);
    out.bigons += static_cast<int>(xs.size()) - 1;
  }
  auto ed = euler_data(g, reduced);
  const int redundant = ed.edges - ed.reduced_edges;
  out.excess = redundant - out.bigons;
  out.spanning = redundant + ed.bridges;
  return out;
}

std::string guts_tag_name(GutsTag tag) {
  switch (tag) {
    case GutsTag::Tree: return "Tree";
    case GutsTag::Montesinos: return "Montesinos";
    case GutsTag::OnlyBigonLoops: return "OnlyBigonLoops";
    case GutsTag::NoNonPrimeArcs: return "NoNonPrimeArcs";
    case GutsTag::Generic: return "Generic";
  }
  return "Generic";
}

GutsInterval guts_interval(const LinkDiagram& d, const std::optional<MontesinosHint>& hint) {
  auto h = resolve(d, all_a(d));
  auto g = state_graph(h);
  if (!is_adequate(g)) throw Error(ErrorCode::NotAdequate, "diagram is not A-adequate");
  auto reduced = reduce(g);
  const long long chi_minus = euler_data(g, reduced).chi_minus;
  if (is_tree(reduced)) return {0, 0, GutsTag::Tree, true};
  if (hint && hint->reduced_admissible && hint->positive_tangles >= 3)
    return {chi_minus, chi_minus, GutsTag::Montesinos, true};
  const bool prime = primeness(d).is_prime;
  if (prime) {
    auto twist = twist_regions(d);
    auto loops = two_edge_loops(g, twist);
    if (std::all_of(loops.begin(), loops.end(), [](const TwoEdgeLoop& l) { return l.same_twist_region; }))
      return {chi_minus, chi_minus, GutsTag::OnlyBigonLoops, true};
    if (nonprime_census(polyhedral_regions(d, h)).none_exist) {
      auto counts = spanning_counts(g, reduced, twist);
      long long lo = std::max(0LL, chi_minus - 8LL * counts.excess);
      return {lo, chi_minus, GutsTag::NoNonPrimeArcs, lo == chi_minus};
    }
  }
  return {0, chi_minus, GutsTag::Generic, false};
}

GutsInterval guts_interval_b(const LinkDiagram& d, const std::optional<MontesinosHint>& hint) {
  return guts_interval(mirror(d), hint);
}

}  // namespace knotguts
