#pragma once

#include "knotguts/diagram.hpp"
#include "knotguts/states.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotguts {

// A complementary region of the state circles that contains at least one segment,
// with the alternating diagram obtained by restoring crossings at its segments.
struct PolyhedralRegion {
  int region = -1;
  std::vector<int> circles;
  std::vector<int> segments;  // crossing ids
  LinkDiagram diagram;
};

std::vector<PolyhedralRegion> polyhedral_regions(const LinkDiagram& d, const StateResolution& h);

struct NonPrimeCensus {
  int arc_count = 0;         // maximal collection of non-prime arcs
  bool none_exist = true;
  int polyhedra = 0;         // prime pieces after cutting along the arcs
  std::vector<int> summands_per_region;
};

// Number of prime summands of a connected diagram (1 for prime diagrams).
int prime_summand_count(const LinkDiagram& d);

NonPrimeCensus nonprime_census(const std::vector<PolyhedralRegion>& regions);

struct TwoEdgeLoop {
  int first = -1;   // crossing ids of the two parallel edges
  int second = -1;
  bool same_twist_region = false;
};

std::vector<TwoEdgeLoop> two_edge_loops(const StateGraph& g, const TwistRegions& twist);

struct SpanningCounts {
  int bigons = 0;     // b_A
  int excess = 0;     // m_A = e_A - e'_A - b_A
  int spanning = 0;   // ||E_l|| = e_A - e'_A + n_sep
  std::vector<int> a_regions;  // twist-region indices resolved short by the state
};

// Requires an adequate state graph.
SpanningCounts spanning_counts(const StateGraph& g, const ReducedStateGraph& reduced, const TwistRegions& twist);

enum class GutsTag { Tree, Montesinos, OnlyBigonLoops, NoNonPrimeArcs, Generic };

std::string guts_tag_name(GutsTag tag);

struct GutsInterval {
  long long lo = 0;
  long long hi = 0;
  GutsTag tag = GutsTag::Generic;
  bool exact = false;
};

struct MontesinosHint {
  bool reduced_admissible = false;
  int positive_tangles = 0;
};

// Bounds on the negative Euler characteristic of the guts of the all-A state surface.
// Requires a connected A-adequate diagram.
GutsInterval guts_interval(const LinkDiagram& d, const std::optional<MontesinosHint>& hint = std::nullopt);

// Same on the B side, through the mirror image.
GutsInterval guts_interval_b(const LinkDiagram& d, const std::optional<MontesinosHint>& hint = std::nullopt);

}  // namespace knotguts
