#pragma once

#include "knotguts/diagram.hpp"
#include "knotguts/numeric.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace knotguts {

using State = std::vector<Smoothing>;

State all_a(const LinkDiagram& d);
State all_b(const LinkDiagram& d);

// The state circles s_sigma together with one segment per crossing (the graph H_sigma).
// Complementary regions of the circles are computed by merging diagram faces through
// the corners that each smoothing joins.
struct StateResolution {
  State state;
  int circle_count = 0;
  std::vector<int> circle_of;                  // half-edge -> circle
  std::vector<std::array<int, 2>> segment_ends;  // crossing -> circles at slots 0 and 2
  int region_count = 0;
  std::vector<int> region_of_face;
  std::vector<int> segment_region;                // crossing -> region holding its segment
  std::vector<std::array<int, 2>> circle_regions;  // circle -> regions on its two sides
  std::vector<std::vector<int>> circle_darts;      // circle -> traversal darts
};

StateResolution resolve(const LinkDiagram& d, const State& state);

struct GraphEdge {
  int u = 0;
  int v = 0;
  int crossing = -1;
};

struct StateGraph {
  int vertex_count = 0;
  std::vector<GraphEdge> edges;
};

struct ReducedEdge {
  int u = 0;
  int v = 0;
  std::vector<int> crossings;  // the parallel class
};

struct ReducedStateGraph {
  int vertex_count = 0;
  std::vector<ReducedEdge> edges;
};

StateGraph state_graph(const StateResolution& h);
ReducedStateGraph reduce(const StateGraph& g);

// No edge of the state graph is a loop.
bool is_adequate(const StateGraph& g);

struct Homogeneity {
  bool homogeneous = true;
  std::vector<int> mixed_regions;
};

Homogeneity homogeneity(const StateResolution& h);

struct EulerData {
  int vertices = 0;
  int edges = 0;
  int reduced_edges = 0;
  long long chi = 0;
  long long chi_reduced = 0;
  long long chi_minus = 0;  // sum over components of max(0, -chi) in the reduced graph
  long long chi_plus = 0;
  int bridges = 0;          // cut edges of the reduced graph
};

EulerData euler_data(const StateGraph& g, const ReducedStateGraph& reduced);

bool is_bipartite(const StateGraph& g);
bool is_tree(const ReducedStateGraph& g);

struct FiberReport {
  bool is_fiber = false;
  bool orientable = false;
  std::optional<Rational> genus;  // knots with a fibered state surface only
};

// Requires the state to be adequate and homogeneous.
FiberReport fiber_report(const LinkDiagram& d, const State& state);

// Requires the state to be homogeneous; reports whether the state surface is essential.
bool essential_state_surface(const LinkDiagram& d, const State& state);

int turaev_genus(const LinkDiagram& d);

// DOT renderings; vertices are circles "c<i>", edge labels are crossing ids.
std::string to_dot(const StateResolution& h, const std::string& name);
std::string to_dot(const StateGraph& g, const std::string& name);
std::string to_dot(const ReducedStateGraph& g, const std::string& name);

}  // namespace knotguts
