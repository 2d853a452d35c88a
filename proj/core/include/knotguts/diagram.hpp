#pragma once

#include "knotguts/notation.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace knotguts {

// Half-edge h = 4 * crossing + slot. Slots run counterclockwise; slot 0 is the
// incoming under-strand, so slots 0 and 2 carry the under-strand and 1 and 3 the
// over-strand.
inline int half_edge(int crossing, int slot) { return 4 * crossing + slot; }
inline int crossing_of(int h) { return h >> 2; }
inline int slot_of(int h) { return h & 3; }

enum class Smoothing : unsigned char { A, B };

// Slot joined to `slot` inside a crossing by the given smoothing. The A-smoothing
// joins slots {0,1} and {2,3}; the B-smoothing joins {1,2} and {3,0}.
inline int smoothing_mate(int slot, Smoothing s) {
  if (s == Smoothing::A) return slot ^ 1;
  return (slot == 0) ? 3 : (slot == 3) ? 0 : (slot == 1 ? 2 : 1);
}

class LinkDiagram {
 public:
  LinkDiagram();  // the 0-crossing unknot

  static LinkDiagram unknot() { return LinkDiagram(); }
  static LinkDiagram from_pd(const PDCode& pd);
  static LinkDiagram from_braid(const BraidWord& word);

  // partner: fixed-point-free involution on the 4c half-edges.
  // under02[x]: the strand through slots 0 and 2 of x passes under.
  // incoming: optional orientation hint per half-edge (1 incoming, 0 outgoing, -1 none).
  static LinkDiagram from_planar_map(const std::vector<int>& partner, const std::vector<bool>& under02,
                                     const std::vector<int>& incoming = {});

  int crossing_count() const { return static_cast<int>(over_in_.size()); }
  int arc_count() const { return 2 * crossing_count(); }
  int partner(int h) const { return partner_[h]; }
  const std::vector<int>& partners() const { return partner_; }

  // Standard sign: +1 when the over-strand runs from slot 3 to slot 1.
  int sign(int x) const { return over_in_[x] == 3 ? 1 : -1; }
  int writhe() const;
  bool is_incoming(int h) const;

  int component_count() const { return components_; }
  int component_of(int h) const { return component_of_[h]; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  // Face containing the corner between slots k and k+1 of crossing x.
  int face_of_corner(int x, int k) const { return face_of_dart_[half_edge(x, k)]; }
  // Each face as its cyclic list of darts; dart h leaves crossing_of(h) with the face on its left.
  const std::vector<std::vector<int>>& faces() const { return faces_; }

  PDCode to_pd() const;

 private:
  std::vector<int> partner_;
  std::vector<int> over_in_;  // 1 or 3 per crossing
  std::vector<int> component_of_;
  std::vector<int> face_of_dart_;
  std::vector<std::vector<int>> faces_;
  int components_ = 1;

  friend class PlanarBuilder;
  static LinkDiagram build(const std::vector<int>& partner, const std::vector<bool>& under02,
                           const std::vector<int>& strong, const std::vector<int>& weak, bool strict);
};

struct TwistRegions {
  std::vector<std::vector<int>> regions;  // maximal bigon chains, sorted
  std::vector<int> region_of;             // crossing -> region index
  std::vector<std::vector<int>> equivalence_classes;  // twist-equivalence classes
  int twist_number = 0;
  bool twist_reduced = true;
};

TwistRegions twist_regions(const LinkDiagram& d);

// A simple closed curve meeting the diagram in two arcs and separating crossings.
struct TwoEdgeCut {
  int arc1 = -1;  // identified by a half-edge on side `true`
  int arc2 = -1;
  std::vector<bool> side;  // per crossing
};

std::optional<TwoEdgeCut> find_essential_cut(const LinkDiagram& d);

struct PrimeReport {
  bool is_prime = true;
  bool has_nugatory = false;
  std::vector<int> nugatory_crossings;
};

PrimeReport primeness(const LinkDiagram& d);

struct SplitResult {
  LinkDiagram first;   // crossings on side `true`
  LinkDiagram second;
  std::vector<int> first_crossings;  // new index -> old index
  std::vector<int> second_crossings;
};

SplitResult split_along(const LinkDiagram& d, const TwoEdgeCut& cut);

LinkDiagram mirror(const LinkDiagram& d);

// Blackboard-framed n-parallel; every crossing becomes an n x n grid.
LinkDiagram cable(const LinkDiagram& d, int n);

// Replace crossing x by its smoothing; remaining crossings keep their relative order.
LinkDiagram smooth_crossing(const LinkDiagram& d, int x, Smoothing s);

// Wires crossings and crossing-free pass-through points into a diagram.
class PlanarBuilder {
 public:
  int add_crossing(bool under02 = true);
  int port(int crossing, int slot) const { return crossing_nodes_[crossing] + slot; }
  int add_terminal();
  void connect(int a, int b);
  void hint_incoming(int node, bool incoming);
  int crossing_count() const { return static_cast<int>(crossing_nodes_.size()); }

  LinkDiagram build() const;

 private:
  struct Node {
    int crossing = -1;
    int slot = 0;
    std::vector<int> wires;
  };
  std::vector<Node> nodes_;
  std::vector<int> crossing_nodes_;
  std::vector<bool> under02_;
  std::vector<std::pair<int, bool>> hints_;
};

}  // namespace knotguts
