#pragma once

#include "knotguts/diagram.hpp"
#include "knotguts/jones.hpp"
#include "knotguts/montesinos.hpp"
#include "knotguts/notation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotguts {

// Volume of the regular ideal tetrahedron and of the regular ideal octahedron.
inline constexpr double kV3 = 1.01494160640965362502;
inline constexpr double kV8 = 3.66386237670887606022;

struct JonesVolumeForm {
  double lower = 0;
  double upper = 0;
  bool upper_strict = true;
  std::string source;  // "jones" or "state-graph"
};

struct VolumeBounds {
  double lower = 0;
  std::optional<double> upper;
  bool upper_strict = true;
  std::vector<std::string> methods;
  std::vector<std::string> assumptions;
  std::vector<std::string> flags;  // reasons to doubt the hyperbolicity assumption
  std::vector<std::string> notes;
  std::optional<JonesVolumeForm> jones_form;
};

// Diagram-level signs that the link is not hyperbolic.
std::vector<std::string> nonhyperbolic_flags(const LinkDiagram& d);
std::vector<std::string> nonhyperbolic_flags(const BraidWord& word);

// Lower bound v8 times the guts lower bound; upper bound 10 v3 (t - 1) for twist-reduced
// diagrams with t >= 2. Requires a prime A-adequate diagram.
VolumeBounds general_bounds(const LinkDiagram& d, const BracketOptions& opts = {});

// Positive braids whose twist regions all have at least three crossings and whose
// closure is prime: (2 v8 / 3) t <= vol < 10 v3 (t - 1).
VolumeBounds positive_braid_bounds(const BraidWord& word, const BracketOptions& opts = {});

// Reduced Montesinos links with at least three positive and three negative tangles:
// max(v8/4 (t - #K), v8/2 (t - Q)) <= vol < 2 v8 t.
VolumeBounds montesinos_bounds(const MontesinosNormalForm& n, const BracketOptions& opts = {});

}  // namespace knotguts
