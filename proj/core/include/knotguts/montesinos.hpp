#pragma once

#include "knotguts/diagram.hpp"
#include "knotguts/notation.hpp"
#include "knotguts/polyhedra.hpp"

#include <optional>
#include <vector>

namespace knotguts {

struct MontesinosNormalForm {
  std::vector<Rational> slopes;  // reduced and in canonical dihedral position
  int positive_count = 0;        // r
  int negative_count = 0;        // s
  Rational sum;
  std::vector<Rational> fractional_parts;  // canonical dihedral image of q_i - floor(q_i)
};

// Either all slopes share a sign, or every slope lies strictly between -1 and 1.
bool is_reduced(const std::vector<Rational>& slopes);

// Lexicographically smallest rotation or reflection.
std::vector<Rational> dihedral_canonical(const std::vector<Rational>& v);

MontesinosNormalForm normalize(const MontesinosVector& m);

// Same link type: equal slope sums and dihedrally equal fractional parts.
bool equivalent(const MontesinosVector& a, const MontesinosVector& b);

struct TwistBand {
  int tangle = -1;
  int term = 0;          // index j in the continued fraction
  bool horizontal = false;
  int crossings = 0;
};

struct MontesinosDiagram {
  LinkDiagram diagram;
  std::vector<Rational> slopes;
  std::vector<std::vector<long long>> continued_fractions;
  std::vector<TwistBand> bands;
  std::vector<int> tangle_of;  // crossing -> tangle
  std::vector<int> band_of;    // crossing -> band
};

// Numerator closure of the tangle sum, tangles left to right, each tangle built from its
// constant-sign continued fraction with vertical bands on top and horizontal bands on the
// right (positive slope) or left (negative slope).
MontesinosDiagram build_diagram(const std::vector<Rational>& slopes);
MontesinosDiagram build_diagram(const MontesinosNormalForm& n);

struct MontesinosReport {
  MontesinosNormalForm normal_form;
  int crossings = 0;
  int twist_number = 0;
  int bands = 0;
  int components = 0;
  int half_count = 0;  // tangles with 1/2 <= |q| < 1
  bool a_adequate = false;
  bool b_adequate = false;
  std::optional<bool> predicted_a_adequate;  // from the tangle counts, when both signs occur
  std::optional<bool> predicted_b_adequate;
  std::optional<GutsInterval> guts_a;
  std::optional<GutsInterval> guts_b;
  long long chi_reduced_a = 0;
  long long chi_reduced_b = 0;
  bool hyperbolic_sufficient = false;  // r >= 3 and s >= 3
  std::optional<bool> identity_holds;   // -chi(G'_A) - chi(G'_B) = t - half_count
  std::optional<bool> inequality_holds; // -chi(G'_A) - chi(G'_B) >= (t - #K) / 2
};

MontesinosReport montesinos_report(const MontesinosNormalForm& n);

struct LoopTaxonomy {
  bool twist_loops_predicted = false;
  bool twist_loops_found = false;
  std::vector<int> negative_tangles_predicted;  // tangles with -1 < q <= -1/2
  std::vector<int> negative_tangles_found;
  bool two_positive_predicted = false;          // exactly two positive tangles
  bool two_positive_found = false;
  int unexplained = 0;
  bool matches = false;
};

// Classifies the 2-edge loops of G_A for a reduced admissible non-alternating diagram.
LoopTaxonomy negative_loop_taxonomy(const MontesinosNormalForm& n);

}  // namespace knotguts
