#pragma once

#include "knotguts/numeric.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace knotguts {

// Planar diagram code. Each crossing lists its four arc labels starting with the
// incoming under-strand and proceeding counterclockwise.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  friend bool operator==(const PDCode&, const PDCode&) = default;
};

// Accepts "X(1,4,2,5) X(3,6,4,1) ..." (square brackets also allowed).
PDCode parse_pd(std::string_view text);
std::string to_string(const PDCode& pd);

struct BraidLetter {
  int generator = 1;  // s_i crosses strands i and i+1
  int exponent = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Accepts "B3: s1^3 s2^-2 s1". Adjacent letters on the same generator are merged.
BraidWord parse_braid(std::string_view text);
BraidWord merge_letters(const BraidWord& word);
std::string to_string(const BraidWord& word);
bool is_positive(const BraidWord& word);
int crossing_count(const BraidWord& word);

struct MontesinosVector {
  std::vector<Rational> slopes;

  friend bool operator==(const MontesinosVector&, const MontesinosVector&) = default;
};

// Accepts "M(4/3, 1/2, 4/7, -1/3)". Requires at least three non-integer slopes.
MontesinosVector parse_montesinos(std::string_view text);
std::string to_string(const MontesinosVector& m);

// Rational number "p/q" or "p" with optional sign.
Rational parse_rational(std::string_view text);

// Constant-sign continued fraction q = a0 + 1/(a1 + 1/(a2 + ...)), all terms
// sharing the sign of q; e.g. 3/5 -> [0, 1, 1, 2].
std::vector<long long> continued_fraction(const Rational& q);
Rational evaluate_continued_fraction(const std::vector<long long>& terms);

}  // namespace knotguts
