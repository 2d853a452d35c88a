#pragma once

#include "knotguts/diagram.hpp"
#include "knotguts/polynomial.hpp"

#include <string>
#include <string_view>

namespace knotguts {

struct BracketOptions {
  int crossing_cap = 18;
  int workers = 1;  // threads used by the state sum
};

// Kauffman bracket in the variable A, normalized so the crossingless circle is 1.
// Processes crossings one at a time, merging partial smoothings that induce the
// same pairing of the open arc ends.
LaurentPolynomial kauffman_bracket(const LinkDiagram& d, const BracketOptions& opts = {});

// Sum over all 2^c states; slow, used as a reference.
LaurentPolynomial state_sum_bracket(const LinkDiagram& d, const BracketOptions& opts = {});

// Jones polynomial stored in the variable t^(1/2); knots only use even exponents.
class JonesPolynomial {
 public:
  JonesPolynomial() = default;
  explicit JonesPolynomial(LaurentPolynomial half) : half_(std::move(half)) {}

  const LaurentPolynomial& half_degrees() const { return half_; }
  BigInt coeff_half(int half_degree) const { return half_.coeff(half_degree); }
  int min_half_degree() const { return half_.min_degree(); }
  int max_half_degree() const { return half_.max_degree(); }
  BigInt value_at_one() const { return half_.value_at_one(); }

  friend bool operator==(const JonesPolynomial& a, const JonesPolynomial& b) { return a.half_ == b.half_; }

 private:
  LaurentPolynomial half_;
};

// J = (-A)^(-3w) <D> with t = A^(-4).
JonesPolynomial jones_from_bracket(const LinkDiagram& d, const LaurentPolynomial& bracket);
JonesPolynomial jones_polynomial(const LinkDiagram& d, const BracketOptions& opts = {});

// Ascending degree with explicit signs, e.g. "t + t^3 - t^4", "-t^(1/2) - t^(5/2)".
std::string to_string(const JonesPolynomial& j);
// Degree label used in text and JSON: "3", "-2", "5/2".
std::string degree_label(int half_degree);

// Accepts the canonical form and common variants such as "2*t^(-4)-4*t^(-3)+ 6".
JonesPolynomial parse_jones(std::string_view text);

// J = alpha t^m + beta t^(m-1) + ... + beta' t^(r+1) + alpha' t^r.
struct JonesReport {
  JonesPolynomial polynomial;
  int max_half_degree = 0;
  int min_half_degree = 0;
  BigInt alpha, beta, alpha_prime, beta_prime;
  bool epsilon = false;        // beta == 0
  bool epsilon_prime = false;  // beta' == 0
  BigInt value_at_one;
};

JonesReport jones_report(const JonesPolynomial& j);

struct StableIdentity {
  bool holds = false;
  BigInt expected;  // 1 - chi of the reduced state graph
  BigInt observed;  // |beta'| (A side) or |beta| (B side)
  bool extreme_is_unit = false;
};

// |alpha'| = 1 and |beta'| = 1 - chi(G'_A); requires an A-adequate diagram.
StableIdentity stable_identity_a(const LinkDiagram& d, const JonesReport& r);
// |alpha| = 1 and |beta| = 1 - chi(G'_B); requires a B-adequate diagram.
StableIdentity stable_identity_b(const LinkDiagram& d, const JonesReport& r);

struct AdequacyObstruction {
  bool a_side_possible = true;  // |alpha'| == 1
  bool b_side_possible = true;  // |alpha| == 1
};

AdequacyObstruction adequacy_obstruction(const JonesReport& r);

}  // namespace knotguts
