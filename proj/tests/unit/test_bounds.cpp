#include "common.hpp"
#include "oracles.hpp"

#include "knotguts/bounds.hpp"

#include <algorithm>
#include <cmath>

using namespace knotguts;
using fixtures::braid;

namespace {

bool has_flag(const std::vector<std::string>& flags, const std::string& needle) {
  return std::any_of(flags.begin(), flags.end(), [&](const std::string& f) { return f.find(needle) != std::string::npos; });
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("volume constants match their series") {
  CHECK(std::abs(kV8 - oracle::octahedron_volume_series(2000000)) < 1e-11);
  CHECK(std::abs(kV3 - oracle::tetrahedron_volume_series(2000000)) < 1e-11);
}

TEST_CASE("positive braid bounds") {
  auto b = positive_braid_bounds(parse_braid("B3: s1^3 s2^3 s1^3 s2^3"));
  CHECK(b.lower == doctest::Approx(2.0 * kV8 / 3.0 * 4).epsilon(1e-12));
  REQUIRE(b.upper);
  CHECK(*b.upper == doctest::Approx(10.0 * kV3 * 3).epsilon(1e-12));
  CHECK(b.lower <= *b.upper);
  REQUIRE(b.jones_form);
  CHECK(b.jones_form->source == "jones");
  CHECK(b.jones_form->lower == doctest::Approx(kV8 * 3).epsilon(1e-12));
}

TEST_CASE("positive braid hypotheses") {
  CHECK_ERROR_CODE(positive_braid_bounds(parse_braid("B3: s1^3 s2^-3 s1^3 s2^3")), NotPositiveBraid);
  CHECK_ERROR_CODE(positive_braid_bounds(parse_braid("B3: s1^2 s2^3 s1^3 s2^3")), ExponentTooSmall);
  CHECK_ERROR_CODE(positive_braid_bounds(parse_braid("B3: s1^3 s2^3 s1^3")), NotPrimeDiagram);
}

TEST_CASE("state-graph fallback above the crossing cap") {
  auto b = positive_braid_bounds(parse_braid("B3: s1^3 s2^3 s1^3 s2^3"), {11, 1});
  REQUIRE(b.jones_form);
  CHECK(b.jones_form->source == "state-graph");
  CHECK(b.jones_form->lower == doctest::Approx(kV8 * 3).epsilon(1e-12));
}

TEST_CASE("Montesinos bounds on the alternating pretzel") {
  auto n = normalize(parse_montesinos("M(1/3,-1/3,1/3,-1/3,1/3,-1/3)"));
  auto b = montesinos_bounds(n);
  CHECK(b.lower == doctest::Approx(3 * kV8).epsilon(1e-12));
  REQUIRE(b.upper);
  CHECK(*b.upper == doctest::Approx(12 * kV8).epsilon(1e-12));
  CHECK(has_flag(b.notes, "pretzel"));
  CHECK_ERROR_CODE(montesinos_bounds(normalize(parse_montesinos("M(-2/3,1/3,1/3,1/3)"))), HypothesisNotMet);
}

TEST_CASE("general bounds") {
  auto b = general_bounds(braid("B3: s1^3 s2^3 s1^3 s2^3"));
  CHECK(b.lower == doctest::Approx(3 * kV8).epsilon(1e-12));
  REQUIRE(b.upper);
  CHECK(*b.upper == doctest::Approx(30 * kV3).epsilon(1e-12));
  CHECK_ERROR_CODE(general_bounds(braid("B3: s1^3 s2^3 s1^3")), NotPrimeDiagram);
}

TEST_CASE("non-hyperbolicity flags") {
  CHECK(has_flag(nonhyperbolic_flags(parse_braid("B2: s1^5")), "torus"));
  CHECK(has_flag(nonhyperbolic_flags(parse_braid("B3: s1 s2 s1 s2 s1 s2")), "torus"));
  CHECK(nonhyperbolic_flags(parse_braid("B3: s1^3 s2^3 s1^3 s2^3")).empty());
  CHECK(has_flag(nonhyperbolic_flags(LinkDiagram::unknot()), "unknot"));
  CHECK(has_flag(nonhyperbolic_flags(braid("B3: s1^3 s2^3 s1^3")), "composite"));
}

TEST_CASE("general bounds on the figure eight and the trefoil") {
  auto f = general_bounds(fixtures::pd(fixtures::kFigureEightPd));
  CHECK(f.lower == 0);
  REQUIRE(f.upper);
  CHECK(*f.upper == doctest::Approx(10 * kV3).epsilon(1e-12));
  auto t = general_bounds(fixtures::pd(fixtures::kTrefoilPd));
  CHECK(t.lower == 0);
  CHECK_FALSE(t.upper);
  CHECK_FALSE(t.assumptions.empty());
  CHECK_FALSE(t.flags.empty());
}

TEST_CASE("degenerate and out-of-hypothesis inputs") {
  auto b = positive_braid_bounds(parse_braid("B2: s1^3"));
  CHECK(has_flag(b.flags, "torus"));
  CHECK_ERROR_CODE(montesinos_bounds(normalize(parse_montesinos("M(1/3,1/3,-1/3,-1/3,-1/3)"))), HypothesisNotMet);
}

TEST_CASE("constants carry the published five-digit prefixes") {
  CHECK(std::floor(kV8 * 1e4) == 36638);
  CHECK(std::floor(kV3 * 1e4) == 10149);
  CHECK(10 * kV3 * 3 / (2 * kV8) == doctest::Approx(4.155).epsilon(1e-3));
}

}  // TEST_SUITE
