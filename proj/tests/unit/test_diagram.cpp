#include "common.hpp"
#include "oracles.hpp"

#include "knotguts/diagram.hpp"
#include "knotguts/jones.hpp"

#include <random>

using namespace knotguts;
using fixtures::braid;
using fixtures::pd;

namespace {

BraidWord random_braid(std::mt19937_64& rng, int strands, int length) {
  BraidWord w;
  w.strands = strands;
  for (int g = 1; g < strands; ++g) w.letters.push_back({g, rng() % 2 ? 1 : -1});
  while (static_cast<int>(w.letters.size()) < length) {
    int g = 1 + static_cast<int>(rng() % (strands - 1));
    w.letters.push_back({g, rng() % 2 ? 1 : -1});
  }
  return w;
}

JonesPolynomial reversed(const JonesPolynomial& j) {
  LaurentPolynomial out;
  for (const auto& [hd, c] : j.half_degrees().terms()) out.add_term(-hd, c);
  return JonesPolynomial(out);
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("basic counts of small diagrams") {
  auto t = pd(fixtures::kTrefoilPd);
  CHECK(t.crossing_count() == 3);
  CHECK(t.writhe() == -3);
  CHECK(t.component_count() == 1);
  CHECK(t.face_count() == 5);
  auto f = pd(fixtures::kFigureEightPd);
  CHECK(f.writhe() == 0);
  CHECK(f.face_count() == 6);
  auto u = pd(fixtures::kUnlinkPd);
  CHECK(u.component_count() == 2);
  auto o = LinkDiagram::unknot();
  CHECK(o.crossing_count() == 0);
  CHECK(o.face_count() == 2);
}

TEST_CASE("sign convention on kinks") {
  CHECK(pd("X(1,2,2,1)").writhe() == -1);
  CHECK(pd("X(2,2,1,1)").writhe() == 1);
  CHECK(braid("B2: s1^3").writhe() == -3);
  CHECK(braid("B2: s1^-3").writhe() == 3);
}

TEST_CASE("input errors") {
  CHECK_ERROR_CODE(pd("X(1,3,2,4) X(2,4,1,3)"), NonPlanar);
  CHECK_ERROR_CODE(pd("X(1,2,2,1) X(3,4,4,3)"), Disconnected);
  CHECK_ERROR_CODE(braid("B3: s1^3"), Disconnected);
}

TEST_CASE("random braid closures: planarity, components, PD round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    const int strands = 2 + static_cast<int>(rng() % 4);
    auto w = random_braid(rng, strands, strands + static_cast<int>(rng() % 9));
    auto d = LinkDiagram::from_braid(w);
    CHECK(d.face_count() == d.crossing_count() + 2);
    CHECK(d.component_count() == oracle::braid_components(w));
    auto back = LinkDiagram::from_pd(d.to_pd());
    CHECK(back.crossing_count() == d.crossing_count());
    CHECK(back.writhe() == d.writhe());
    CHECK(back.component_count() == d.component_count());
    if (d.crossing_count() <= 12) CHECK(jones_polynomial(back) == jones_polynomial(d));
  }
}

TEST_CASE("twist regions") {
  CHECK(twist_regions(pd(fixtures::kTrefoilPd)).twist_number == 1);
  CHECK(twist_regions(pd(fixtures::kFigureEightPd)).twist_number == 2);
  auto b = twist_regions(braid("B3: s1^3 s2^3 s1^3 s2^3"));
  CHECK(b.twist_number == 4);
  CHECK(b.twist_reduced);
  for (const auto& r : b.regions) CHECK(r.size() == 3);
  CHECK(twist_regions(LinkDiagram::unknot()).twist_number == 0);
}

TEST_CASE("primeness and nugatory crossings") {
  auto kink = primeness(pd(fixtures::kKinkPd));
  CHECK(kink.has_nugatory);
  CHECK(kink.nugatory_crossings == std::vector<int>{0});
  CHECK(primeness(braid("B3: s1^3 s2^3 s1^3 s2^3")).is_prime);
  CHECK_FALSE(primeness(braid("B3: s1^3 s2^3 s1^3")).is_prime);
  CHECK_FALSE(primeness(braid("B3: s1^2 s2^-2")).is_prime);
  auto p = primeness(pd(fixtures::kFigureEightPd));
  CHECK(p.is_prime);
  CHECK_FALSE(p.has_nugatory);
}

TEST_CASE("mirror negates the writhe and inverts the Jones variable") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    auto d = LinkDiagram::from_braid(random_braid(rng, 3 + static_cast<int>(rng() % 2), 8));
    auto m = mirror(d);
    CHECK(m.writhe() == -d.writhe());
    CHECK(m.crossing_count() == d.crossing_count());
    CHECK(jones_polynomial(m) == reversed(jones_polynomial(d)));
  }
}

TEST_CASE("cables multiply crossings by n squared and components by n") {
  auto t = pd(fixtures::kTrefoilPd);
  for (int n : {2, 3}) {
    auto c = cable(t, n);
    CHECK(c.crossing_count() == 3 * n * n);
    CHECK(c.component_count() == n);
    CHECK(c.face_count() == c.crossing_count() + 2);
    CHECK(c.writhe() == n * n * t.writhe());
  }
  CHECK(cable(t, 1).crossing_count() == 3);
  CHECK_ERROR_CODE(cable(t, 0), InvalidArgument);
}

TEST_CASE("smoothing a crossing") {
  auto t = pd(fixtures::kTrefoilPd);
  auto a = smooth_crossing(t, 0, Smoothing::A);
  CHECK(a.crossing_count() == 2);
  CHECK(a.component_count() == 1);
  CHECK(jones_polynomial(a).half_degrees() == LaurentPolynomial::constant(1));
  auto b = smooth_crossing(t, 0, Smoothing::B);
  CHECK(b.component_count() == 2);
  CHECK(to_string(jones_polynomial(b)) == "-t^(-5/2) - t^(-1/2)");
  CHECK_ERROR_CODE(smooth_crossing(t, 3, Smoothing::A), InvalidArgument);
}

TEST_CASE("braid closures") {
  auto t = braid("B2: s1^3");
  CHECK(t.crossing_count() == 3);
  CHECK(t.component_count() == 1);
  CHECK(twist_regions(t).twist_number == 1);
  CHECK(braid("B2: s1^4").component_count() == 2);
  auto two = braid("B3: s1^3 s2^3");
  CHECK(two.crossing_count() == 6);
  CHECK(two.component_count() == 1);
  CHECK(twist_regions(two).twist_number == 2);
  // The closure of s1^3 s2^3 is a connected sum of two trefoils.
  auto p = primeness(two);
  CHECK_FALSE(p.is_prime);
  CHECK_FALSE(p.has_nugatory);
  auto q = primeness(t);
  CHECK(q.is_prime);
  CHECK_FALSE(q.has_nugatory);
  CHECK(LinkDiagram::unknot().component_count() == 1);
}

TEST_CASE("a slot swap in a five-crossing code breaks planarity") {
  auto code = braid("B2: s1^5").to_pd();
  CHECK(LinkDiagram::from_pd(code).face_count() == 7);
  std::swap(code.crossings[2][1], code.crossings[2][3]);
  CHECK_ERROR_CODE(LinkDiagram::from_pd(code), NonPlanar);
}

TEST_CASE("mirror is an involution and flips braid letters") {
  auto d = braid("B3: s1^3 s2^-2 s1 s2^-1");
  auto back = mirror(mirror(d));
  CHECK(back.partners() == d.partners());
  for (int x = 0; x < d.crossing_count(); ++x) CHECK(back.sign(x) == d.sign(x));
  auto m = mirror(braid("B2: s1^3"));
  auto neg = braid("B2: s1^-3");
  CHECK(m.writhe() == neg.writhe());
  CHECK(jones_polynomial(m) == jones_polynomial(neg));
  CHECK(twist_regions(mirror(d)).twist_number == twist_regions(d).twist_number);
  CHECK(mirror(d).component_count() == d.component_count());
}

}  // TEST_SUITE
