#include <doctest.h>

#include "qwb/enumerate.hpp"
#include "qwb/fixtures.hpp"

using namespace qwb;

TEST_CASE("lattice counts up to isomorphism") {
  CHECK(enumerate_lattices(1).size() == 1);
  CHECK(enumerate_lattices(2).size() == 2);
  // sizes 1,2 plus the 3-chain
  CHECK(enumerate_lattices(3).size() == 3);
  // plus the 4-chain and the diamond
  CHECK(enumerate_lattices(4).size() == 5);
}

TEST_CASE("quantale counts") {
  auto upto2 = enumerate_quantales(2);
  // on the 1-element lattice one structure; on the 2-chain the product is
  // fixed by top*top, giving the frame and the zero quantale
  CHECK(upto2.size() == 3);
  int found_b2 = 0, found_z0 = 0;
  const auto& fx = builtin_fixtures();
  for (const auto& q : upto2) {
    if (quantale_isomorphism(q, *fx.quantale("B2"))) ++found_b2;
    if (quantale_isomorphism(q, *fx.quantale("Z0"))) ++found_z0;
  }
  CHECK(found_b2 == 1);
  CHECK(found_z0 == 1);
}

TEST_CASE("every enumerated quantale revalidates") {
  for (const auto& q : enumerate_quantales(3)) {
    Quantale again = validate_quantale(q.lat, q.mul_tab, q.unit);
    CHECK(again.mul_tab == q.mul_tab);
    CHECK(again.flags == q.flags);
  }
}

TEST_CASE("frozen regression counts at size 4") {
  // one frame per lattice; totals frozen from the first complete run
  auto all = enumerate_quantales(4);
  CHECK(all.size() == 144);
  int frames = 0, integral = 0;
  for (const auto& q : all) {
    frames += q.flags.frame;
    integral += q.flags.integral;
  }
  CHECK(frames == 5);
  CHECK(integral == 13);
}
