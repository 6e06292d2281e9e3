#include <doctest.h>

#include "qwb/fixtures.hpp"
#include "qwb/saturation.hpp"

using namespace qwb;

TEST_CASE("saturated elements of L3 for R = {(0,h)}") {
  auto q = builtin_fixtures().quantale("L3");
  RelationSpec r = {{0, 1}};
  std::string w;
  CHECK(is_saturated(*q, r, 1, &w));
  CHECK(is_saturated(*q, r, 2, &w));
  CHECK_FALSE(is_saturated(*q, r, 0, &w));
  CHECK(!w.empty());  // names the violating context
  CHECK(saturated_set(*q, r) == std::vector<Elem>{1, 2});
  CHECK(saturated_set(*q, {}) == std::vector<Elem>{0, 1, 2});
}

TEST_CASE("rho is the least saturated cover") {
  auto q = builtin_fixtures().quantale("L3");
  RelationSpec r = {{0, 1}};
  CHECK(rho(*q, r, 0) == 1);
  CHECK(rho(*q, r, 1) == 1);
  CHECK(rho(*q, r, 2) == 2);
  for (Elem a = 0; a < 3; ++a) CHECK(rho(*q, {}, a) == a);
}

TEST_CASE("quotient by a relation matches the congruence quotient") {
  auto q = builtin_fixtures().quantale("L3");
  RelationSpec r = {{0, 1}};
  auto qr = quotient_by_relation(*q, r);
  CHECK(qr.quotient.size() == 2);
  CHECK(quantale_isomorphism(qr.quotient,
                             *builtin_fixtures().quantale("B2"))
            .has_value());
  CHECK(qr.projection[0] == qr.projection[1]);
  CHECK(qr.projection[0] != qr.projection[2]);
  Congruence gen = congruence_generated(*q, r);
  CHECK(gen.num_classes == 2);
  CHECK(gen.related(0, 1));
  // collapsing bottom with top collapses everything
  CHECK(congruence_generated(*q, {{0, 2}}) == all_congruence(3));
  CHECK(congruence_generated(*q, {}) == identity_congruence(3));
}

TEST_CASE("saturation works on non-unital quantales") {
  auto z0 = builtin_fixtures().quantale("Z0");
  // R identifying bottom and top collapses Z0 to a point
  CHECK(congruence_generated(*z0, {{0, 1}}) == all_congruence(2));
  auto qr = quotient_by_relation(*z0, {{0, 1}});
  CHECK(qr.quotient.size() == 1);
  // empty relation: Z0 unchanged
  CHECK(congruence_generated(*z0, {}) == identity_congruence(2));
}

TEST_CASE("saturation of a hom is the kernel saturation") {
  auto q = builtin_fixtures().quantale("L3");
  // the projection onto the quotient by (0,h)
  auto qr = quotient_by_relation(*q, {{0, 1}});
  auto fix = saturation_of_hom(*q, qr.quotient, qr.projection);
  CHECK(fix == std::vector<Elem>{1, 2});
  // the identity hom saturates nothing away
  std::vector<Elem> ident = {0, 1, 2};
  CHECK(saturation_of_hom(*q, *q, ident) == ident);
}
