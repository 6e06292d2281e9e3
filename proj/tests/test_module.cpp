#include <doctest.h>

#include <algorithm>

#include "qwb/fixtures.hpp"
#include "qwb/module.hpp"

using namespace qwb;

TEST_CASE("action residuals on L3 over itself") {
  const QModule& m = builtin_fixtures().module_named("L3_l");
  const Elem z = 0, h = 1, u = 2;
  CHECK(act_under(m, h, z) == h);   // max v with h*v <= 0
  CHECK(act_under(m, h, h) == u);
  CHECK(act_over(m, h, u) == h);    // max b with b*1 <= h
  CHECK(act_over(m, z, h) == h);    // max b with b*h <= 0
  for (Elem a = 0; a < 3; ++a)
    for (Elem v = 0; v < 3; ++v)
      for (Elem w = 0; w < 3; ++w) {
        CHECK(m.lat.leq(m.act(a, w), v) == m.lat.leq(w, act_under(m, a, v)));
        CHECK(m.lat.leq(m.act(w, v), a) ==
              m.q->lat.leq(w, act_over(m, a, v)));
      }
}

TEST_CASE("free module over L3 of rank 2") {
  auto q = builtin_fixtures().quantale("L3");
  QModule f = free_module(q, 2);
  REQUIRE(f.size() == 9);
  REQUIRE(f.free_rank == 2);
  // basis elements are the unit vectors
  CHECK(free_to_tuple(f, f.basis[0]) == std::vector<Elem>{2, 0});
  CHECK(free_to_tuple(f, f.basis[1]) == std::vector<Elem>{0, 2});
  // pointwise action and join
  Elem v = free_from_tuple(f, {1, 2});
  CHECK(free_to_tuple(f, f.act(1, v)) == std::vector<Elem>{0, 1});  // h.(h,1)
  Elem w = free_from_tuple(f, {2, 0});
  CHECK(free_to_tuple(f, f.lat.join(v, w)) == std::vector<Elem>{2, 2});
}

TEST_CASE("free module over a non-unital quantale unitalizes the scalars") {
  auto z0 = builtin_fixtures().quantale("Z0");
  QModule f = free_module(z0, 1);
  CHECK(f.q->flags.unital);
  CHECK(f.q->size() == 4);
  CHECK(f.size() == 4);
  CHECK(f.basis.size() == 1);
}

TEST_CASE("op module reverses the order and residuates the action") {
  const QModule& m = builtin_fixtures().module_named("L3_l");
  QModule op = op_module(m);
  CHECK(op.handed == Handed::right);
  CHECK(op.lat.bottom == m.lat.top);
  for (Elem a = 0; a < 3; ++a)
    for (Elem v = 0; v < 3; ++v) CHECK(op.act(a, v) == act_under(m, a, v));
}

TEST_CASE("submodule generated and restriction") {
  const QModule& d = builtin_fixtures().module_named("diamond");
  Elem x = d.lat.index_of("x");
  auto s = submodule_generated(d, {x});
  CHECK(s == std::vector<Elem>{d.lat.bottom, x});
  auto sub = restrict_to_submodule(d, s);
  CHECK(sub.mod.size() == 2);
  CHECK(sub.carrier == s);
}

TEST_CASE("direct sum is componentwise") {
  const auto& fx = builtin_fixtures();
  const QModule& a = fx.module_named("B2_l");
  QModule s = direct_sum(a, a);
  CHECK(s.size() == 4);
  // scalars must match
  CHECK_THROWS_AS((void)direct_sum(a, fx.module_named("L3_l")), Error);
}

TEST_CASE("hom validation catches non-equivariance") {
  const QModule& m = builtin_fixtures().module_named("L3_l");
  // identity is a hom
  CHECK(validate_hom(m, m, {0, 1, 2}) == std::vector<Elem>{0, 1, 2});
  // collapsing h to 1 preserves joins but not the action: h*1 = h -> 1*? ...
  try {
    validate_hom(m, m, {0, 2, 2});
    FAIL("expected NotEquivariant");
  } catch (const Error& e) {
    CHECK(e.code() == "NotEquivariant");
  }
}

TEST_CASE("extension from a basis is the unique hom") {
  auto q = builtin_fixtures().quantale("B2");
  QModule f = free_module(q, 2);
  const QModule& d = builtin_fixtures().module_named("diamond");
  Elem x = d.lat.index_of("x"), y = d.lat.index_of("y");
  auto h = extend_from_basis(f, d, {x, y});
  CHECK(validate_hom(f, d, h) == h);
  CHECK(h[f.basis[0]] == x);
  CHECK(h[f.basis[1]] == y);
  CHECK(h[f.lat.join(f.basis[0], f.basis[1])] == d.lat.top);
}

TEST_CASE("module isomorphism is structural") {
  auto q = builtin_fixtures().quantale("B2");
  QModule f1 = free_module(q, 1);
  CHECK(is_isomorphic(f1, builtin_fixtures().module_named("B2_l")).has_value());
  CHECK_FALSE(
      is_isomorphic(f1, builtin_fixtures().module_named("diamond")).has_value());
}

TEST_CASE("hom object over a commutative quantale is a module") {
  const QModule& m = builtin_fixtures().module_named("chain3");
  auto ho = hom_object(m, m);
  // join-preserving equivariant endomaps of the 3-chain over B2
  CHECK(ho.homs.size() == ho.lat.size());
  REQUIRE(ho.as_module.has_value());
  // identity and constant-bottom are always present
  auto has = [&](const std::vector<Elem>& h) {
    return std::find(ho.homs.begin(), ho.homs.end(), h) != ho.homs.end();
  };
  CHECK(has({0, 1, 2}));
  CHECK(has({0, 0, 0}));
}
