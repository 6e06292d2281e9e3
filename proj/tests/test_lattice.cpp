#include <doctest.h>

#include "qwb/fixtures.hpp"
#include "qwb/lattice.hpp"

using namespace qwb;

namespace {

FiniteSupLattice diamond() {
  return validate_sup_lattice({"0", "x", "y", "1"},
                              {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
}

}  // namespace

TEST_CASE("chain join/meet tables") {
  auto l = validate_sup_lattice({"0", "h", "1"}, {{"0", "h"}, {"h", "1"}});
  CHECK(l.bottom == 0);
  CHECK(l.top == 2);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) {
      CHECK(l.join(a, b) == std::max(a, b));
      CHECK(l.meet(a, b) == std::min(a, b));
    }
  CHECK(l.join_of({}) == l.bottom);
  CHECK(l.meet_of({}) == l.top);
}

TEST_CASE("diamond structure") {
  auto l = diamond();
  Elem x = l.index_of("x"), y = l.index_of("y");
  CHECK(l.join(x, y) == l.top);
  CHECK(l.meet(x, y) == l.bottom);
  CHECK(l.join_irreducibles() == std::vector<Elem>{x, y});
  CHECK(l.covers().size() == 4);
}

TEST_CASE("transitive closure is taken") {
  // only 0<h and h<1 given; 0<1 must be inferred
  auto l = validate_sup_lattice({"0", "h", "1"}, {{"0", "h"}, {"h", "1"}});
  CHECK(l.leq(0, 2));
}

TEST_CASE("rejects a cycle") {
  try {
    validate_sup_lattice({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL("expected NotAPartialOrder");
  } catch (const Error& e) {
    CHECK(e.code() == "NotAPartialOrder");
  }
}

TEST_CASE("rejects a join-free poset") {
  // two incomparable tops: {x,y} above 0, no lub for (x,y)
  try {
    validate_sup_lattice({"0", "x", "y"}, {{"0", "x"}, {"0", "y"}});
    FAIL("expected NoLeastUpperBound");
  } catch (const Error& e) {
    CHECK(e.code() == "NoLeastUpperBound");
    CHECK(e.witness() == std::vector<std::string>{"x", "y"});
  }
}

TEST_CASE("rejects a bottomless poset") {
  try {
    validate_sup_lattice({"x", "y", "1"}, {{"x", "1"}, {"y", "1"}});
    FAIL("expected NoBottom");
  } catch (const Error& e) {
    CHECK(e.code() == "NoBottom");
  }
}

TEST_CASE("dual lattice swaps bounds and reverses order") {
  auto l = diamond();
  auto d = dual_lattice(l);
  CHECK(d.bottom == l.top);
  CHECK(d.top == l.bottom);
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) CHECK(d.leq(a, b) == l.leq(b, a));
}

TEST_CASE("residuum is the upper adjoint") {
  auto c2 = validate_sup_lattice({"0", "1"}, {{"0", "1"}});
  auto c3 = validate_sup_lattice({"0", "h", "1"}, {{"0", "h"}, {"h", "1"}});
  // f : c3 -> c2 collapsing h to 1
  std::vector<Elem> f = {0, 1, 1};
  auto w = residuum_of_map(c3, c2, f);
  CHECK(w.residuum == std::vector<Elem>{0, 2});
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 2; ++y)
      CHECK(c2.leq(f[x], y) == c3.leq(x, w.residuum[y]));
}

TEST_CASE("non-join-preserving map is rejected") {
  auto d = diamond();
  // g(v) = v except g(top) = top, g(x)=g(y)=bottom: preserves bottom but
  // g(x v y) != g(x) v g(y)
  std::vector<Elem> g = {0, 0, 0, 3};
  CHECK_THROWS_AS((void)residuum_of_map(d, d, g), Error);
}
