#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qwb/io.hpp"
#include "qwb/suites.hpp"

using namespace qwb;

namespace {

const char* kSample = R"(lattice C2
  elements 0 1
  leq 0 1
end

quantale B2
  lattice C2
  unit 1
  mul 1 1 1
end

module M
  quantale B2
  lattice C2
  act 1 1 1
end

kernel K
  quantale B2
  side left
  dim 2 2
  row 1 1
  row 0 0
end

relation R
  quantale B2
  pair 0 1
end
)";

}  // namespace

TEST_CASE("parse builds validated structures") {
  Workspace ws = parse_workspace(kSample);
  CHECK(ws.lattices.count("C2") == 1);
  CHECK(ws.quantales.at("B2")->flags.unital);
  CHECK(ws.modules.at("M").size() == 2);
  CHECK(ws.kernels.at("K").entries == std::vector<Elem>{1, 1, 0, 0});
  CHECK(ws.relations.at("R").pairs ==
        std::vector<std::pair<Elem, Elem>>{{0, 1}});
}

TEST_CASE("serialize is a fixed point of parse") {
  Workspace ws = parse_workspace(kSample);
  std::string canon = serialize_workspace(ws);
  CHECK(serialize_workspace(parse_workspace(canon)) == canon);
}

TEST_CASE("the shipped fixture file is canonical and matches the builtins") {
  Workspace ws = load_workspace_file(QWB_FIXTURE_FILE);
  std::ifstream in(QWB_FIXTURE_FILE);
  std::stringstream raw;
  raw << in.rdbuf();
  SUBCASE("byte-identical round trip") {
    CHECK(serialize_workspace(ws) == raw.str());
  }
  SUBCASE("structurally equal to the compiled-in corpus") {
    const Fixtures& fx = builtin_fixtures();
    for (const auto& [name, q] : fx.quantales)
      CHECK(quantale_isomorphism(*ws.quantales.at(name), *q).has_value());
    for (const auto& [name, m] : fx.modules)
      CHECK(ws.modules.at(name).act_tab == m.act_tab);
  }
}

TEST_CASE("parse errors carry a location") {
  try {
    parse_workspace("lattice L\n  elements a\nleq a a a\nend\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == "ParseError");
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_workspace("quantale Q\n  lattice nope\nend\n"), Error);
  // duplicate names are rejected
  CHECK_THROWS_AS(
      parse_workspace("lattice L\n  elements a\nend\nlattice L\n  elements a\nend\n"),
      Error);
  // a block without 'end'
  CHECK_THROWS_AS(parse_workspace("lattice L\n  elements a\n"), Error);
}

TEST_CASE("validator failures surface with their own codes") {
  try {
    parse_workspace(
        "lattice C3\n  elements 0 h 1\n  leq 0 h\n  leq h 1\nend\n"
        "quantale BAD\n  lattice C3\n  mul h 1 h\n  mul 1 h 1\nend\n");
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == "NotAssociative");
  }
}

TEST_CASE("a parsed corpus drives the suite runner") {
  Workspace ws = parse_workspace(kSample);
  Fixtures corpus = corpus_of(ws);
  REQUIRE(corpus.quantales.size() == 1);
  REQUIRE(corpus.modules.size() == 1);
  Report r = run_suite("basicmq", corpus);
  CHECK(r.cases_failed == 0);
  CHECK(r.cases_total > 0);
}
