#include "qwb/fixtures.hpp"

#include <stdexcept>

namespace qwb {
namespace {

FiniteSupLattice chain(const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, std::string>> leq;
  for (size_t i = 0; i + 1 < names.size(); ++i)
    leq.emplace_back(names[i], names[i + 1]);
  return validate_sup_lattice(names, leq);
}

Quantale make_b2() {
  FiniteSupLattice lat = chain({"0", "1"});
  // mul = meet, unit = top: the two-element frame.
  return validate_quantale(lat, lat.meet_tab, lat.top);
}

Quantale make_l3() {
  FiniteSupLattice lat = chain({"0", "h", "1"});
  const Elem z = 0, h = 1, u = 2;
  std::vector<Elem> mul(9, z);
  auto set = [&](Elem a, Elem b, Elem c) { mul[a * 3 + b] = c; };
  set(u, u, u);
  set(u, h, h);
  set(h, u, h);
  set(h, h, z);  // nilpotent middle element
  return validate_quantale(lat, mul, u);
}

Quantale make_ps2() {
  // Left-zero semigroup on {p, q}: x.y = x.
  std::vector<Elem> sg = {0, 0, 1, 1};
  return powerset_quantale({"p", "q"}, sg);
}

Quantale make_z0() {
  FiniteSupLattice lat = chain({"0", "a"});
  std::vector<Elem> mul(4, lat.bottom);  // everything multiplies to bottom
  return validate_quantale(lat, mul);
}

FiniteSupLattice diamond_lattice() {
  return validate_sup_lattice({"0", "x", "y", "1"},
                              {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
}

FiniteSupLattice atom3_lattice() {
  return validate_sup_lattice(
      {"0", "x", "y", "z", "1"},
      {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}});
}

}  // namespace

QModule self_module(std::shared_ptr<const Quantale> q) {
  return validate_module(q, q->lat, q->mul_tab, Handed::left);
}

QModule b2_module(std::shared_ptr<const Quantale> b2,
                  const FiniteSupLattice& carrier) {
  const int m = carrier.size();
  std::vector<Elem> act(2 * m);
  for (Elem v = 0; v < m; ++v) {
    act[b2->bottom() * m + v] = carrier.bottom;
    act[b2->top() * m + v] = v;
  }
  return validate_module(b2, carrier, act, Handed::left);
}

std::shared_ptr<const Quantale> Fixtures::quantale(
    const std::string& name) const {
  for (const auto& [n, q] : quantales)
    if (n == name) return q;
  throw Error("UnknownStructure", "no bundled quantale named " + name);
}

const QModule& Fixtures::module_named(const std::string& name) const {
  for (const auto& [n, m] : modules)
    if (n == name) return m;
  throw Error("UnknownStructure", "no bundled module named " + name);
}

const Fixtures& builtin_fixtures() {
  static const Fixtures fx = [] {
    Fixtures f;
    auto b2 = std::make_shared<const Quantale>(make_b2());
    auto l3 = std::make_shared<const Quantale>(make_l3());
    auto ps2 = std::make_shared<const Quantale>(make_ps2());
    auto z0 = std::make_shared<const Quantale>(make_z0());
    f.quantales = {{"B2", b2}, {"L3", l3}, {"PS2", ps2}, {"Z0", z0}};
    f.modules.emplace_back("B2_l", self_module(b2));
    f.modules.emplace_back("L3_l", self_module(l3));
    f.modules.emplace_back("PS2_l", self_module(ps2));
    f.modules.emplace_back("Z0_l", self_module(z0));
    f.modules.emplace_back("diamond", b2_module(b2, diamond_lattice()));
    f.modules.emplace_back("atom3", b2_module(b2, atom3_lattice()));
    f.modules.emplace_back("chain3", b2_module(b2, chain({"0", "h", "1"})));
    return f;
  }();
  return fx;
}

}  // namespace qwb
