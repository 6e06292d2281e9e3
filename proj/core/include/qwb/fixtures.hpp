#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qwb/module.hpp"

namespace qwb {

// The bundled desk-scale corpus:
//   B2   two-element frame (mul = meet, unit = top)
//   L3   three-chain with h.h = 0 (unit = 1, integral, not a frame)
//   PS2  powerset of the left-zero two-element semigroup (non-unital)
//   Z0   two-element zero-product quantale (non-unital)
// plus modules: each quantale acting on itself, and the diamond, the
// three-atom diamond, and the three-chain as B2-modules.
struct Fixtures {
  std::vector<std::pair<std::string, std::shared_ptr<const Quantale>>>
      quantales;
  std::vector<std::pair<std::string, QModule>> modules;

  std::shared_ptr<const Quantale> quantale(const std::string& name) const;
  const QModule& module_named(const std::string& name) const;
};

const Fixtures& builtin_fixtures();

// Q acting on itself by its own product (left module).
QModule self_module(std::shared_ptr<const Quantale> q);

// A sup-lattice as a module over B2 (unit acts as identity).
QModule b2_module(std::shared_ptr<const Quantale> b2,
                  const FiniteSupLattice& carrier);

}  // namespace qwb
