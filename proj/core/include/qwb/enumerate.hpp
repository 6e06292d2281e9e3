#pragma once

#include <vector>

#include "qwb/quantale.hpp"

namespace qwb {

// All lattices with at most max_size elements, up to isomorphism, in a
// deterministic order. Throws BudgetExceeded for max_size > 5.
std::vector<FiniteSupLattice> enumerate_lattices(int max_size);

// All quantale structures on those lattices, up to isomorphism.
// Products are generated on join-irreducible pairs, extended by
// join-distributivity and filtered through the full validator.
std::vector<Quantale> enumerate_quantales(int max_size);

}  // namespace qwb
