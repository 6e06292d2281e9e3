#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qwb/lattice.hpp"

namespace qwb {

struct QuantaleFlags {
  bool unital = false;
  bool commutative = false;
  bool integral = false;
  bool frame = false;
  bool operator==(const QuantaleFlags&) const = default;
};

// Finite quantale: sup-lattice + associative, join-distributive product.
// Residual tables are precomputed by the validator.
struct Quantale {
  FiniteSupLattice lat;
  std::vector<Elem> mul_tab;  // n*n
  std::optional<Elem> unit;
  QuantaleFlags flags;
  std::vector<Elem> under_tab;  // under_tab[a*n+b] = a\b
  std::vector<Elem> over_tab;   // over_tab[b*n+a]  = b/a

  int size() const { return lat.size(); }
  Elem bottom() const { return lat.bottom; }
  Elem top() const { return lat.top; }
  Elem mul(Elem a, Elem b) const { return mul_tab[a * size() + b]; }
  Elem under(Elem a, Elem b) const { return under_tab[a * size() + b]; }
  Elem over(Elem b, Elem a) const { return over_tab[b * size() + a]; }

  bool operator==(const Quantale&) const = default;
};

// Checks (Q2), the binary-join form of (Q3), bottom absorption, and the
// declared unit if any; fills residual tables and classification flags.
// Throws NotAssociative, NotDistributive, BottomNotAbsorbed, UnitLaw.
Quantale validate_quantale(const FiniteSupLattice& lat,
                           const std::vector<Elem>& mul,
                           std::optional<Elem> unit = std::nullopt);

// Flags by exhaustive table check. A unit is searched for when none is
// declared; frame means the product coincides with binary meet.
QuantaleFlags classify(const Quantale& q);

// (a\b, b/a).
std::pair<Elem, Elem> residuals(const Quantale& q, Elem a, Elem b);

// Q[e]: carrier of size 2n. Element i of Q keeps index i; the copy
// "i or e" sits at n+i. The unit e is element n + bottom.
Quantale unitalize(const Quantale& q);

// Quantale on the powerset of a finite semigroup, join = union,
// Y*Z = {yz | y in Y, z in Z}. The carrier index is the subset bitmask.
// Throws NotAssociative when the input table is not a semigroup.
Quantale powerset_quantale(const std::vector<std::string>& generators,
                           const std::vector<Elem>& semigroup_mul);

enum class Side { left, right, two };

// Right-sided: a*top <= a; left-sided: top*a <= a; two = both.
std::vector<Elem> sided_elements(const Quantale& q, Side side);

// For unital quantales only: {a | top*a*top = a}. Provided so reports can
// compare the two predicates on non-unital inputs.
bool strictly_two_sided(const Quantale& q, Elem a);

struct SubquantaleResult {
  Quantale sub;
  std::vector<Elem> carrier;  // carrier[i] = index in the host quantale
  bool equals_host = false;
};

// Restriction of join and product to the two-sided elements.
// Throws ClosureViolation if the carrier fails to be closed.
SubquantaleResult id_subquantale(const Quantale& q);

// Search for a quantale isomorphism (bijection preserving order and
// product, and the unit when both are unital).
std::optional<std::vector<Elem>> quantale_isomorphism(const Quantale& a,
                                                      const Quantale& b);

}  // namespace qwb
