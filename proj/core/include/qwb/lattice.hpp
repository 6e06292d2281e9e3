#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qwb/error.hpp"

namespace qwb {

// Index of an element inside a fixed finite carrier.
using Elem = int;

// Finite complete lattice: explicit order relation with precomputed
// join/meet tables. Elements are opaque names; all structure is tables.
struct FiniteSupLattice {
  std::vector<std::string> names;
  std::vector<char> leq_tab;   // size n*n, row-major: leq_tab[a*n+b] = (a <= b)
  std::vector<Elem> join_tab;  // size n*n
  std::vector<Elem> meet_tab;  // size n*n
  Elem bottom = 0;
  Elem top = 0;

  int size() const { return static_cast<int>(names.size()); }
  bool leq(Elem a, Elem b) const { return leq_tab[a * size() + b] != 0; }
  Elem join(Elem a, Elem b) const { return join_tab[a * size() + b]; }
  Elem meet(Elem a, Elem b) const { return meet_tab[a * size() + b]; }

  // Join/meet of an arbitrary (possibly empty) element set.
  Elem join_of(const std::vector<Elem>& s) const;
  Elem meet_of(const std::vector<Elem>& s) const;

  // Throws UnknownElement.
  Elem index_of(const std::string& name) const;

  // Elements that are not the join of the elements strictly below them.
  // Bottom is never join-irreducible (it is the empty join).
  std::vector<Elem> join_irreducibles() const;

  // Covering pairs (a,b): a < b with nothing strictly between.
  std::vector<std::pair<Elem, Elem>> covers() const;

  bool operator==(const FiniteSupLattice&) const = default;
};

// Builds a lattice from an element list and order pairs (covers or any
// subrelation; the reflexive-transitive closure is taken). Throws
// NotAPartialOrder, NoLeastUpperBound, NoBottom, UnknownElement.
FiniteSupLattice validate_sup_lattice(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs);

// Same, with the relation already indexed.
FiniteSupLattice validate_sup_lattice_indexed(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<Elem, Elem>>& leq_pairs);

// Order-reversed lattice on the same carrier; bottom and top swap.
FiniteSupLattice dual_lattice(const FiniteSupLattice& l);

// A join-preserving map together with its upper adjoint.
struct ResiduatedMapWitness {
  std::vector<Elem> forward;   // L1 -> L2
  std::vector<Elem> residuum;  // L2 -> L1
};

// Checks that f preserves binary joins and bottom, and returns the
// residuum g(y) = join{x | f(x) <= y}. Throws NotJoinPreserving.
ResiduatedMapWitness residuum_of_map(const FiniteSupLattice& l1,
                                     const FiniteSupLattice& l2,
                                     const std::vector<Elem>& f);

}  // namespace qwb
