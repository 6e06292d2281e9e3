#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qwb/quantale.hpp"

namespace qwb {

enum class Handed { left, right };

// Module over a finite quantale: carrier sup-lattice plus a full
// scalar-action table. Right modules are stored with the same table shape
// and the handedness flag; (M1) is checked with sides exchanged.
struct QModule {
  std::shared_ptr<const Quantale> q;
  FiniteSupLattice lat;
  std::vector<Elem> act_tab;  // |Q| rows x |M| cols
  Handed handed = Handed::left;
  std::vector<Elem> basis;  // basis elements when free, indexed by X
  int free_rank = 0;        // > 0 when the carrier is the tuple lattice Q^rank

  int size() const { return lat.size(); }
  Elem act(Elem a, Elem v) const { return act_tab[a * size() + v]; }
};

// Checks (M1), the binary form of (M2), and (M3) when Q is unital.
// Throws M1Violation, M2Violation, M3Violation.
QModule validate_module(std::shared_ptr<const Quantale> q,
                        const FiniteSupLattice& carrier,
                        const std::vector<Elem>& action,
                        Handed handed = Handed::left);

// Free module Q^X with pointwise join and action and the basis e_x.
// For non-unital Q the scalars are replaced by Q[e] first; the returned
// module's `q` points at the quantale actually acting.
QModule free_module(std::shared_ptr<const Quantale> q, int rank,
                    Handed handed = Handed::left);

// Tuple coding for free-module carriers (digit x = value at coordinate x).
Elem free_from_tuple(const QModule& m, const std::vector<Elem>& tuple);
std::vector<Elem> free_to_tuple(const QModule& m, Elem v);

// a *\ v = join{u in M | a*u <= v}  (an element of M)
Elem act_under(const QModule& m, Elem a, Elem v);
// v /* w = join{b in Q | b*w <= v}  (an element of Q)
Elem act_over(const QModule& m, Elem v, Elem w);
// (a *\ v, v /* w)
std::pair<Elem, Elem> action_residuals(const QModule& m, Elem a, Elem v,
                                       Elem w);

// M^op: dual carrier, action a *op v = a *\ v, opposite handedness.
QModule op_module(const QModule& m);

// Least subset containing S closed under joins (incl. empty) and action.
std::vector<Elem> submodule_generated(const QModule& m,
                                      const std::vector<Elem>& s);

// Standalone module on a join- and action-closed subset.
struct Submodule {
  QModule mod;
  std::vector<Elem> carrier;  // carrier[i] = index in the host module
};
Submodule restrict_to_submodule(const QModule& m,
                                const std::vector<Elem>& carrier);

// Componentwise product; throws ScalarMismatch.
QModule direct_sum(const QModule& a, const QModule& b);

// Checks join/bottom preservation and equivariance; returns the map.
// Throws NotJoinPreserving, NotEquivariant, ScalarMismatch.
std::vector<Elem> validate_hom(const QModule& m, const QModule& n,
                               const std::vector<Elem>& map);

// Unique hom out of a free module with the given basis images:
// f(v) = join_x v(x) * images[x].
std::vector<Elem> extend_from_basis(const QModule& free_m, const QModule& n,
                                    const std::vector<Elem>& images);

// Bijective hom with hom inverse, or definitive absence.
std::optional<std::vector<Elem>> is_isomorphic(const QModule& a,
                                               const QModule& b);

// All homs M -> N with their pointwise-join sup-lattice; when Q is
// commutative the hom set is itself a Q-module via (a . h)(v) = a * h(v).
struct HomObject {
  std::vector<std::vector<Elem>> homs;
  FiniteSupLattice lat;  // lat element i corresponds to homs[i]
  std::optional<QModule> as_module;
};
HomObject hom_object(const QModule& m, const QModule& n);

// True when the two modules share structurally equal scalars of the same
// handedness.
bool same_scalars(const QModule& a, const QModule& b);

}  // namespace qwb
