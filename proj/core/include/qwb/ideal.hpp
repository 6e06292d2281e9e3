#pragma once

#include <string>
#include <vector>

#include "qwb/module.hpp"

namespace qwb {

// Partition of a carrier, normalized so class ids appear in first-occurrence
// order. Compatibility with the host operations is checked separately.
struct Congruence {
  std::vector<int> cls;
  int num_classes = 0;

  bool related(Elem a, Elem b) const { return cls[a] == cls[b]; }
  bool operator==(const Congruence&) const = default;
  bool operator<(const Congruence& o) const { return cls < o.cls; }
};

Congruence normalize_partition(std::vector<int> cls);
Congruence identity_congruence(int n);
Congruence all_congruence(int n);
// a refines b: every a-class is contained in a b-class (a <= b as relations).
bool refines(const Congruence& a, const Congruence& b);
// Meet of partitions: related iff related in both.
Congruence intersect(const Congruence& a, const Congruence& b);

bool is_congruence_module(const QModule& m, const Congruence& c);
bool is_congruence_quantale(const Quantale& q, const Congruence& c);

struct IdealCheck {
  bool ok = true;
  std::string clause;  // failing clause when !ok: "joins"|"downset"|"action"
  std::vector<std::string> witness;
};

IdealCheck is_ideal_module(const QModule& m, const std::vector<Elem>& subset);
IdealCheck is_ideal_quantale(const Quantale& q, const std::vector<Elem>& subset);

// Principal ideals, stored by generator.
struct Ideal {
  Elem generator = 0;
};

Ideal ideal_generated_module(const QModule& m, const std::vector<Elem>& s);
Ideal ideal_generated_quantale(const Quantale& q, const std::vector<Elem>& s);
std::vector<Elem> downset(const FiniteSupLattice& lat, Elem v);

// Ideal elements: v with top*v <= v (equivalently top*v = v when the
// scalars are unital). Asserts join-closure, and action-closure when the
// scalars are commutative.
std::vector<Elem> ideal_elements_module(const QModule& m);
// Two-sided elements of the quantale (same set as sided_elements two).
std::vector<Elem> ideal_elements_quantale(const Quantale& q);

// Module with unital scalars acting the same way: M itself when M.q is
// unital, otherwise the Q[e] extension (e acts as the identity).
QModule effective_unital(const QModule& m);

// i^v = join{a | a*v in I}, computed over the effective unital scalars.
Elem i_hat(const QModule& m, const Ideal& i, Elem v);

// theta_I: v ~ w iff i^v = i^w; the largest congruence with bottom-class I.
Congruence theta_from_ideal(const QModule& m, const Ideal& i);

// theta_i for a two-sided element: a ~ b iff i/a = i/b and a\i = b\i.
// Throws NotTwoSided.
Congruence quantale_theta(const Quantale& q, Elem i);

// Every partition that is a congruence, in deterministic (lexicographic
// class-signature) order. Throws CarrierTooLarge beyond the bound.
std::vector<Congruence> enumerate_congruences_module(const QModule& m,
                                                     int bound = 7);
std::vector<Congruence> enumerate_congruences_quantale(const Quantale& q,
                                                       int bound = 7);

QModule quotient_module(const QModule& m, const Congruence& c);
Quantale quotient_quantale(const Quantale& q, const Congruence& c);

bool is_simple(const Quantale& q, int bound = 7);
bool is_semisimple(const Quantale& q, int bound = 7);

}  // namespace qwb
