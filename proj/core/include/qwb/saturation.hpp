#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qwb/ideal.hpp"
#include "qwb/quantale.hpp"

namespace qwb {

using RelationSpec = std::vector<std::pair<Elem, Elem>>;

// Def-style saturation check. For unital quantales only the two-sided
// context clause is tested (the one-sided and bare clauses are implied);
// for non-unital quantales all four clauses are tested.
bool is_saturated(const Quantale& q, const RelationSpec& r, Elem s,
                  std::string* witness = nullptr);

// Q_R, with meet-closure and residual-closure asserted.
std::vector<Elem> saturated_set(const Quantale& q, const RelationSpec& r);

// rho_R(a) = meet{s in Q_R | a <= s}; checked to be a quantic nucleus.
Elem rho(const Quantale& q, const RelationSpec& r, Elem a);

// Quantale on Q_R with join' = rho(join) and product' = rho(product).
struct QuotientByRelation {
  Quantale quotient;
  std::vector<Elem> carrier;     // carrier[i] = element of Q (the saturated set)
  std::vector<Elem> projection;  // Q -> quotient index, a |-> [rho(a)]
};
QuotientByRelation quotient_by_relation(const Quantale& q,
                                        const RelationSpec& r);

// ker rho_R as a partition; equals the congruence generated by R.
Congruence congruence_generated(const Quantale& q, const RelationSpec& r);

// Fixpoints of gamma = f_res . f for a quantale hom f : Q -> Q2; asserted
// equal to the (ker f)-saturated elements.
std::vector<Elem> saturation_of_hom(const Quantale& q, const Quantale& q2,
                                    const std::vector<Elem>& f);

}  // namespace qwb
