#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qwb/transform.hpp"

namespace qwb {

// All star-idempotent kernels in M_n(Q), lexicographic order.
// Throws BudgetExceeded when the kernel space is too large.
std::vector<Kernel> idempotent_kernels(std::shared_ptr<const Quantale> q,
                                       int n);

// Q . {k(x,_)}: the submodule of Q^X generated by the rows of a square
// kernel, as a standalone module.
QModule image_of_kernel(const Kernel& k);

struct ProjectivityCertificate {
  bool projective = false;
  std::vector<Elem> splitting;  // mu : M -> Q^X when projective
  std::optional<Kernel> kernel; // the idempotent kernel induced by mu
  std::string note;             // exhaustion note when not projective
};

// Decides projectivity of M with respect to a generating set X (a list of
// elements of M). Searches join-and-action-preserving sections of the basis
// projection pi : Q^X -> M; on success the induced kernel is asserted
// star-idempotent. Throws NotGenerating when X does not generate M.
ProjectivityCertificate is_projective(const QModule& m,
                                      const std::vector<Elem>& generators);

// Independent cross-check of the kernel characterization: searches the
// idempotent kernels of size |X| for one whose image is isomorphic to M.
std::optional<Kernel> projective_via_idempotents(const QModule& m, int n);

// Isomorphism classes of images of idempotent kernels up to gen_bound.
struct ProjectiveClasses {
  std::shared_ptr<const Quantale> q;
  std::vector<QModule> reps;  // reps[0] is the zero module
};
ProjectiveClasses projective_classes(std::shared_ptr<const Quantale> q,
                                     int gen_bound);

// Formal difference of multisets of class indices.
struct K0Element {
  std::vector<int> plus;
  std::vector<int> minus;
};

enum class K0Verdict { equal, distinct, unknown };

// equal: some projective P within the class inventory stabilizes the two
// sides into isomorphic direct sums; distinct: the cardinality invariant
// (multiplicative under direct sum) separates them; unknown otherwise.
K0Verdict k0_equal(const ProjectiveClasses& classes, const K0Element& e1,
                   const K0Element& e2, int search_bound);

}  // namespace qwb
