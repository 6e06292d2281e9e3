#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qwb/module.hpp"

namespace qwb {

// Q-valued matrix over finite index sets; the datum of a module transform.
struct Kernel {
  std::shared_ptr<const Quantale> q;
  int rows = 0;  // |X|
  int cols = 0;  // |Y|
  std::vector<Elem> entries;  // rows x cols
  Handed side = Handed::left;

  Elem at(int x, int y) const { return entries[x * cols + y]; }
  bool operator==(const Kernel& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries &&
           side == o.side && (q == o.q || *q == *o.q);
  }
};

Kernel kernel_identity(std::shared_ptr<const Quantale> q, int n,
                       Handed side = Handed::left);

// Matrix product (h*k)(x,y) = join_z h(x,z).k(z,y).
Kernel star(const Kernel& h, const Kernel& k);

// h_k : Q^X -> Q^Y, h_k f(y) = join_x f(x).k(x,y) (left) or
// join_x k(x,y).f(x) (right). The map is returned against the supplied
// free modules (src of rank rows, dst of rank cols) and passes validate_hom.
std::vector<Elem> transform(const Kernel& k, const QModule& src,
                            const QModule& dst);

// lambda_k : Q^Y -> Q^X, lambda_k g(x) = meet_y g(y)/k(x,y) (left) or
// meet_y k(x,y)\g(y) (right). Equals the residuum of h_k.
std::vector<Elem> inverse_transform(const Kernel& k, const QModule& src,
                                    const QModule& dst);

// Exhaustively verifies h_k f <= g  iff  f <= lambda_k g. Returns true on
// proof-of-exhaustion; on failure fills `witness` with the offending pair.
bool check_adjoint(const Kernel& k, const QModule& src, const QModule& dst,
                   std::string* witness = nullptr);

// nu = lambda_k . h_k, verified to be monotone, extensive, idempotent and
// to satisfy a * nu(f) <= nu(a * f). Throws ClosureViolation otherwise.
std::vector<Elem> nucleus_of(const Kernel& k, const QModule& src,
                             const QModule& dst);

// The quantale M_X(Q) on Q^{X*X} with pointwise join, the star product and
// the identity matrix as unit. Non-unital Q is unitalized first.
struct MatrixQuantale {
  Quantale q;                          // the validated matrix quantale
  std::shared_ptr<const Quantale> base;  // entry quantale (unitalized)
  int dim = 0;

  Elem encode(const Kernel& k) const;
  Kernel decode(Elem v, Handed side = Handed::left) const;
};
MatrixQuantale matrix_quantale(std::shared_ptr<const Quantale> q, int n);

// Inverse of the eta isomorphism: k(x,y) = h(e_x)(y).
Kernel kernel_of_endo(const QModule& free_m, const std::vector<Elem>& h);

// All kernels in Q^{rows x cols}, deterministic (lexicographic) order.
std::vector<Kernel> all_kernels(std::shared_ptr<const Quantale> q, int rows,
                                int cols, Handed side = Handed::left);

}  // namespace qwb
