#include "qwb/k0.hpp"

#include "qwb/ideal.hpp"

#include <algorithm>
#include <functional>

namespace qwb {

std::vector<Kernel> idempotent_kernels(std::shared_ptr<const Quantale> q,
                                       int n) {
  std::vector<Kernel> out;
  for (const Kernel& k : all_kernels(std::move(q), n, n))
    if (star(k, k) == k) out.push_back(k);
  return out;
}

QModule image_of_kernel(const Kernel& k) {
  if (k.rows != k.cols)
    throw Error("NotFree", "image_of_kernel needs a square kernel");
  QModule free = free_module(k.q, k.rows, k.side);
  std::vector<Elem> rows;
  for (int x = 0; x < k.rows; ++x) {
    std::vector<Elem> row(k.cols);
    for (int y = 0; y < k.cols; ++y) row[y] = k.at(x, y);
    rows.push_back(free_from_tuple(free, row));
  }
  auto carrier = submodule_generated(free, rows);
  return restrict_to_submodule(free, carrier).mod;
}

ProjectivityCertificate is_projective(const QModule& m,
                                      const std::vector<Elem>& generators) {
  QModule eff = effective_unital(m);
  auto gen_closure = submodule_generated(eff, generators);
  if (static_cast<int>(gen_closure.size()) != eff.size())
    throw Error("NotGenerating", "the given set does not generate the module");

  const int nx = static_cast<int>(generators.size());
  QModule free = free_module(eff.q, nx, eff.handed);
  std::vector<Elem> pi = extend_from_basis(free, eff, generators);

  auto ji = eff.lat.join_irreducibles();
  const int k = static_cast<int>(ji.size());
  std::vector<std::vector<Elem>> candidates(k);
  for (int i = 0; i < k; ++i)
    for (Elem u = 0; u < free.size(); ++u)
      if (pi[u] == ji[i]) candidates[i].push_back(u);

  ProjectivityCertificate cert;
  long searched = 0;
  std::vector<Elem> pick(k, 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == k) {
      ++searched;
      std::vector<Elem> mu(eff.size());
      for (Elem v = 0; v < eff.size(); ++v) {
        Elem acc = free.lat.bottom;
        for (int j = 0; j < k; ++j)
          if (eff.lat.leq(ji[j], v)) acc = free.lat.join(acc, pick[j]);
        mu[v] = acc;
      }
      for (Elem v = 0; v < eff.size(); ++v)
        if (pi[mu[v]] != v) return false;
      for (Elem v = 0; v < eff.size(); ++v)
        for (Elem w = v + 1; w < eff.size(); ++w)
          if (mu[eff.lat.join(v, w)] != free.lat.join(mu[v], mu[w]))
            return false;
      for (Elem a = 0; a < eff.q->size(); ++a)
        for (Elem v = 0; v < eff.size(); ++v)
          if (mu[eff.act(a, v)] != free.act(a, mu[v])) return false;
      cert.splitting = mu;
      return true;
    }
    for (Elem u : candidates[i]) {
      pick[i] = u;
      if (rec(i + 1)) return true;
    }
    return false;
  };

  if (rec(0)) {
    cert.projective = true;
    // The section induces a kernel k(x,_) = mu(x); Theorem-level assertions.
    Kernel ker;
    ker.q = free.q;
    ker.rows = ker.cols = nx;
    ker.side = eff.handed;
    ker.entries.resize(nx * nx);
    for (int x = 0; x < nx; ++x) {
      auto row = free_to_tuple(free, cert.splitting[generators[x]]);
      for (int y = 0; y < nx; ++y) ker.entries[x * nx + y] = row[y];
    }
    if (!(star(ker, ker) == ker))
      throw Error("ClosureViolation",
                  "kernel induced by a splitting is not idempotent");
    if (!is_isomorphic(eff, image_of_kernel(ker)))
      throw Error("ClosureViolation",
                  "module is not isomorphic to the image of its kernel");
    cert.kernel = std::move(ker);
  } else {
    cert.projective = false;
    cert.note = "no section among " + std::to_string(searched) +
                " join-compatible candidates (exhaustive)";
  }
  return cert;
}

std::optional<Kernel> projective_via_idempotents(const QModule& m, int n) {
  QModule eff = effective_unital(m);
  for (const Kernel& k : idempotent_kernels(eff.q, n))
    if (is_isomorphic(eff, image_of_kernel(k))) return k;
  return std::nullopt;
}

ProjectiveClasses projective_classes(std::shared_ptr<const Quantale> q,
                                     int gen_bound) {
  if (!q->flags.unital) q = std::make_shared<const Quantale>(unitalize(*q));
  ProjectiveClasses out;
  out.q = q;
  // the zero module: image of the bottom 1x1 kernel
  Kernel zero;
  zero.q = q;
  zero.rows = zero.cols = 1;
  zero.entries = {q->bottom()};
  out.reps.push_back(image_of_kernel(zero));

  for (int n = 1; n <= gen_bound; ++n)
    for (const Kernel& k : idempotent_kernels(q, n)) {
      QModule img = image_of_kernel(k);
      bool fresh = true;
      for (const QModule& rep : out.reps)
        if (is_isomorphic(rep, img)) {
          fresh = false;
          break;
        }
      if (fresh) out.reps.push_back(std::move(img));
    }
  return out;
}

namespace {

QModule sum_of(const ProjectiveClasses& classes, const std::vector<int>& idx) {
  QModule acc = classes.reps[0];
  for (int i : idx) acc = direct_sum(acc, classes.reps[i]);
  return acc;
}

}  // namespace

K0Verdict k0_equal(const ProjectiveClasses& classes, const K0Element& e1,
                   const K0Element& e2, int search_bound) {
  // Cardinality invariant: |.| is multiplicative under direct sum, hence
  // induces a group homomorphism into the positive rationals.
  auto card = [&](const std::vector<int>& idx) {
    long c = 1;
    for (int i : idx) c *= classes.reps[i].size();
    return c;
  };
  long lhs = card(e1.plus) * card(e2.minus);
  long rhs = card(e2.plus) * card(e1.minus);
  if (lhs != rhs) return K0Verdict::distinct;

  QModule a = sum_of(classes, e1.plus);
  for (int i : e2.minus) a = direct_sum(a, classes.reps[i]);
  QModule b = sum_of(classes, e2.plus);
  for (int i : e1.minus) b = direct_sum(b, classes.reps[i]);

  // P ranges over direct sums of at most search_bound class representatives.
  std::vector<std::vector<int>> stabilizers = {{}};
  std::function<void(std::vector<int>&, int, int)> gen =
      [&](std::vector<int>& cur, int start, int left) {
        if (left == 0) return;
        for (int i = start; i < static_cast<int>(classes.reps.size()); ++i) {
          cur.push_back(i);
          stabilizers.push_back(cur);
          gen(cur, i, left - 1);
          cur.pop_back();
        }
      };
  std::vector<int> cur;
  gen(cur, 0, search_bound);

  for (const auto& pidx : stabilizers) {
    QModule ap = a, bp = b;
    for (int i : pidx) {
      ap = direct_sum(ap, classes.reps[i]);
      bp = direct_sum(bp, classes.reps[i]);
    }
    if (ap.size() > 4096) continue;
    if (is_isomorphic(ap, bp)) return K0Verdict::equal;
  }
  return K0Verdict::unknown;
}

}  // namespace qwb
