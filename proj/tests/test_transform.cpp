#include <doctest.h>

#include "qwb/fixtures.hpp"
#include "qwb/transform.hpp"

using namespace qwb;

TEST_CASE("kernel star and identity over B2") {
  auto q = builtin_fixtures().quantale("B2");
  Kernel id = kernel_identity(q, 2);
  CHECK(id.entries == std::vector<Elem>{1, 0, 0, 1});
  Kernel k{q, 2, 2, {1, 1, 0, 0}, Handed::left};
  CHECK(star(id, k) == k);
  CHECK(star(k, id) == k);
  CHECK(star(k, k) == k);  // idempotent
  Kernel n{q, 2, 2, {0, 1, 0, 0}, Handed::left};
  CHECK(star(n, n).entries == std::vector<Elem>{0, 0, 0, 0});
}

TEST_CASE("transform of a kernel is a hom and round-trips") {
  auto q = builtin_fixtures().quantale("L3");
  QModule f = free_module(q, 2);
  for (const Kernel& k : all_kernels(q, 2, 2)) {
    auto h = transform(k, f, f);
    CHECK(kernel_of_endo(f, h) == k);
  }
  CHECK(all_kernels(q, 2, 2).size() == 81);
}

TEST_CASE("inverse transform is the residuum; adjunction holds") {
  auto q = builtin_fixtures().quantale("L3");
  QModule f = free_module(q, 2);
  Kernel k{q, 2, 2, {1, 2, 0, 1}, Handed::left};
  auto fwd = transform(k, f, f);
  auto back = inverse_transform(k, f, f);
  auto res = residuum_of_map(f.lat, f.lat, fwd);
  CHECK(back == res.residuum);
  std::string w;
  CHECK(check_adjoint(k, f, f, &w));
  CHECK(w.empty());
  // the closure operator passes the nucleus checks
  auto nu = nucleus_of(k, f, f);
  for (Elem v = 0; v < f.size(); ++v) CHECK(f.lat.leq(v, nu[v]));
}

TEST_CASE("right-handed kernels multiply on the other side") {
  auto q = builtin_fixtures().quantale("PS2");
  auto base = std::make_shared<const Quantale>(unitalize(*q));
  QModule fl = free_module(base, 1, Handed::left);
  QModule fr = free_module(base, 1, Handed::right);
  Elem p = base->lat.index_of("p");
  Kernel kl{base, 1, 1, {p}, Handed::left};
  Kernel kr{base, 1, 1, {p}, Handed::right};
  auto hl = transform(kl, fl, fl);
  auto hr = transform(kr, fr, fr);
  Elem v = base->lat.index_of("q");
  CHECK(hl[v] == base->mul(v, p));  // h_k f(y) = f(x).k(x,y)
  CHECK(hr[v] == base->mul(p, v));  // h_k f(y) = k(x,y).f(x)
}

TEST_CASE("matrix quantale encodes star") {
  auto q = builtin_fixtures().quantale("B2");
  MatrixQuantale mq = matrix_quantale(q, 2);
  CHECK(mq.q.size() == 16);
  CHECK(mq.q.flags.unital);
  Kernel id = kernel_identity(q, 2);
  CHECK(mq.encode(id) == *mq.q.unit);
  for (const Kernel& k : all_kernels(q, 2, 2)) {
    CHECK(mq.decode(mq.encode(k)) == k);
    CHECK(mq.q.mul(mq.encode(k), mq.encode(id)) == mq.encode(k));
  }
  // the matrix quantale over a non-trivial base is never commutative
  CHECK_FALSE(mq.q.flags.commutative);
}
