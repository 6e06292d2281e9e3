#include "qwb/transform.hpp"

namespace qwb {

namespace {

std::shared_ptr<const Quantale> unital_scalars(
    std::shared_ptr<const Quantale> q) {
  if (q->flags.unital) return q;
  return std::make_shared<const Quantale>(unitalize(*q));
}

}  // namespace

Kernel kernel_identity(std::shared_ptr<const Quantale> q, int n, Handed side) {
  q = unital_scalars(std::move(q));
  Kernel k;
  k.rows = k.cols = n;
  k.side = side;
  k.entries.assign(n * n, q->bottom());
  for (int i = 0; i < n; ++i) k.entries[i * n + i] = *q->unit;
  k.q = std::move(q);
  return k;
}

Kernel star(const Kernel& h, const Kernel& k) {
  if (h.cols != k.rows)
    throw Error("ScalarMismatch", "kernel dimensions do not compose");
  const Quantale& q = *h.q;
  Kernel out;
  out.q = h.q;
  out.rows = h.rows;
  out.cols = k.cols;
  out.side = h.side;
  out.entries.assign(out.rows * out.cols, q.bottom());
  for (int x = 0; x < out.rows; ++x)
    for (int y = 0; y < out.cols; ++y) {
      Elem acc = q.bottom();
      for (int z = 0; z < h.cols; ++z)
        acc = q.lat.join(acc, q.mul(h.at(x, z), k.at(z, y)));
      out.entries[x * out.cols + y] = acc;
    }
  return out;
}

std::vector<Elem> transform(const Kernel& k, const QModule& src,
                            const QModule& dst) {
  if (src.free_rank != k.rows || dst.free_rank != k.cols)
    throw Error("NotFree", "transform endpoints must be free of matching rank");
  const Quantale& q = *src.q;
  std::vector<Elem> h(src.size());
  for (Elem v = 0; v < src.size(); ++v) {
    auto f = free_to_tuple(src, v);
    std::vector<Elem> g(k.cols, q.bottom());
    for (int y = 0; y < k.cols; ++y)
      for (int x = 0; x < k.rows; ++x) {
        Elem prod = k.side == Handed::left ? q.mul(f[x], k.at(x, y))
                                           : q.mul(k.at(x, y), f[x]);
        g[y] = q.lat.join(g[y], prod);
      }
    h[v] = free_from_tuple(dst, g);
  }
  return validate_hom(src, dst, h);
}

std::vector<Elem> inverse_transform(const Kernel& k, const QModule& src,
                                    const QModule& dst) {
  if (src.free_rank != k.rows || dst.free_rank != k.cols)
    throw Error("NotFree", "transform endpoints must be free of matching rank");
  const Quantale& q = *src.q;
  std::vector<Elem> lambda(dst.size());
  for (Elem w = 0; w < dst.size(); ++w) {
    auto g = free_to_tuple(dst, w);
    std::vector<Elem> f(k.rows, q.top());
    for (int x = 0; x < k.rows; ++x)
      for (int y = 0; y < k.cols; ++y) {
        Elem res = k.side == Handed::left ? q.over(g[y], k.at(x, y))
                                          : q.under(k.at(x, y), g[y]);
        f[x] = q.lat.meet(f[x], res);
      }
    lambda[w] = free_from_tuple(src, f);
  }
  return lambda;
}

bool check_adjoint(const Kernel& k, const QModule& src, const QModule& dst,
                   std::string* witness) {
  auto h = transform(k, src, dst);
  auto lambda = inverse_transform(k, src, dst);
  for (Elem f = 0; f < src.size(); ++f)
    for (Elem g = 0; g < dst.size(); ++g) {
      bool lhs = dst.lat.leq(h[f], g);
      bool rhs = src.lat.leq(f, lambda[g]);
      if (lhs != rhs) {
        if (witness)
          *witness = "f=" + src.lat.names[f] + " g=" + dst.lat.names[g];
        return false;
      }
    }
  return true;
}

std::vector<Elem> nucleus_of(const Kernel& k, const QModule& src,
                             const QModule& dst) {
  auto h = transform(k, src, dst);
  auto lambda = inverse_transform(k, src, dst);
  std::vector<Elem> nu(src.size());
  for (Elem f = 0; f < src.size(); ++f) nu[f] = lambda[h[f]];
  for (Elem f = 0; f < src.size(); ++f) {
    if (!src.lat.leq(f, nu[f]))
      throw Error("ClosureViolation", "nucleus not extensive",
                  {src.lat.names[f]});
    if (nu[nu[f]] != nu[f])
      throw Error("ClosureViolation", "nucleus not idempotent",
                  {src.lat.names[f]});
    for (Elem g = 0; g < src.size(); ++g)
      if (src.lat.leq(f, g) && !src.lat.leq(nu[f], nu[g]))
        throw Error("ClosureViolation", "nucleus not monotone",
                    {src.lat.names[f], src.lat.names[g]});
    for (Elem a = 0; a < src.q->size(); ++a)
      if (!src.lat.leq(src.act(a, nu[f]), nu[src.act(a, f)]))
        throw Error("ClosureViolation", "nucleus not action-compatible",
                    {src.q->lat.names[a], src.lat.names[f]});
  }
  return nu;
}

Elem MatrixQuantale::encode(const Kernel& k) const {
  const int nq = base->size();
  Elem v = 0;
  long mult = 1;
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      v += static_cast<Elem>(k.at(x, y) * mult);
      mult *= nq;
    }
  return v;
}

Kernel MatrixQuantale::decode(Elem v, Handed side) const {
  const int nq = base->size();
  Kernel k;
  k.q = base;
  k.rows = k.cols = dim;
  k.side = side;
  k.entries.assign(dim * dim, 0);
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      k.entries[x * dim + y] = v % nq;
      v /= nq;
    }
  return k;
}

MatrixQuantale matrix_quantale(std::shared_ptr<const Quantale> q, int n) {
  MatrixQuantale mq;
  mq.base = unital_scalars(std::move(q));
  mq.dim = n;
  const int nq = mq.base->size();
  long carrier = 1;
  for (int i = 0; i < n * n; ++i) {
    carrier *= nq;
    if (carrier > 100000)
      throw Error("BudgetExceeded", "matrix quantale carrier too large");
  }
  const int nm = static_cast<int>(carrier);

  auto entry = [&](Elem v, int x, int y) {
    for (int i = 0; i < x * n + y; ++i) v /= nq;
    return v % nq;
  };

  std::vector<std::string> names(nm);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem v = 0; v < nm; ++v) {
    std::string s = "[";
    for (int x = 0; x < n; ++x) {
      if (x) s += ";";
      for (int y = 0; y < n; ++y) {
        if (y) s += ",";
        s += mq.base->lat.names[entry(v, x, y)];
      }
    }
    names[v] = s + "]";
  }
  for (Elem v = 0; v < nm; ++v)
    for (Elem w = 0; w < nm; ++w) {
      bool le = true;
      for (int x = 0; x < n && le; ++x)
        for (int y = 0; y < n && le; ++y)
          if (!mq.base->lat.leq(entry(v, x, y), entry(w, x, y))) le = false;
      if (le) pairs.emplace_back(v, w);
    }
  FiniteSupLattice lat = validate_sup_lattice_indexed(names, pairs);

  std::vector<Elem> mul(static_cast<size_t>(nm) * nm);
  for (Elem v = 0; v < nm; ++v)
    for (Elem w = 0; w < nm; ++w) {
      Elem out = 0;
      long mult = 1;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          Elem acc = mq.base->bottom();
          for (int z = 0; z < n; ++z)
            acc = mq.base->lat.join(
                acc, mq.base->mul(entry(v, x, z), entry(w, z, y)));
          out += static_cast<Elem>(acc * mult);
          mult *= nq;
        }
      mul[static_cast<size_t>(v) * nm + w] = out;
    }
  Elem id = mq.encode(kernel_identity(mq.base, n));
  mq.q = validate_quantale(lat, mul, id);
  return mq;
}

Kernel kernel_of_endo(const QModule& free_m, const std::vector<Elem>& h) {
  if (free_m.free_rank <= 0)
    throw Error("NotFree", "kernel_of_endo needs a free module");
  const int n = free_m.free_rank;
  Kernel k;
  k.q = free_m.q;
  k.rows = k.cols = n;
  k.side = free_m.handed;
  k.entries.assign(n * n, 0);
  for (int x = 0; x < n; ++x) {
    auto row = free_to_tuple(free_m, h[free_m.basis[x]]);
    for (int y = 0; y < n; ++y) k.entries[x * n + y] = row[y];
  }
  return k;
}

std::vector<Kernel> all_kernels(std::shared_ptr<const Quantale> q, int rows,
                                int cols, Handed side) {
  q = unital_scalars(std::move(q));
  const int nq = q->size();
  long total = 1;
  for (int i = 0; i < rows * cols; ++i) {
    total *= nq;
    if (total > 2000000) throw Error("BudgetExceeded", "kernel space too large");
  }
  std::vector<Kernel> out;
  out.reserve(total);
  for (long code = 0; code < total; ++code) {
    Kernel k;
    k.q = q;
    k.rows = rows;
    k.cols = cols;
    k.side = side;
    k.entries.resize(rows * cols);
    long c = code;
    for (int i = 0; i < rows * cols; ++i) {
      k.entries[i] = static_cast<Elem>(c % nq);
      c /= nq;
    }
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace qwb
