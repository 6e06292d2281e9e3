#include "qwb/module.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "iso_util.hpp"

namespace qwb {

namespace {

Elem m1_expected(const QModule& m, Elem a, Elem b, Elem v) {
  // left:  (a.b)*v = a*(b*v); right (stored as act(a,v) = v*a): (a.b) acts
  // as first a then b.
  return m.handed == Handed::left ? m.act(a, m.act(b, v))
                                  : m.act(b, m.act(a, v));
}

}  // namespace

bool same_scalars(const QModule& a, const QModule& b) {
  return a.handed == b.handed && (a.q == b.q || *a.q == *b.q);
}

QModule validate_module(std::shared_ptr<const Quantale> q,
                        const FiniteSupLattice& carrier,
                        const std::vector<Elem>& action, Handed handed) {
  const int nq = q->size();
  const int nm = carrier.size();
  if (static_cast<int>(action.size()) != nq * nm)
    throw Error("M2Violation", "action table is not total");
  for (Elem v : action)
    if (v < 0 || v >= nm)
      throw Error("UnknownElement", "action table entry out of range");

  QModule m;
  m.q = std::move(q);
  m.lat = carrier;
  m.act_tab = action;
  m.handed = handed;

  for (Elem a = 0; a < nq; ++a)
    for (Elem b = 0; b < nq; ++b)
      for (Elem v = 0; v < nm; ++v)
        if (m.act(m.q->mul(a, b), v) != m1_expected(m, a, b, v))
          throw Error("M1Violation",
                      "(" + m.q->lat.names[a] + "*" + m.q->lat.names[b] +
                          ")*" + carrier.names[v],
                      {m.q->lat.names[a], m.q->lat.names[b], carrier.names[v]});

  for (Elem a = 0; a < nq; ++a) {
    if (m.act(a, carrier.bottom) != carrier.bottom)
      throw Error("M2Violation",
                  "'" + m.q->lat.names[a] + "' does not absorb bottom",
                  {m.q->lat.names[a]});
    for (Elem v = 0; v < nm; ++v)
      for (Elem w = v + 1; w < nm; ++w)
        if (m.act(a, carrier.join(v, w)) !=
            carrier.join(m.act(a, v), m.act(a, w)))
          throw Error("M2Violation",
                      m.q->lat.names[a] + "*(" + carrier.names[v] + " v " +
                          carrier.names[w] + ")",
                      {m.q->lat.names[a], carrier.names[v], carrier.names[w]});
  }
  for (Elem v = 0; v < nm; ++v) {
    if (m.act(m.q->bottom(), v) != carrier.bottom)
      throw Error("M2Violation", "bottom scalar fails on '" + carrier.names[v] + "'",
                  {carrier.names[v]});
    for (Elem a = 0; a < nq; ++a)
      for (Elem b = a + 1; b < nq; ++b)
        if (m.act(m.q->lat.join(a, b), v) !=
            carrier.join(m.act(a, v), m.act(b, v)))
          throw Error("M2Violation",
                      "(" + m.q->lat.names[a] + " v " + m.q->lat.names[b] +
                          ")*" + carrier.names[v],
                      {m.q->lat.names[a], m.q->lat.names[b], carrier.names[v]});
  }

  if (m.q->flags.unital)
    for (Elem v = 0; v < nm; ++v)
      if (m.act(*m.q->unit, v) != v)
        throw Error("M3Violation", "unit fails on '" + carrier.names[v] + "'",
                    {carrier.names[v]});
  return m;
}

QModule free_module(std::shared_ptr<const Quantale> q, int rank,
                    Handed handed) {
  if (rank <= 0) throw Error("BudgetExceeded", "free module rank must be positive");
  if (!q->flags.unital)
    q = std::make_shared<const Quantale>(unitalize(*q));
  const int nq = q->size();
  long carrier = 1;
  for (int i = 0; i < rank; ++i) {
    carrier *= nq;
    if (carrier > 100000)
      throw Error("BudgetExceeded", "free module carrier too large");
  }
  const int nm = static_cast<int>(carrier);

  auto digits = [&](Elem v) {
    std::vector<Elem> d(rank);
    for (int i = 0; i < rank; ++i) {
      d[i] = v % nq;
      v /= nq;
    }
    return d;
  };
  std::vector<std::string> names(nm);
  for (Elem v = 0; v < nm; ++v) {
    auto d = digits(v);
    std::string s = "(";
    for (int i = 0; i < rank; ++i) {
      if (i) s += ",";
      s += q->lat.names[d[i]];
    }
    names[v] = s + ")";
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem v = 0; v < nm; ++v) {
    auto dv = digits(v);
    for (Elem w = 0; w < nm; ++w) {
      auto dw = digits(w);
      bool le = true;
      for (int i = 0; i < rank && le; ++i)
        if (!q->lat.leq(dv[i], dw[i])) le = false;
      if (le) pairs.emplace_back(v, w);
    }
  }
  FiniteSupLattice lat = validate_sup_lattice_indexed(names, pairs);

  std::vector<Elem> act(nq * nm);
  for (Elem a = 0; a < nq; ++a)
    for (Elem v = 0; v < nm; ++v) {
      auto d = digits(v);
      Elem out = 0;
      long mult = 1;
      for (int i = 0; i < rank; ++i) {
        Elem digit = handed == Handed::left ? q->mul(a, d[i]) : q->mul(d[i], a);
        out += static_cast<Elem>(digit * mult);
        mult *= nq;
      }
      act[a * nm + v] = out;
    }

  QModule m = validate_module(q, lat, act, handed);
  m.free_rank = rank;
  m.basis.resize(rank);
  for (int x = 0; x < rank; ++x) {
    long mult = 1;
    for (int i = 0; i < x; ++i) mult *= nq;
    m.basis[x] = static_cast<Elem>(*q->unit * mult);
  }
  return m;
}

Elem free_from_tuple(const QModule& m, const std::vector<Elem>& tuple) {
  if (m.free_rank <= 0 || static_cast<int>(tuple.size()) != m.free_rank)
    throw Error("NotFree", "module is not free or tuple has wrong arity");
  const int nq = m.q->size();
  Elem v = 0;
  long mult = 1;
  for (int i = 0; i < m.free_rank; ++i) {
    v += static_cast<Elem>(tuple[i] * mult);
    mult *= nq;
  }
  return v;
}

std::vector<Elem> free_to_tuple(const QModule& m, Elem v) {
  if (m.free_rank <= 0) throw Error("NotFree", "module is not free");
  const int nq = m.q->size();
  std::vector<Elem> d(m.free_rank);
  for (int i = 0; i < m.free_rank; ++i) {
    d[i] = v % nq;
    v /= nq;
  }
  return d;
}

Elem act_under(const QModule& m, Elem a, Elem v) {
  Elem acc = m.lat.bottom;
  for (Elem u = 0; u < m.size(); ++u)
    if (m.lat.leq(m.act(a, u), v)) acc = m.lat.join(acc, u);
  return acc;
}

Elem act_over(const QModule& m, Elem v, Elem w) {
  Elem acc = m.q->bottom();
  for (Elem b = 0; b < m.q->size(); ++b)
    if (m.lat.leq(m.act(b, w), v)) acc = m.q->lat.join(acc, b);
  return acc;
}

std::pair<Elem, Elem> action_residuals(const QModule& m, Elem a, Elem v,
                                       Elem w) {
  if (a < 0 || a >= m.q->size() || v < 0 || v >= m.size() || w < 0 ||
      w >= m.size())
    throw Error("UnknownElement", "residual argument out of range");
  return {act_under(m, a, v), act_over(m, v, w)};
}

QModule op_module(const QModule& m) {
  FiniteSupLattice dual = dual_lattice(m.lat);
  const int nq = m.q->size();
  std::vector<Elem> act(nq * m.size());
  for (Elem a = 0; a < nq; ++a)
    for (Elem v = 0; v < m.size(); ++v) act[a * m.size() + v] = act_under(m, a, v);
  Handed flipped = m.handed == Handed::left ? Handed::right : Handed::left;
  return validate_module(m.q, dual, act, flipped);
}

std::vector<Elem> submodule_generated(const QModule& m,
                                      const std::vector<Elem>& s) {
  std::set<Elem> cur(s.begin(), s.end());
  cur.insert(m.lat.bottom);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> snapshot(cur.begin(), cur.end());
    for (Elem v : snapshot) {
      for (Elem w : snapshot)
        if (cur.insert(m.lat.join(v, w)).second) grew = true;
      for (Elem a = 0; a < m.q->size(); ++a)
        if (cur.insert(m.act(a, v)).second) grew = true;
    }
  }
  return {cur.begin(), cur.end()};
}

Submodule restrict_to_submodule(const QModule& m,
                                const std::vector<Elem>& carrier) {
  const int k = static_cast<int>(carrier.size());
  std::vector<int> pos(m.size(), -1);
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    pos[carrier[i]] = i;
    names[i] = m.lat.names[carrier[i]];
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (m.lat.leq(carrier[i], carrier[j])) pairs.emplace_back(i, j);
  FiniteSupLattice lat = validate_sup_lattice_indexed(names, pairs);
  std::vector<Elem> act(m.q->size() * k);
  for (Elem a = 0; a < m.q->size(); ++a)
    for (int i = 0; i < k; ++i) {
      Elem img = m.act(a, carrier[i]);
      if (pos[img] < 0)
        throw Error("ClosureViolation", "subset is not action-closed",
                    {m.q->lat.names[a], m.lat.names[carrier[i]]});
      act[a * k + i] = pos[img];
    }
  Submodule sub;
  sub.mod = validate_module(m.q, lat, act, m.handed);
  sub.carrier = carrier;
  return sub;
}

QModule direct_sum(const QModule& a, const QModule& b) {
  if (!same_scalars(a, b))
    throw Error("ScalarMismatch", "direct sum needs equal scalar quantales");
  const int na = a.size(), nb = b.size();
  const int n = na * nb;
  std::vector<std::string> names(n);
  std::vector<std::pair<Elem, Elem>> pairs;
  auto code = [nb](Elem x, Elem y) { return x * nb + y; };
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y) {
      names[code(x, y)] = "(" + a.lat.names[x] + "|" + b.lat.names[y] + ")";
      for (Elem u = 0; u < na; ++u)
        for (Elem v = 0; v < nb; ++v)
          if (a.lat.leq(x, u) && b.lat.leq(y, v))
            pairs.emplace_back(code(x, y), code(u, v));
    }
  FiniteSupLattice lat = validate_sup_lattice_indexed(names, pairs);
  std::vector<Elem> act(a.q->size() * n);
  for (Elem s = 0; s < a.q->size(); ++s)
    for (Elem x = 0; x < na; ++x)
      for (Elem y = 0; y < nb; ++y)
        act[s * n + code(x, y)] = code(a.act(s, x), b.act(s, y));
  return validate_module(a.q, lat, act, a.handed);
}

std::vector<Elem> validate_hom(const QModule& m, const QModule& n,
                               const std::vector<Elem>& map) {
  if (!same_scalars(m, n))
    throw Error("ScalarMismatch", "hom endpoints have different scalars");
  if (static_cast<int>(map.size()) != m.size())
    throw Error("NotJoinPreserving", "map is not total");
  if (map[m.lat.bottom] != n.lat.bottom)
    throw Error("NotJoinPreserving", "bottom not preserved",
                {m.lat.names[m.lat.bottom]});
  for (Elem v = 0; v < m.size(); ++v)
    for (Elem w = v + 1; w < m.size(); ++w)
      if (map[m.lat.join(v, w)] != n.lat.join(map[v], map[w]))
        throw Error("NotJoinPreserving",
                    "join of '" + m.lat.names[v] + "' and '" + m.lat.names[w] + "'",
                    {m.lat.names[v], m.lat.names[w]});
  for (Elem a = 0; a < m.q->size(); ++a)
    for (Elem v = 0; v < m.size(); ++v)
      if (map[m.act(a, v)] != n.act(a, map[v]))
        throw Error("NotEquivariant",
                    m.q->lat.names[a] + " * " + m.lat.names[v],
                    {m.q->lat.names[a], m.lat.names[v]});
  return map;
}

std::vector<Elem> extend_from_basis(const QModule& free_m, const QModule& n,
                                    const std::vector<Elem>& images) {
  if (free_m.free_rank <= 0)
    throw Error("NotFree", "extend_from_basis needs a free source");
  if (static_cast<int>(images.size()) != free_m.free_rank)
    throw Error("NotFree", "one image per basis element required");
  if (!same_scalars(free_m, n))
    throw Error("ScalarMismatch", "basis images live over different scalars");
  std::vector<Elem> map(free_m.size());
  for (Elem v = 0; v < free_m.size(); ++v) {
    auto d = free_to_tuple(free_m, v);
    Elem acc = n.lat.bottom;
    for (int x = 0; x < free_m.free_rank; ++x)
      acc = n.lat.join(acc, n.act(d[x], images[x]));
    map[v] = acc;
  }
  return map;
}

std::optional<std::vector<Elem>> is_isomorphic(const QModule& a,
                                               const QModule& b) {
  if (!same_scalars(a, b)) return std::nullopt;
  return detail::find_order_bijection(
      a.lat, b.lat, [&](const std::vector<Elem>& f) {
        for (Elem s = 0; s < a.q->size(); ++s)
          for (Elem v = 0; v < a.size(); ++v)
            if (f[a.act(s, v)] != b.act(s, f[v])) return false;
        return true;
      });
}

HomObject hom_object(const QModule& m, const QModule& n) {
  if (!same_scalars(m, n))
    throw Error("ScalarMismatch", "hom object needs equal scalars");
  auto ji = m.lat.join_irreducibles();
  const int k = static_cast<int>(ji.size());

  std::set<std::vector<Elem>> found;
  std::vector<Elem> assign(k, 0);
  // Enumerate assignments on join-irreducibles, extend by joins, and keep
  // the maps that are genuine homs.
  long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= n.size();
    if (total > 2000000) throw Error("BudgetExceeded", "hom space too large");
  }
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < k; ++i) {
      assign[i] = static_cast<Elem>(c % n.size());
      c /= n.size();
    }
    std::vector<Elem> f(m.size());
    for (Elem v = 0; v < m.size(); ++v) {
      Elem acc = n.lat.bottom;
      for (int i = 0; i < k; ++i)
        if (m.lat.leq(ji[i], v)) acc = n.lat.join(acc, assign[i]);
      f[v] = acc;
    }
    bool ok = true;
    for (Elem v = 0; v < m.size() && ok; ++v)
      for (Elem w = v + 1; w < m.size() && ok; ++w)
        if (f[m.lat.join(v, w)] != n.lat.join(f[v], f[w])) ok = false;
    for (Elem a = 0; a < m.q->size() && ok; ++a)
      for (Elem v = 0; v < m.size() && ok; ++v)
        if (f[m.act(a, v)] != n.act(a, f[v])) ok = false;
    if (ok) found.insert(std::move(f));
  }

  HomObject out;
  out.homs.assign(found.begin(), found.end());
  const int h = static_cast<int>(out.homs.size());
  std::vector<std::string> names(h);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (int i = 0; i < h; ++i) {
    names[i] = "h" + std::to_string(i);
    for (int j = 0; j < h; ++j) {
      bool le = true;
      for (Elem v = 0; v < m.size() && le; ++v)
        if (!n.lat.leq(out.homs[i][v], out.homs[j][v])) le = false;
      if (le) pairs.emplace_back(i, j);
    }
  }
  out.lat = validate_sup_lattice_indexed(names, pairs);

  if (m.q->flags.commutative) {
    std::map<std::vector<Elem>, int> index;
    for (int i = 0; i < h; ++i) index[out.homs[i]] = i;
    std::vector<Elem> act(m.q->size() * h);
    bool closed = true;
    for (Elem a = 0; a < m.q->size() && closed; ++a)
      for (int i = 0; i < h; ++i) {
        std::vector<Elem> g(m.size());
        for (Elem v = 0; v < m.size(); ++v) g[v] = n.act(a, out.homs[i][v]);
        auto it = index.find(g);
        if (it == index.end()) {
          closed = false;
          break;
        }
        act[a * h + i] = it->second;
      }
    if (closed)
      out.as_module = validate_module(m.q, out.lat, act, m.handed);
  }
  return out;
}

}  // namespace qwb
