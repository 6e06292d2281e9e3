#include "qwb/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qwb {

Congruence normalize_partition(std::vector<int> cls) {
  std::map<int, int> remap;
  int next = 0;
  for (int& c : cls) {
    auto [it, fresh] = remap.emplace(c, next);
    if (fresh) ++next;
    c = it->second;
  }
  return Congruence{std::move(cls), next};
}

Congruence identity_congruence(int n) {
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = i;
  return Congruence{std::move(cls), n};
}

Congruence all_congruence(int n) { return Congruence{std::vector<int>(n, 0), 1}; }

bool refines(const Congruence& a, const Congruence& b) {
  const int n = static_cast<int>(a.cls.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.related(i, j) && !b.related(i, j)) return false;
  return true;
}

Congruence intersect(const Congruence& a, const Congruence& b) {
  const int n = static_cast<int>(a.cls.size());
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = a.cls[i] * (n + 1) + b.cls[i];
  return normalize_partition(std::move(cls));
}

bool is_congruence_module(const QModule& m, const Congruence& c) {
  const int n = m.size();
  for (Elem v = 0; v < n; ++v)
    for (Elem w = 0; w < n; ++w) {
      if (!c.related(v, w)) continue;
      for (Elem u = 0; u < n; ++u)
        if (!c.related(m.lat.join(v, u), m.lat.join(w, u))) return false;
      for (Elem a = 0; a < m.q->size(); ++a)
        if (!c.related(m.act(a, v), m.act(a, w))) return false;
    }
  return true;
}

bool is_congruence_quantale(const Quantale& q, const Congruence& c) {
  const int n = q.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!c.related(a, b)) continue;
      for (Elem u = 0; u < n; ++u) {
        if (!c.related(q.lat.join(a, u), q.lat.join(b, u))) return false;
        if (!c.related(q.mul(a, u), q.mul(b, u))) return false;
        if (!c.related(q.mul(u, a), q.mul(u, b))) return false;
      }
    }
  return true;
}

namespace {

IdealCheck ideal_check(const FiniteSupLattice& lat,
                       const std::vector<Elem>& subset,
                       const std::vector<std::pair<Elem, Elem>>& images,
                       const std::vector<std::string>& image_names) {
  std::vector<char> in(lat.size(), 0);
  for (Elem v : subset) in[v] = 1;
  IdealCheck r;
  if (!in[lat.bottom]) {
    r.ok = false;
    r.clause = "joins";
    r.witness = {lat.names[lat.bottom]};
    return r;
  }
  for (Elem v : subset)
    for (Elem w : subset)
      if (!in[lat.join(v, w)]) {
        r.ok = false;
        r.clause = "joins";
        r.witness = {lat.names[v], lat.names[w]};
        return r;
      }
  for (Elem v : subset)
    for (Elem w = 0; w < lat.size(); ++w)
      if (lat.leq(w, v) && !in[w]) {
        r.ok = false;
        r.clause = "downset";
        r.witness = {lat.names[w], lat.names[v]};
        return r;
      }
  for (size_t i = 0; i < images.size(); ++i) {
    auto [src, img] = images[i];
    if (in[src] && !in[img]) {
      r.ok = false;
      r.clause = "action";
      r.witness = {image_names[i]};
      return r;
    }
  }
  return r;
}

}  // namespace

IdealCheck is_ideal_module(const QModule& m, const std::vector<Elem>& subset) {
  std::vector<std::pair<Elem, Elem>> images;
  std::vector<std::string> names;
  for (Elem v : subset)
    for (Elem a = 0; a < m.q->size(); ++a) {
      images.emplace_back(v, m.act(a, v));
      names.push_back(m.q->lat.names[a] + " * " + m.lat.names[v]);
    }
  return ideal_check(m.lat, subset, images, names);
}

IdealCheck is_ideal_quantale(const Quantale& q,
                             const std::vector<Elem>& subset) {
  std::vector<std::pair<Elem, Elem>> images;
  std::vector<std::string> names;
  for (Elem x : subset)
    for (Elem a = 0; a < q.size(); ++a) {
      images.emplace_back(x, q.mul(a, x));
      names.push_back(q.lat.names[a] + " * " + q.lat.names[x]);
      images.emplace_back(x, q.mul(x, a));
      names.push_back(q.lat.names[x] + " * " + q.lat.names[a]);
    }
  return ideal_check(q.lat, subset, images, names);
}

std::vector<Elem> downset(const FiniteSupLattice& lat, Elem v) {
  std::vector<Elem> out;
  for (Elem w = 0; w < lat.size(); ++w)
    if (lat.leq(w, v)) out.push_back(w);
  return out;
}

Ideal ideal_generated_module(const QModule& m, const std::vector<Elem>& s) {
  Elem v = m.lat.join_of(s);
  Elem gen = m.lat.join(v, m.act(m.q->top(), v));
  return Ideal{gen};
}

Ideal ideal_generated_quantale(const Quantale& q, const std::vector<Elem>& s) {
  Elem v = q.lat.join_of(s);
  Elem t = q.top();
  Elem gen = q.lat.join_of({v, q.mul(t, v), q.mul(v, t), q.mul(q.mul(t, v), t)});
  return Ideal{gen};
}

std::vector<Elem> ideal_elements_module(const QModule& m) {
  std::vector<Elem> out;
  for (Elem v = 0; v < m.size(); ++v)
    if (m.lat.leq(m.act(m.q->top(), v), v)) out.push_back(v);
  // join-closure (sup-sublattice)
  for (Elem v : out)
    for (Elem w : out) {
      Elem j = m.lat.join(v, w);
      if (!m.lat.leq(m.act(m.q->top(), j), j))
        throw Error("ClosureViolation", "ideal elements not join-closed",
                    {m.lat.names[v], m.lat.names[w]});
    }
  if (m.q->flags.commutative)
    for (Elem v : out)
      for (Elem a = 0; a < m.q->size(); ++a) {
        Elem u = m.act(a, v);
        if (!m.lat.leq(m.act(m.q->top(), u), u))
          throw Error("ClosureViolation", "ideal elements not action-closed",
                      {m.q->lat.names[a], m.lat.names[v]});
      }
  return out;
}

std::vector<Elem> ideal_elements_quantale(const Quantale& q) {
  return sided_elements(q, Side::two);
}

QModule effective_unital(const QModule& m) {
  if (m.q->flags.unital) return m;
  auto qe = std::make_shared<const Quantale>(unitalize(*m.q));
  const int n = m.q->size();
  const int nm = m.size();
  std::vector<Elem> act(2 * n * nm);
  for (Elem a = 0; a < n; ++a)
    for (Elem v = 0; v < nm; ++v) {
      act[a * nm + v] = m.act(a, v);
      act[(n + a) * nm + v] = m.lat.join(m.act(a, v), v);
    }
  return validate_module(qe, m.lat, act, m.handed);
}

Elem i_hat(const QModule& m, const Ideal& i, Elem v) {
  QModule eff = effective_unital(m);
  Elem acc = eff.q->bottom();
  for (Elem a = 0; a < eff.q->size(); ++a)
    if (eff.lat.leq(eff.act(a, v), i.generator)) acc = eff.q->lat.join(acc, a);
  return acc;
}

Congruence theta_from_ideal(const QModule& m, const Ideal& i) {
  QModule eff = effective_unital(m);
  std::vector<int> sig(m.size());
  for (Elem v = 0; v < m.size(); ++v) {
    Elem acc = eff.q->bottom();
    for (Elem a = 0; a < eff.q->size(); ++a)
      if (eff.lat.leq(eff.act(a, v), i.generator))
        acc = eff.q->lat.join(acc, a);
    sig[v] = acc;
  }
  return normalize_partition(std::move(sig));
}

Congruence quantale_theta(const Quantale& q, Elem i) {
  if (!q.lat.leq(q.mul(i, q.top()), i) || !q.lat.leq(q.mul(q.top(), i), i))
    throw Error("NotTwoSided", "'" + q.lat.names[i] + "' is not two-sided",
                {q.lat.names[i]});
  const Quantale* host = &q;
  Quantale ext;
  if (!q.flags.unital) {
    ext = unitalize(q);
    host = &ext;
  }
  std::vector<int> sig(q.size());
  for (Elem a = 0; a < q.size(); ++a)
    sig[a] = host->over(i, a) * host->size() + host->under(a, i);
  return normalize_partition(std::move(sig));
}

namespace {

template <typename Pred>
std::vector<Congruence> enumerate_partitions(int n, int bound, Pred keep) {
  if (n > bound)
    throw Error("CarrierTooLarge",
                "carrier size " + std::to_string(n) +
                    " exceeds enumeration bound " + std::to_string(bound));
  std::vector<Congruence> out;
  std::vector<int> cls(n, 0);
  // restricted growth strings
  auto rec = [&](auto&& self, int i, int maxc) -> void {
    if (i == n) {
      Congruence c = normalize_partition(cls);
      if (keep(c)) out.push_back(std::move(c));
      return;
    }
    for (int c = 0; c <= maxc + 1 && c < n; ++c) {
      cls[i] = c;
      self(self, i + 1, std::max(maxc, c));
    }
  };
  rec(rec, 0, -1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Congruence> enumerate_congruences_module(const QModule& m,
                                                     int bound) {
  return enumerate_partitions(m.size(), bound, [&](const Congruence& c) {
    return is_congruence_module(m, c);
  });
}

std::vector<Congruence> enumerate_congruences_quantale(const Quantale& q,
                                                       int bound) {
  return enumerate_partitions(q.size(), bound, [&](const Congruence& c) {
    return is_congruence_quantale(q, c);
  });
}

namespace {

// Class representatives (the class maximum, which exists by join
// compatibility), in deterministic class order.
std::vector<Elem> class_reps(const FiniteSupLattice& lat, const Congruence& c) {
  std::vector<Elem> rep(c.num_classes, -1);
  for (Elem v = 0; v < lat.size(); ++v) {
    Elem& r = rep[c.cls[v]];
    r = (r < 0) ? v : lat.join(r, v);
  }
  return rep;
}

FiniteSupLattice quotient_lattice(const FiniteSupLattice& lat,
                                  const Congruence& c,
                                  const std::vector<Elem>& rep) {
  const int k = c.num_classes;
  std::vector<std::string> names(k);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (int i = 0; i < k; ++i) {
    names[i] = "[" + lat.names[rep[i]] + "]";
    for (int j = 0; j < k; ++j)
      if (c.cls[lat.join(rep[i], rep[j])] == c.cls[rep[j]])
        pairs.emplace_back(i, j);
  }
  return validate_sup_lattice_indexed(names, pairs);
}

}  // namespace

QModule quotient_module(const QModule& m, const Congruence& c) {
  if (!is_congruence_module(m, c))
    throw Error("NotACongruence", "partition is not a module congruence");
  auto rep = class_reps(m.lat, c);
  FiniteSupLattice lat = quotient_lattice(m.lat, c, rep);
  const int k = c.num_classes;
  std::vector<Elem> act(m.q->size() * k);
  for (Elem a = 0; a < m.q->size(); ++a)
    for (int i = 0; i < k; ++i) act[a * k + i] = c.cls[m.act(a, rep[i])];
  return validate_module(m.q, lat, act, m.handed);
}

Quantale quotient_quantale(const Quantale& q, const Congruence& c) {
  if (!is_congruence_quantale(q, c))
    throw Error("NotACongruence", "partition is not a quantale congruence");
  auto rep = class_reps(q.lat, c);
  FiniteSupLattice lat = quotient_lattice(q.lat, c, rep);
  const int k = c.num_classes;
  std::vector<Elem> mul(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) mul[i * k + j] = c.cls[q.mul(rep[i], rep[j])];
  std::optional<Elem> unit;
  if (q.unit) unit = c.cls[*q.unit];
  return validate_quantale(lat, mul, unit);
}

bool is_simple(const Quantale& q, int bound) {
  if (q.size() == 1) return true;
  return enumerate_congruences_quantale(q, bound).size() == 2;
}

bool is_semisimple(const Quantale& q, int bound) {
  auto congs = enumerate_congruences_quantale(q, bound);
  Congruence acc = all_congruence(q.size());
  for (const auto& c : congs) {
    Quantale quo = quotient_quantale(q, c);
    if (is_simple(quo, bound)) acc = intersect(acc, c);
  }
  return acc == identity_congruence(q.size());
}

}  // namespace qwb
