#include "qwb/saturation.hpp"

#include <algorithm>

namespace qwb {

bool is_saturated(const Quantale& q, const RelationSpec& r, Elem s,
                  std::string* witness) {
  auto name = [&](Elem x) { return q.lat.names[x]; };
  for (auto [a, b] : r) {
    for (Elem c = 0; c < q.size(); ++c)
      for (Elem d = 0; d < q.size(); ++d) {
        bool la = q.lat.leq(q.mul(q.mul(c, a), d), s);
        bool lb = q.lat.leq(q.mul(q.mul(c, b), d), s);
        if (la != lb) {
          if (witness)
            *witness = "(c,d)=(" + name(c) + "," + name(d) + ") for (" +
                       name(a) + "," + name(b) + ")";
          return false;
        }
      }
    if (q.flags.unital) continue;  // clauses (ii)-(iv) are redundant
    for (Elem c = 0; c < q.size(); ++c) {
      if (q.lat.leq(q.mul(a, c), s) != q.lat.leq(q.mul(b, c), s)) {
        if (witness) *witness = "right context c=" + name(c);
        return false;
      }
      if (q.lat.leq(q.mul(c, a), s) != q.lat.leq(q.mul(c, b), s)) {
        if (witness) *witness = "left context c=" + name(c);
        return false;
      }
    }
    if (q.lat.leq(a, s) != q.lat.leq(b, s)) {
      if (witness) *witness = "bare pair (" + name(a) + "," + name(b) + ")";
      return false;
    }
  }
  return true;
}

std::vector<Elem> saturated_set(const Quantale& q, const RelationSpec& r) {
  std::vector<Elem> out;
  for (Elem s = 0; s < q.size(); ++s)
    if (is_saturated(q, r, s)) out.push_back(s);

  std::vector<char> in(q.size(), 0);
  for (Elem s : out) in[s] = 1;
  for (Elem s : out)
    for (Elem t : out)
      if (!in[q.lat.meet(s, t)])
        throw Error("ClosureViolation", "saturated set not meet-closed",
                    {q.lat.names[s], q.lat.names[t]});
  for (Elem s : out)
    for (Elem x = 0; x < q.size(); ++x) {
      if (!in[q.over(s, x)] || !in[q.under(x, s)])
        throw Error("ClosureViolation", "saturated set not residual-closed",
                    {q.lat.names[s], q.lat.names[x]});
    }
  return out;
}

Elem rho(const Quantale& q, const RelationSpec& r, Elem a) {
  Elem acc = q.top();
  for (Elem s = 0; s < q.size(); ++s)
    if (q.lat.leq(a, s) && is_saturated(q, r, s)) acc = q.lat.meet(acc, s);
  if (!is_saturated(q, r, acc))
    throw Error("ClosureViolation", "rho image not saturated",
                {q.lat.names[a]});
  return acc;
}

QuotientByRelation quotient_by_relation(const Quantale& q,
                                        const RelationSpec& r) {
  QuotientByRelation out;
  out.carrier = saturated_set(q, r);
  const int k = static_cast<int>(out.carrier.size());
  std::vector<int> pos(q.size(), -1);
  for (int i = 0; i < k; ++i) pos[out.carrier[i]] = i;

  std::vector<Elem> rho_tab(q.size());
  for (Elem a = 0; a < q.size(); ++a) {
    Elem acc = q.top();
    for (Elem s : out.carrier)
      if (q.lat.leq(a, s)) acc = q.lat.meet(acc, s);
    rho_tab[a] = acc;
    if (pos[acc] < 0)
      throw Error("ClosureViolation", "rho image not saturated",
                  {q.lat.names[a]});
  }
  // nucleus checks: closure operator + rho(a)rho(b) <= rho(ab)
  for (Elem a = 0; a < q.size(); ++a) {
    if (!q.lat.leq(a, rho_tab[a]) || rho_tab[rho_tab[a]] != rho_tab[a])
      throw Error("ClosureViolation", "rho is not a closure operator",
                  {q.lat.names[a]});
    for (Elem b = 0; b < q.size(); ++b) {
      if (q.lat.leq(a, b) && !q.lat.leq(rho_tab[a], rho_tab[b]))
        throw Error("ClosureViolation", "rho not monotone",
                    {q.lat.names[a], q.lat.names[b]});
      if (!q.lat.leq(q.mul(rho_tab[a], rho_tab[b]), rho_tab[q.mul(a, b)]))
        throw Error("ClosureViolation", "rho not a quantic nucleus",
                    {q.lat.names[a], q.lat.names[b]});
    }
  }

  std::vector<std::string> names(k);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (int i = 0; i < k; ++i) {
    names[i] = q.lat.names[out.carrier[i]];
    for (int j = 0; j < k; ++j)
      if (q.lat.leq(out.carrier[i], out.carrier[j])) pairs.emplace_back(i, j);
  }
  FiniteSupLattice lat = validate_sup_lattice_indexed(names, pairs);
  std::vector<Elem> mul(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      mul[i * k + j] = pos[rho_tab[q.mul(out.carrier[i], out.carrier[j])]];
  std::optional<Elem> unit;
  if (q.unit) unit = pos[rho_tab[*q.unit]];
  out.quotient = validate_quantale(lat, mul, unit);

  out.projection.resize(q.size());
  for (Elem a = 0; a < q.size(); ++a) out.projection[a] = pos[rho_tab[a]];
  return out;
}

Congruence congruence_generated(const Quantale& q, const RelationSpec& r) {
  std::vector<int> sig(q.size());
  for (Elem a = 0; a < q.size(); ++a) sig[a] = rho(q, r, a);
  Congruence c = normalize_partition(std::move(sig));
  if (!is_congruence_quantale(q, c))
    throw Error("ClosureViolation", "ker rho is not a congruence");
  return c;
}

std::vector<Elem> saturation_of_hom(const Quantale& q, const Quantale& q2,
                                    const std::vector<Elem>& f) {
  // f must be a quantale hom: join-preserving and multiplicative.
  ResiduatedMapWitness w = residuum_of_map(q.lat, q2.lat, f);
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = 0; b < q.size(); ++b)
      if (f[q.mul(a, b)] != q2.mul(f[a], f[b]))
        throw Error("NotEquivariant", "map does not preserve the product",
                    {q.lat.names[a], q.lat.names[b]});

  std::vector<Elem> fix;
  for (Elem a = 0; a < q.size(); ++a)
    if (w.residuum[f[a]] == a) fix.push_back(a);

  RelationSpec ker;
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = 0; b < q.size(); ++b)
      if (f[a] == f[b]) ker.emplace_back(a, b);
  auto sat = saturated_set(q, ker);
  if (sat != fix)
    throw Error("ClosureViolation",
                "gamma fixpoints differ from ker-saturated elements");
  return fix;
}

}  // namespace qwb
