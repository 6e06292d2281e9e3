#include "qwb/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace qwb {

Elem FiniteSupLattice::join_of(const std::vector<Elem>& s) const {
  Elem acc = bottom;
  for (Elem e : s) acc = join(acc, e);
  return acc;
}

Elem FiniteSupLattice::meet_of(const std::vector<Elem>& s) const {
  Elem acc = top;
  for (Elem e : s) acc = meet(acc, e);
  return acc;
}

Elem FiniteSupLattice::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  throw Error("UnknownElement", "unknown element '" + name + "'", {name});
}

std::vector<Elem> FiniteSupLattice::join_irreducibles() const {
  std::vector<Elem> out;
  for (Elem v = 0; v < size(); ++v) {
    if (v == bottom) continue;
    Elem below = bottom;
    for (Elem u = 0; u < size(); ++u)
      if (u != v && leq(u, v)) below = join(below, u);
    if (below != v) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> FiniteSupLattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < size(); ++a) {
    for (Elem b = 0; b < size(); ++b) {
      if (a == b || !leq(a, b)) continue;
      bool strict_between = false;
      for (Elem c = 0; c < size() && !strict_between; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) strict_between = true;
      if (!strict_between) out.emplace_back(a, b);
    }
  }
  return out;
}

FiniteSupLattice validate_sup_lattice_indexed(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<Elem, Elem>>& leq_pairs) {
  if (elements.empty())
    throw Error("NotAPartialOrder", "empty element list");
  const int n = static_cast<int>(elements.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (elements[i] == elements[j])
        throw Error("NotAPartialOrder", "duplicate element '" + elements[i] + "'",
                    {elements[i]});

  std::vector<char> leq(n * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error("UnknownElement", "order pair references unknown element");
    leq[a * n + b] = 1;
  }
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i * n + j] && leq[j * n + i])
        throw Error("NotAPartialOrder",
                    "cycle between '" + elements[i] + "' and '" + elements[j] + "'",
                    {elements[i], elements[j]});

  FiniteSupLattice l;
  l.names = elements;
  l.leq_tab = leq;

  // bottom
  int bot = -1;
  for (int i = 0; i < n && bot < 0; ++i) {
    bool below_all = true;
    for (int j = 0; j < n; ++j)
      if (!leq[i * n + j]) { below_all = false; break; }
    if (below_all) bot = i;
  }
  if (bot < 0) throw Error("NoBottom", "no least element exists");
  l.bottom = bot;

  // binary joins: least upper bound of each pair
  l.join_tab.assign(n * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int lub = -1;
      for (int u = 0; u < n; ++u) {
        if (!leq[a * n + u] || !leq[b * n + u]) continue;
        bool least = true;
        for (int w = 0; w < n; ++w)
          if (leq[a * n + w] && leq[b * n + w] && !leq[u * n + w]) {
            least = false;
            break;
          }
        if (least) { lub = u; break; }
      }
      if (lub < 0)
        throw Error("NoLeastUpperBound",
                    "elements '" + elements[a] + "' and '" + elements[b] +
                        "' have no least upper bound",
                    {elements[a], elements[b]});
      l.join_tab[a * n + b] = lub;
      l.join_tab[b * n + a] = lub;
    }
  }

  // top = join of everything
  Elem top = l.bottom;
  for (int i = 0; i < n; ++i) top = l.join_tab[top * n + i];
  l.top = top;

  // meets: join of the common lower bounds (exists in any finite lattice
  // with all joins and a bottom)
  l.meet_tab.assign(n * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Elem m = l.bottom;
      for (int u = 0; u < n; ++u)
        if (leq[u * n + a] && leq[u * n + b]) m = l.join_tab[m * n + u];
      if (!leq[m * n + a] || !leq[m * n + b])
        throw Error("NoLeastUpperBound",
                    "no greatest lower bound for '" + elements[a] + "', '" +
                        elements[b] + "'",
                    {elements[a], elements[b]});
      l.meet_tab[a * n + b] = m;
      l.meet_tab[b * n + a] = m;
    }
  }
  return l;
}

FiniteSupLattice validate_sup_lattice(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  std::unordered_map<std::string, Elem> idx;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i)
    idx.emplace(elements[i], i);
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(leq_pairs.size());
  for (const auto& [a, b] : leq_pairs) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end())
      throw Error("UnknownElement", "unknown element '" + a + "'", {a});
    if (ib == idx.end())
      throw Error("UnknownElement", "unknown element '" + b + "'", {b});
    pairs.emplace_back(ia->second, ib->second);
  }
  return validate_sup_lattice_indexed(elements, pairs);
}

FiniteSupLattice dual_lattice(const FiniteSupLattice& l) {
  const int n = l.size();
  FiniteSupLattice d;
  d.names = l.names;
  d.leq_tab.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d.leq_tab[a * n + b] = l.leq_tab[b * n + a];
  d.join_tab = l.meet_tab;
  d.meet_tab = l.join_tab;
  d.bottom = l.top;
  d.top = l.bottom;
  return d;
}

ResiduatedMapWitness residuum_of_map(const FiniteSupLattice& l1,
                                     const FiniteSupLattice& l2,
                                     const std::vector<Elem>& f) {
  const int n1 = l1.size();
  if (static_cast<int>(f.size()) != n1)
    throw Error("NotJoinPreserving", "map is not total on the source lattice");
  if (f[l1.bottom] != l2.bottom)
    throw Error("NotJoinPreserving", "bottom is not preserved",
                {l1.names[l1.bottom]});
  for (Elem a = 0; a < n1; ++a)
    for (Elem b = a + 1; b < n1; ++b)
      if (f[l1.join(a, b)] != l2.join(f[a], f[b]))
        throw Error("NotJoinPreserving",
                    "join of '" + l1.names[a] + "' and '" + l1.names[b] +
                        "' is not preserved",
                    {l1.names[a], l1.names[b]});

  ResiduatedMapWitness w;
  w.forward = f;
  w.residuum.assign(l2.size(), l1.bottom);
  for (Elem y = 0; y < l2.size(); ++y) {
    Elem g = l1.bottom;
    for (Elem x = 0; x < n1; ++x)
      if (l2.leq(f[x], y)) g = l1.join(g, x);
    w.residuum[y] = g;
  }
  return w;
}

}  // namespace qwb
