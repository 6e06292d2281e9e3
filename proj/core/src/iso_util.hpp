#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "qwb/lattice.hpp"

namespace qwb::detail {

// Backtracking search for a bijection between two equal-sized lattices that
// preserves the order relation in both directions. Candidates are prefiltered
// by (in-degree, out-degree) of the order relation; a caller-supplied leaf
// predicate checks the remaining algebraic structure.
inline std::optional<std::vector<Elem>> find_order_bijection(
    const FiniteSupLattice& a, const FiniteSupLattice& b,
    const std::function<bool(const std::vector<Elem>&)>& leaf_ok) {
  const int n = a.size();
  if (b.size() != n) return std::nullopt;

  auto degrees = [](const FiniteSupLattice& l) {
    std::vector<std::pair<int, int>> d(l.size());
    for (int i = 0; i < l.size(); ++i) {
      int below = 0, above = 0;
      for (int j = 0; j < l.size(); ++j) {
        if (l.leq(j, i)) ++below;
        if (l.leq(i, j)) ++above;
      }
      d[i] = {below, above};
    }
    return d;
  };
  auto da = degrees(a), db = degrees(b);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<Elem> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return leaf_ok(map);
    for (Elem t = 0; t < n; ++t) {
      if (used[t] || da[i] != db[t]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (a.leq(i, j) != b.leq(t, map[j])) ok = false;
        if (ok && a.leq(j, i) != b.leq(map[j], t)) ok = false;
      }
      if (!ok) continue;
      map[i] = t;
      used[t] = 1;
      if (rec(i + 1)) return true;
      used[t] = 0;
      map[i] = -1;
    }
    return false;
  };
  if (rec(0)) return map;
  return std::nullopt;
}

}  // namespace qwb::detail
