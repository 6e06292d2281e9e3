#include "qwb/enumerate.hpp"

#include <set>
#include <string>

#include "iso_util.hpp"

namespace qwb {

std::vector<FiniteSupLattice> enumerate_lattices(int max_size) {
  if (max_size < 1 || max_size > 5)
    throw Error("BudgetExceeded", "lattice enumeration bound is 5");
  std::vector<FiniteSupLattice> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = "x" + std::to_string(i);
    const int bits = n * n - n;  // off-diagonal entries
    for (long code = 0; code < (1L << bits); ++code) {
      std::vector<std::pair<Elem, Elem>> pairs;
      int b = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          if (code & (1L << b)) pairs.emplace_back(i, j);
          ++b;
        }
      FiniteSupLattice lat;
      try {
        lat = validate_sup_lattice_indexed(names, pairs);
      } catch (const Error&) {
        continue;
      }
      // Keep only relations already transitively closed so each lattice is
      // produced from exactly one relation; then dedupe up to isomorphism.
      bool closed = true;
      int expect = 0;
      for (int i = 0; i < n * n; ++i) expect += lat.leq_tab[i] ? 1 : 0;
      if (expect != static_cast<int>(pairs.size()) + n) closed = false;
      if (!closed) continue;
      bool fresh = true;
      for (const auto& seen : out) {
        if (seen.size() != n) continue;
        if (detail::find_order_bijection(seen, lat,
                                         [](const std::vector<Elem>&) {
                                           return true;
                                         })) {
          fresh = false;
          break;
        }
      }
      if (fresh) out.push_back(std::move(lat));
    }
  }
  return out;
}

std::vector<Quantale> enumerate_quantales(int max_size) {
  std::vector<Quantale> out;
  for (const FiniteSupLattice& lat : enumerate_lattices(max_size)) {
    const int n = lat.size();
    auto ji = lat.join_irreducibles();
    const int k = static_cast<int>(ji.size());
    long total = 1;
    for (int i = 0; i < k * k; ++i) {
      total *= n;
      if (total > 5000000)
        throw Error("BudgetExceeded", "quantale enumeration space too large");
    }

    std::set<std::vector<Elem>> tables;
    std::vector<Quantale> on_lattice;
    std::vector<Elem> jimul(k * k);
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = 0; i < k * k; ++i) {
        jimul[i] = static_cast<Elem>(c % n);
        c /= n;
      }
      // Extend to the full table by join-distributivity.
      std::vector<Elem> mul(n * n, lat.bottom);
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          Elem acc = lat.bottom;
          for (int i = 0; i < k; ++i) {
            if (!lat.leq(ji[i], x)) continue;
            for (int j = 0; j < k; ++j)
              if (lat.leq(ji[j], y)) acc = lat.join(acc, jimul[i * k + j]);
          }
          mul[x * n + y] = acc;
        }
      if (!tables.insert(mul).second) continue;
      Quantale q;
      try {
        q = validate_quantale(lat, mul);
      } catch (const Error&) {
        continue;
      }
      bool fresh = true;
      for (const Quantale& seen : on_lattice)
        if (quantale_isomorphism(seen, q)) {
          fresh = false;
          break;
        }
      if (fresh) on_lattice.push_back(std::move(q));
    }
    for (auto& q : on_lattice) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace qwb
