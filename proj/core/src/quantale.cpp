#include "qwb/quantale.hpp"

#include <algorithm>

#include "iso_util.hpp"

namespace qwb {

namespace {

void fill_residuals(Quantale& q) {
  const int n = q.size();
  q.under_tab.assign(n * n, q.bottom());
  q.over_tab.assign(n * n, q.bottom());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem u = q.bottom(), o = q.bottom();
      for (Elem c = 0; c < n; ++c) {
        if (q.lat.leq(q.mul(a, c), b)) u = q.lat.join(u, c);
        if (q.lat.leq(q.mul(c, a), b)) o = q.lat.join(o, c);
      }
      q.under_tab[a * n + b] = u;  // a\b
      q.over_tab[b * n + a] = o;   // b/a
    }
  }
}

std::optional<Elem> find_unit(const Quantale& q) {
  for (Elem e = 0; e < q.size(); ++e) {
    bool ok = true;
    for (Elem a = 0; a < q.size() && ok; ++a)
      if (q.mul(e, a) != a || q.mul(a, e) != a) ok = false;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

Quantale validate_quantale(const FiniteSupLattice& lat,
                           const std::vector<Elem>& mul,
                           std::optional<Elem> unit) {
  const int n = lat.size();
  if (static_cast<int>(mul.size()) != n * n)
    throw Error("NotAssociative", "multiplication table is not total");
  for (Elem v : mul)
    if (v < 0 || v >= n)
      throw Error("UnknownElement", "multiplication table entry out of range");

  Quantale q;
  q.lat = lat;
  q.mul_tab = mul;

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (q.mul(q.mul(a, b), c) != q.mul(a, q.mul(b, c)))
          throw Error("NotAssociative",
                      "(" + lat.names[a] + "*" + lat.names[b] + ")*" +
                          lat.names[c] + " != " + lat.names[a] + "*(" +
                          lat.names[b] + "*" + lat.names[c] + ")",
                      {lat.names[a], lat.names[b], lat.names[c]});

  for (Elem a = 0; a < n; ++a) {
    if (q.mul(a, lat.bottom) != lat.bottom || q.mul(lat.bottom, a) != lat.bottom)
      throw Error("BottomNotAbsorbed",
                  "bottom is not absorbed by '" + lat.names[a] + "'",
                  {lat.names[a]});
  }

  // Binary joins suffice on a finite carrier.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (q.mul(a, lat.join(b, c)) != lat.join(q.mul(a, b), q.mul(a, c)))
          throw Error("NotDistributive",
                      "left: " + lat.names[a] + "*(" + lat.names[b] + " v " +
                          lat.names[c] + ")",
                      {"left", lat.names[a], lat.names[b], lat.names[c]});
        if (q.mul(lat.join(b, c), a) != lat.join(q.mul(b, a), q.mul(c, a)))
          throw Error("NotDistributive",
                      "right: (" + lat.names[b] + " v " + lat.names[c] + ")*" +
                          lat.names[a],
                      {"right", lat.names[a], lat.names[b], lat.names[c]});
      }

  if (unit) {
    Elem e = *unit;
    if (e < 0 || e >= n)
      throw Error("UnknownElement", "declared unit out of range");
    for (Elem a = 0; a < n; ++a)
      if (q.mul(e, a) != a || q.mul(a, e) != a)
        throw Error("UnitLaw", "declared unit fails on '" + lat.names[a] + "'",
                    {lat.names[a]});
    q.unit = e;
  } else {
    q.unit = find_unit(q);
  }

  q.flags = classify(q);
  fill_residuals(q);
  return q;
}

QuantaleFlags classify(const Quantale& q) {
  QuantaleFlags f;
  f.unital = q.unit.has_value();
  f.commutative = true;
  for (Elem a = 0; a < q.size() && f.commutative; ++a)
    for (Elem b = a + 1; b < q.size(); ++b)
      if (q.mul(a, b) != q.mul(b, a)) {
        f.commutative = false;
        break;
      }
  f.integral = f.unital && *q.unit == q.top();
  f.frame = f.integral && q.mul_tab == q.lat.meet_tab;
  return f;
}

std::pair<Elem, Elem> residuals(const Quantale& q, Elem a, Elem b) {
  if (a < 0 || a >= q.size() || b < 0 || b >= q.size())
    throw Error("UnknownElement", "residual argument out of range");
  return {q.under(a, b), q.over(b, a)};
}

Quantale unitalize(const Quantale& q) {
  const int n = q.size();
  std::vector<std::string> names(2 * n);
  for (int i = 0; i < n; ++i) {
    names[i] = q.lat.names[i];
    names[n + i] =
        (i == q.bottom()) ? std::string("e") : q.lat.names[i] + "_e";
  }
  // Product order of Q with the two-chain {bot, e}.
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (q.lat.leq(a, b)) {
        pairs.emplace_back(a, b);
        pairs.emplace_back(n + a, n + b);
        pairs.emplace_back(a, n + b);
      }
  FiniteSupLattice lat = validate_sup_lattice_indexed(names, pairs);

  auto part = [n](Elem x) { return x % n; };
  auto hase = [n](Elem x) { return x >= n; };
  std::vector<Elem> mul(4 * n * n);
  for (Elem x = 0; x < 2 * n; ++x) {
    for (Elem y = 0; y < 2 * n; ++y) {
      Elem a = part(x), b = part(y);
      Elem r;
      if (!hase(x) && !hase(y)) {
        r = q.mul(a, b);
      } else if (hase(x) && !hase(y)) {
        r = q.lat.join(q.mul(a, b), b);
      } else if (!hase(x) && hase(y)) {
        r = q.lat.join(q.mul(a, b), a);
      } else {
        r = n + q.lat.join(q.mul(a, b), q.lat.join(a, b));
      }
      mul[x * 2 * n + y] = r;
    }
  }
  Quantale out = validate_quantale(lat, mul, n + q.bottom());

  // The embedding a -> (a, bot) must preserve joins and products; both are
  // immediate from the construction but we keep the exhaustive check.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (out.mul(a, b) != q.mul(a, b) ||
          out.lat.join(a, b) != q.lat.join(a, b))
        throw Error("ClosureViolation", "unitalization embedding failed",
                    {q.lat.names[a], q.lat.names[b]});
    }
  return out;
}

Quantale powerset_quantale(const std::vector<std::string>& generators,
                           const std::vector<Elem>& semigroup_mul) {
  const int k = static_cast<int>(generators.size());
  if (k <= 0 || k > 16)
    throw Error("BudgetExceeded", "semigroup size out of supported range");
  if (static_cast<int>(semigroup_mul.size()) != k * k)
    throw Error("NotAssociative", "semigroup table is not total");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (semigroup_mul[semigroup_mul[a * k + b] * k + c] !=
            semigroup_mul[a * k + semigroup_mul[b * k + c]])
          throw Error("NotAssociative", "input semigroup is not associative",
                      {generators[a], generators[b], generators[c]});

  const int n = 1 << k;
  std::vector<std::string> names(n);
  for (int m = 0; m < n; ++m) {
    if (m == 0) {
      names[m] = "0";
      continue;
    }
    std::string s;
    for (int i = 0; i < k; ++i)
      if (m & (1 << i)) s += generators[i];
    names[m] = s;
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a & b) == a) pairs.emplace_back(a, b);
  FiniteSupLattice lat = validate_sup_lattice_indexed(names, pairs);

  std::vector<Elem> mul(n * n, 0);
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      int prod = 0;
      for (int i = 0; i < k; ++i)
        if (y & (1 << i))
          for (int j = 0; j < k; ++j)
            if (z & (1 << j)) prod |= 1 << semigroup_mul[i * k + j];
      mul[y * n + z] = prod;
    }
  return validate_quantale(lat, mul);
}

std::vector<Elem> sided_elements(const Quantale& q, Side side) {
  std::vector<Elem> out;
  for (Elem a = 0; a < q.size(); ++a) {
    bool right = q.lat.leq(q.mul(a, q.top()), a);
    bool left = q.lat.leq(q.mul(q.top(), a), a);
    bool keep = (side == Side::right)  ? right
                : (side == Side::left) ? left
                                       : (left && right);
    if (keep) out.push_back(a);
  }
  return out;
}

bool strictly_two_sided(const Quantale& q, Elem a) {
  return q.mul(q.mul(q.top(), a), q.top()) == a;
}

SubquantaleResult id_subquantale(const Quantale& q) {
  SubquantaleResult r;
  r.carrier = sided_elements(q, Side::two);
  const int m = static_cast<int>(r.carrier.size());
  std::vector<int> pos(q.size(), -1);
  for (int i = 0; i < m; ++i) pos[r.carrier[i]] = i;

  std::vector<std::string> names(m);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (int i = 0; i < m; ++i) {
    names[i] = q.lat.names[r.carrier[i]];
    for (int j = 0; j < m; ++j)
      if (q.lat.leq(r.carrier[i], r.carrier[j])) pairs.emplace_back(i, j);
  }
  FiniteSupLattice lat = validate_sup_lattice_indexed(names, pairs);

  std::vector<Elem> mul(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Elem prod = q.mul(r.carrier[i], r.carrier[j]);
      if (pos[prod] < 0)
        throw Error("ClosureViolation",
                    "two-sided elements not closed under product",
                    {q.lat.names[r.carrier[i]], q.lat.names[r.carrier[j]]});
      mul[i * m + j] = pos[prod];
    }
  // joins must also stay inside
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Elem jn = q.lat.join(r.carrier[i], r.carrier[j]);
      if (pos[jn] < 0)
        throw Error("ClosureViolation",
                    "two-sided elements not closed under join",
                    {q.lat.names[r.carrier[i]], q.lat.names[r.carrier[j]]});
      if (lat.join(i, j) != pos[jn])
        throw Error("ClosureViolation", "induced join disagrees with host");
    }
  r.sub = validate_quantale(lat, mul);
  r.equals_host = (m == q.size());
  return r;
}

std::optional<std::vector<Elem>> quantale_isomorphism(const Quantale& a,
                                                      const Quantale& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.flags.unital != b.flags.unital) return std::nullopt;
  return detail::find_order_bijection(
      a.lat, b.lat, [&](const std::vector<Elem>& f) {
        for (Elem x = 0; x < a.size(); ++x)
          for (Elem y = 0; y < a.size(); ++y)
            if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
        if (a.unit && b.unit && f[*a.unit] != *b.unit) return false;
        return true;
      });
}

}  // namespace qwb
