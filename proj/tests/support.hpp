#pragma once

// Test-only helpers and brute-force oracles. Nothing here calls the code path
// it is used to check.

#include <set>
#include <string>
#include <vector>

#include "hitchin/cli.hpp"

namespace hitchin::test {

inline RootDatum datum(const std::string& type, bool adjoint = false, int central = 0) {
  return build_root_datum(CartanType::parse(type, central), adjoint ? LatticeSpec::adjoint() : LatticeSpec::simply_connected());
}

inline WeylGroup group(const std::string& type, bool adjoint = false, int central = 0, Int cap = kDefaultEnumerationCap) {
  return generate(datum(type, adjoint, central), cap);
}

/// Simple types of rank <= 4, the grid used throughout.
inline std::vector<std::string> small_types() {
  return {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"};
}

/// Calls fn(lambda) for every lambda in [-radius, radius]^n.
template <typename Fn>
void for_each_in_box(std::size_t n, Int radius, Fn&& fn) {
  IntVector v(n, -radius);
  if (n == 0) {
    fn(v);
    return;
  }
  for (;;) {
    fn(v);
    std::size_t i = 0;
    while (i < n && v[i] == radius) v[i++] = -radius;
    if (i == n) return;
    ++v[i];
  }
}

/// Whether some lambda in a box pairs to exactly 1 with y.
inline bool box_has_unit_pairing(const IntVector& y, Int radius) {
  bool found = false;
  for_each_in_box(y.size(), radius, [&](const IntVector& lambda) {
    if (dot(lambda, y) == 1) found = true;
  });
  return found;
}

/// Rational coordinates of v in the basis given by independent rows, or empty
/// if v is outside their Q-span. Plain Gaussian elimination on the transpose.
inline std::vector<Rational> solve_in_span(const std::vector<IntVector>& rows, const IntVector& v) {
  const std::size_t k = rows.size(), n = v.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = rows[j][i];
    a[i][k] = v[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a[i][k] != 0) return {};
  std::vector<Rational> x(k, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = a[i][k] / a[i][pivots[i]];
  return x;
}

/// [Y cap Q-span(coroots) : Z-span(coroots)] estimated by counting distinct
/// fractional parts of box points in the span of the simple coroots.
inline std::size_t saturation_index_by_box(const RootDatum& d, Int radius) {
  std::vector<IntVector> basis;
  for (RootIndex s : d.simple_roots()) basis.push_back(d.coroot(s));
  std::set<std::vector<Rational>> classes;
  for_each_in_box(static_cast<std::size_t>(d.rank()), radius, [&](const IntVector& y) {
    auto x = solve_in_span(basis, y);
    if (x.empty() && !basis.empty()) return;
    for (auto& c : x) {
      Int fl = c.numerator() / c.denominator();
      if (c < fl) --fl;
      c -= fl;
    }
    classes.insert(x);
  });
  return classes.size();
}

/// Induced character by the definition: number of cosets uH with w u H = u H,
/// enumerating cosets as unordered pairs {u, u s}. O(|W|^2).
inline Int brute_force_fixed_cosets(const WeylGroup& g, const IntMatrix& s, const IntMatrix& w) {
  const auto& el = g.elements();
  std::vector<bool> covered(el.size(), false);
  Int fixed = 0;
  for (std::size_t u = 0; u < el.size(); ++u) {
    if (covered[u]) continue;
    const IntMatrix us = el[u] * s;
    covered[u] = true;
    covered[*g.index_of(us)] = true;
    const IntMatrix wu = w * el[u];
    if (wu == el[u] || wu == us) ++fixed;
  }
  return fixed;
}

/// Multiplicative order of a matrix.
inline Int matrix_order(const IntMatrix& m) {
  const IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix p = m;
  for (Int k = 1; k <= 1000; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return -1;
}

}  // namespace hitchin::test
