#include "hitchin/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

namespace hitchin {

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, Int q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) = checked_add(m(dst, j), -checked_mul(q, m(src, j)));
}

void sub_col(IntMatrix& m, std::size_t dst, std::size_t src, Int q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) = checked_add(m(i, dst), -checked_mul(q, m(i, src)));
}

// Position of the smallest nonzero |entry| in the lower-right block starting at t.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& m, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs = 0;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const Int a = std::abs(m(i, j));
      if (a != 0 && (!best || a < best_abs)) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

std::vector<Int> smith_invariants(IntMatrix m) {
  std::vector<Int> factors;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      auto pivot = min_pivot(m, t);
      if (!pivot) return factors;
      swap_rows(m, t, pivot->first);
      swap_cols(m, t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        sub_row(m, i, t, m(i, t) / m(t, t));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        sub_col(m, j, t, m(t, j) / m(t, t));
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: pivot must divide the whole remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t k = t; k < m.cols(); ++k) m(t, k) = checked_add(m(t, k), m(i, k));
            divides = false;
            break;
          }
      if (divides) break;
    }
    factors.push_back(std::abs(m(t, t)));
  }
  return factors;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) return std::nullopt;
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

}  // namespace hitchin
