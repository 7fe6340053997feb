#include <random>

#include "doctest.h"
#include "hitchin/lattice.hpp"

using namespace hitchin;

namespace {

// Laplace expansion; fine for the 3x3 matrices used here.
Int det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    total += ((c % 2) ? -1 : 1) * m(0, c) * det(minor);
  }
  return total;
}

}  // namespace

TEST_CASE("smith invariants of a textbook matrix") {
  const IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(smith_invariants(m) == std::vector<Int>{2, 6, 12});
}

TEST_CASE("smith invariants of rank-deficient and rectangular input") {
  CHECK(smith_invariants(IntMatrix::from_rows({{2, 4}, {1, 2}})) == std::vector<Int>{1});
  CHECK(smith_invariants(IntMatrix::from_rows({{0, 0}, {0, 0}})).empty());
  CHECK(smith_invariants(IntMatrix::from_rows({{2, 0, 0}})) == std::vector<Int>{2});
  CHECK(smith_invariants(IntMatrix::from_rows({{4, 0}, {0, 6}})) == std::vector<Int>{2, 12});
}

TEST_CASE("smith invariants: divisibility chain, gcd and determinant on random matrices") {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> entry(-6, 6);
  int full_rank = 0;
  for (int trial = 0; trial < 500; ++trial) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = entry(rng);
    const auto f = smith_invariants(m);
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
    if (!f.empty()) CHECK(f.front() == gcd_of(m.data()));
    const Int d = det(m);
    if (d != 0) {
      ++full_rank;
      REQUIRE(f.size() == 3);
      CHECK(f[0] * f[1] * f[2] == std::abs(d));
    } else {
      CHECK(f.size() < 3);
    }
  }
  CHECK(full_rank > 100);
}

TEST_CASE("rational inverse") {
  const auto inv = inverse(to_rational(IntMatrix::from_rows({{2, -1}, {-1, 2}})));
  REQUIRE(inv);
  CHECK((*inv)[0][0] == Rational(2, 3));
  CHECK((*inv)[0][1] == Rational(1, 3));
  CHECK_FALSE(inverse(to_rational(IntMatrix::from_rows({{1, 2}, {2, 4}}))));
}

TEST_CASE("gcd_of") {
  const IntVector v{-4, 6, 10};
  CHECK(gcd_of(v) == 2);
  CHECK(gcd_of(IntVector{0, 0}) == 0);
}
