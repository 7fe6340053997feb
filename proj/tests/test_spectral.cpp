#include "doctest.h"
#include "support.hpp"

using namespace hitchin;
using hitchin::test::group;

TEST_CASE("SL(2), genus 2") {
  const WeylGroup w = group("A1");
  const CoverStats c = cover_stats(w.datum(), w, 2);
  CHECK(c.deg_K == 2);
  CHECK(c.ram_count == 4);
  CHECK(c.n == std::vector<Int>{4});
  CHECK(c.branch_fiber_size == 1);
  CHECK(c.spectral_genus == 5);
  CHECK(c.d == 4);
  // Euler characteristic of a double cover branched at 4 points.
  CHECK(2 - 2 * c.spectral_genus == 2 * (2 - 2 * 2) - 4);
}

TEST_CASE("G2, genus 2") {
  const WeylGroup w = group("G2");
  const CoverStats c = cover_stats(w.datum(), w, 2);
  CHECK(c.ram_count == 24);
  CHECK(c.n == std::vector<Int>{12, 12});
  CHECK(c.branch_fiber_size == 6);
  CHECK(c.d == 24);
  CHECK(c.d_alpha_size == 24);
}

TEST_CASE("torus: degenerate cover") {
  const WeylGroup w = group("T", false, 1);
  const CoverStats c = cover_stats(w.datum(), w, 3);
  CHECK(c.ram_count == 0);
  CHECK(c.spectral_genus == 3);
  CHECK(c.n.empty());
  CHECK(spectral_genus(c) == 3);
  CHECK(ramification_points(c) == 0);
}

TEST_CASE("spectral genus") {
  const WeylGroup a1 = group("A1"), a2 = group("A2");
  CHECK(spectral_genus(cover_stats(a1.datum(), a1, 2)) == 5);
  CHECK(spectral_genus(cover_stats(a2.datum(), a2, 2)) == 25);
  const WeylGroup e8 = group("E8");
  CHECK(spectral_genus(cover_stats(e8.datum(), e8, 2)) == 1 + Int{696729600} * 121);
}

TEST_CASE("genus below 2 is rejected") {
  const WeylGroup w = group("A1");
  for (Int g : {1, 0, -3}) {
    try {
      cover_stats(w.datum(), w, g);
      FAIL("expected invalid_genus");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_genus);
    }
  }
}

TEST_CASE("cover invariants across the grid") {
  for (const auto& type : test::small_types())
    for (Int g : {2, 3, 4}) {
      INFO(type << " g=" << g);
      const WeylGroup w = group(type);
      const CoverStats c = cover_stats(w.datum(), w, g);
      CHECK_NOTHROW(check_invariants(c, w));
      const Int positive = static_cast<Int>(w.datum().num_positive_roots());
      // Riemann-Hurwitz with simple ramification.
      CHECK(2 * c.spectral_genus - 2 == w.order() * (2 * g - 2) + ramification_points(c));
      CHECK(ramification_points(c) == positive * w.order() * (2 * g - 2));
      CHECK((c.ram_count * w.order()) % 2 == 0);
      // Cross-check against the H1 character.
      CHECK(h1_character(w, c).at_identity() == 2 * spectral_genus(c));
    }
}

TEST_CASE("tampered stats fail the invariant check") {
  const WeylGroup w = group("B2");
  CoverStats c = cover_stats(w.datum(), w, 2);
  c.n[0] += 1;
  CHECK_THROWS_AS(check_invariants(c, w), Error);
  c = cover_stats(w.datum(), w, 2);
  c.spectral_genus += 1;
  CHECK_THROWS_AS(check_invariants(c, w), Error);
}
