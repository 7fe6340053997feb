#include "doctest.h"
#include "support.hpp"

using namespace hitchin;
using hitchin::test::datum;
using hitchin::test::group;

namespace {

BigInt pow2(unsigned e) {
  BigInt r = 1;
  return r << e;
}

}  // namespace

TEST_CASE("injectivity verdicts") {
  CHECK(injectivity_verdict(datum("A3")) == InjectivityReason::simply_connected_derived);
  CHECK(injectivity_verdict(datum("D4", true)) == InjectivityReason::no_B_component);
  CHECK(injectivity_verdict(datum("B2", true)) == InjectivityReason::not_guaranteed);
  CHECK(injectivity_verdict(datum("C3", true)) == InjectivityReason::no_B_component);
  // C2 is normalized to B2 and counts as type B; B1 = A1 as well.
  CHECK(injectivity_verdict(datum("C2", true)) == InjectivityReason::not_guaranteed);
  CHECK(injectivity_verdict(datum("A1", true)) == InjectivityReason::not_guaranteed);
  CHECK(injectivity_verdict(datum("T", false, 1)) == InjectivityReason::simply_connected_derived);
}

TEST_CASE("exceptional roots") {
  const RootDatum pgl2 = datum("A1", true);
  CHECK(exceptional_roots(pgl2) == std::vector<RootIndex>{0});

  const RootDatum so5 = datum("B2", true);
  const auto a = exceptional_roots(so5);
  REQUIRE(a.size() == 2);
  for (RootIndex r : a) CHECK_FALSE(so5.is_long(r));

  for (const auto& type : test::small_types()) {
    INFO(type);
    CHECK(exceptional_roots(datum(type)).empty());
  }
}

TEST_CASE("adjoint lattices: A empty except for type B, where it is the short positive roots") {
  for (const auto& type : test::small_types()) {
    INFO(type);
    const RootDatum ad = datum(type, true);
    const auto a = exceptional_roots(ad);
    if (type[0] == 'B') {
      const Int l = type[1] - '0';
      CHECK(static_cast<Int>(a.size()) == l);
      std::vector<RootIndex> short_positive;
      for (RootIndex r : ad.positive_roots())
        if (!ad.is_long(r)) short_positive.push_back(r);
      CHECK(a == short_positive);
    } else if (type != "A1") {
      CHECK(a.empty());
    }
    // A finer lattice never has more exceptional roots.
    const auto a_sc = exceptional_roots(datum(type));
    CHECK(std::includes(a.begin(), a.end(), a_sc.begin(), a_sc.end()));
  }
}

TEST_CASE("fiber bounds") {
  {
    const WeylGroup w = group("A1", true);
    const FiberReport r = fiber_bound(w.datum(), w, 2);
    CHECK(r.d == 4);
    CHECK(r.a == 1);
    CHECK(r.bound == 8);
    CHECK_FALSE(r.injective);
    REQUIRE(r.pgl2_exact);
    CHECK(r.pgl2_exact->per_component_fiber == 4);
  }
  {
    const WeylGroup w = group("A1");
    const FiberReport r = fiber_bound(w.datum(), w, 2);
    CHECK(r.injective);
    CHECK(r.bound == 1);
    CHECK_FALSE(r.pgl2_exact);
  }
  {
    const WeylGroup w = group("B2", true);
    const FiberReport r = fiber_bound(w.datum(), w, 2);
    CHECK(r.d == 16);
    CHECK(r.a == 2);
    CHECK(r.bound == pow2(30));
  }
  CHECK_THROWS_AS(fiber_bound(datum("A1"), group("A1"), 1), Error);
}

TEST_CASE("non-simply-connected with type B1 factors but every root passes") {
  // SO(4): X(T) spanned by w1 + w2 and 2 w1.
  const RootDatum so4 = build_root_datum(CartanType::parse("A1+A1"),
                                         LatticeSpec::custom({{Rational(1), Rational(1)}, {Rational(2), Rational(0)}}));
  const WeylGroup w = generate(so4);
  const FiberReport r = fiber_bound(so4, w, 2);
  CHECK(r.reason == InjectivityReason::not_guaranteed);
  CHECK(r.A.empty());
  CHECK(r.injective);
  CHECK(r.bound == 1);
}

TEST_CASE("PGl(2) exact counts") {
  const Pgl2Count g2 = pgl2_exact_count(2);
  CHECK(g2.components == 2);
  CHECK(g2.d == 4);
  CHECK(g2.per_component_fiber == 4);
  CHECK(g2.lambda_quotient_order == 8);
  const Pgl2Count g3 = pgl2_exact_count(3);
  CHECK(g3.d == 8);
  CHECK(g3.per_component_fiber == 64);
  CHECK_THROWS_AS(pgl2_exact_count(1), Error);

  const WeylGroup w = group("A1", true);
  for (Int g = 2; g <= 10; ++g) {
    INFO("g=" << g);
    const Pgl2Count c = pgl2_exact_count(g);
    const FiberReport r = fiber_bound(w.datum(), w, g);
    CHECK(c.d == r.d);
    CHECK(c.per_component_fiber < r.bound);
    CHECK(c.lambda_quotient_order == pow2(static_cast<unsigned>(c.d - 1)));
    CHECK(c.lambda_quotient_order == r.bound);
  }
}

TEST_CASE("big bounds stay exact") {
  const WeylGroup w = group("B4", true);
  const FiberReport r = fiber_bound(w.datum(), w, 4);
  CHECK(r.a == 4);
  CHECK(r.d == 384 * 6);
  CHECK(r.bound == pow2(static_cast<unsigned>(4 * (384 * 6 - 1))));
}
