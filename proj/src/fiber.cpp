#include "hitchin/fiber.hpp"

#include <algorithm>

namespace hitchin {

namespace {

BigInt power_of_two(Int exponent) {
  if (exponent < 0) throw Error(ErrorCode::inconsistent_input, "negative exponent");
  BigInt r = 1;
  r <<= static_cast<unsigned>(exponent);
  return r;
}

}  // namespace

std::string to_string(InjectivityReason reason) {
  switch (reason) {
    case InjectivityReason::simply_connected_derived: return "simply_connected_derived";
    case InjectivityReason::no_B_component: return "no_B_component";
    case InjectivityReason::not_guaranteed: return "not_guaranteed";
  }
  return "?";
}

InjectivityReason injectivity_reason_from_string(const std::string& s) {
  for (auto r : {InjectivityReason::simply_connected_derived, InjectivityReason::no_B_component,
                 InjectivityReason::not_guaranteed})
    if (to_string(r) == s) return r;
  throw Error(ErrorCode::inconsistent_input, "unknown injectivity reason '" + s + "'");
}

InjectivityReason injectivity_verdict(const RootDatum& datum) {
  if (derived_group_is_simply_connected(datum)) return InjectivityReason::simply_connected_derived;
  const bool has_b = std::any_of(datum.type().components.begin(), datum.type().components.end(), [](const auto& c) {
    return c.family == Family::B || (c.family == Family::A && c.rank == 1);
  });
  return has_b ? InjectivityReason::not_guaranteed : InjectivityReason::no_B_component;
}

std::vector<RootIndex> exceptional_roots(const RootDatum& datum) {
  std::vector<RootIndex> a;
  for (RootIndex r : datum.positive_roots())
    if (!root_admits_unit_pairing(datum, r)) a.push_back(r);
  return a;
}

bool is_pgl2(const RootDatum& datum) {
  const auto& comps = datum.type().components;
  return comps.size() == 1 && comps[0] == SimpleComponent{Family::A, 1} && datum.central_rank() == 0 &&
         !derived_group_is_simply_connected(datum);
}

FiberReport fiber_bound(const RootDatum& datum, const WeylGroup& group, Int genus) {
  const CoverStats cover = cover_stats(datum, group, genus);
  FiberReport r;
  r.reason = injectivity_verdict(datum);
  r.A = exceptional_roots(datum);
  r.a = static_cast<Int>(r.A.size());
  r.d = cover.d;
  r.injective = r.reason != InjectivityReason::not_guaranteed || r.A.empty();
  if (r.injective && !r.A.empty())
    throw Error(ErrorCode::verification_failed, "injectivity verdict " + to_string(r.reason) + " with " +
                                                    std::to_string(r.a) + " roots failing the unit-pairing condition");
  r.bound = r.A.empty() ? BigInt(1) : power_of_two(checked_mul(r.a, r.d - 1));
  if (is_pgl2(datum)) r.pgl2_exact = pgl2_exact_count(genus);
  return r;
}

Pgl2Count pgl2_exact_count(Int genus) {
  require_genus(genus);
  Pgl2Count c;
  c.d = 4 * genus - 4;
  c.per_component_fiber = power_of_two(c.d - 2);
  c.lambda_quotient_order = power_of_two(c.d - 1);
  return c;
}

}  // namespace hitchin
