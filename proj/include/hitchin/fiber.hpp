#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hitchin/spectral.hpp"

namespace hitchin {

/// Which sufficient condition, if any, guarantees the abelianization map is injective.
enum class InjectivityReason { simply_connected_derived, no_B_component, not_guaranteed };

std::string to_string(InjectivityReason reason);
InjectivityReason injectivity_reason_from_string(const std::string& s);

/// Generic fiber data for PGl(2): two components, each fiber a torsor under
/// Lambda'/Lambda = (Z/2)^(d-1) modulo the component split.
struct Pgl2Count {
  Int components = 2;
  Int d = 0;
  BigInt per_component_fiber;   // 2^(d-2)
  BigInt lambda_quotient_order; // |Lambda'/Lambda| = 2^(d-1)

  bool operator==(const Pgl2Count&) const = default;
};

struct FiberReport {
  bool injective = true;
  InjectivityReason reason = InjectivityReason::not_guaranteed;
  /// Positive roots alpha with no lambda in X(T) such that <lambda, alpha^vee> = 1.
  std::vector<RootIndex> A;
  Int a = 0;
  Int d = 0;
  /// 2^(a(d-1)); 1 when A is empty.
  BigInt bound = 1;
  std::optional<Pgl2Count> pgl2_exact;

  bool operator==(const FiberReport&) const = default;
};

/// Checks (G,G) simply connected first, then absence of B_l components
/// (l >= 1, so A1 = B1 counts as type B).
InjectivityReason injectivity_verdict(const RootDatum& datum);

std::vector<RootIndex> exceptional_roots(const RootDatum& datum);

/// True for the root datum of PGl(2): a single A1 on its root lattice, no central torus.
bool is_pgl2(const RootDatum& datum);

FiberReport fiber_bound(const RootDatum& datum, const WeylGroup& group, Int genus);

Pgl2Count pgl2_exact_count(Int genus);

}  // namespace hitchin
