#pragma once

#include <optional>
#include <vector>

#include "hitchin/types.hpp"

namespace hitchin {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// gcd of all entries (non-negative); 0 for an all-zero or empty range.
Int gcd_of(std::span<const Int> values);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form of m.
/// The product of the returned factors is the index of the row lattice of m
/// inside its saturation in Z^cols.
std::vector<Int> smith_invariants(IntMatrix m);

/// Inverse over Q, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

RationalMatrix to_rational(const IntMatrix& m);

}  // namespace hitchin
