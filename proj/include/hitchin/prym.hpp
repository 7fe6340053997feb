#pragma once

#include <optional>
#include <vector>

#include "hitchin/characters.hpp"

namespace hitchin {

/// dim Hom_W(S, H^1) and the quantities it is assembled from.
struct DimensionReport {
  Strategy strategy = Strategy::analytic;
  Int M = 0;
  Int dim_P = 0;
  Int dim_M = 0;
  /// Set only when both strategies ran.
  std::optional<bool> strategy_agreement;

  // Intermediate inner products.
  Int trivial_lefschetz = 0;                  // <chi_B, chi_L>
  std::vector<Int> component_lefschetz;       // <chi_{S_i}, chi_L>
  Int trivial_h1 = 0;                         // <chi_B, chi_{H^1}>
  std::vector<Int> component_h1;              // <chi_{S_i}, chi_{H^1}>

  bool operator==(const DimensionReport&) const = default;
};

/// (g-1) dim G + h
Int moduli_dimension(const RootDatum& datum, Int genus);

/// M = h<chi_B, chi_H1> + sum_i <chi_{S_i}, chi_H1>, every term from the
/// closed-form inner products; cross-checked against 2h + (2g-2) dim T + |Ram|.
DimensionReport prym_dimension_analytic(const RootDatum& datum, const WeylGroup& group, Int genus);

/// M = (1/|W|) sum_w chi_S(w) chi_H1(w) over the enumerated group.
DimensionReport prym_dimension_enumerated(const RootDatum& datum, const WeylGroup& group, Int genus);

/// Analytic report; when W is enumerated the enumerated strategy also runs and
/// strategy_agreement records whether M and every intermediate matched.
DimensionReport prym_dimension(const RootDatum& datum, const WeylGroup& group, Int genus);

}  // namespace hitchin
