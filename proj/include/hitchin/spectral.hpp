#pragma once

#include <vector>

#include "hitchin/weyl.hpp"

namespace hitchin {

/// Counting data of the generic spectral cover C~ -> C for a genus-g base.
struct CoverStats {
  Int genus = 2;
  Int deg_K = 2;
  /// |Ram|, the number of branch points on C.
  Int ram_count = 0;
  /// Branch points per W-orbit of roots, ordered like WeylGroup::root_orbits().
  std::vector<Int> n;
  /// Points of C~ over each branch point (|W|/2); 0 when there are no roots.
  Int branch_fiber_size = 0;
  /// |D_alpha| for each positive root.
  Int d_alpha_size = 0;
  Int spectral_genus = 2;
  /// deg pi^*K
  Int d = 0;

  // Group data the counts were derived from, kept for consistency checks.
  Int weyl_order = 1;
  Int num_roots = 0;

  bool operator==(const CoverStats&) const = default;
};

CoverStats cover_stats(const RootDatum& datum, const WeylGroup& group, Int genus);

/// g~ = 1 + |W|(g-1)(1+|R+|), the Riemann-Hurwitz count with simple ramification.
Int spectral_genus(const CoverStats& stats);

/// Number of ramification points on C~: |Ram| * |W| / 2.
Int ramification_points(const CoverStats& stats);

/// Throws Error(inconsistent_input) naming the first violated invariant.
void check_invariants(const CoverStats& stats, const WeylGroup& group);

void require_genus(Int genus);

}  // namespace hitchin
