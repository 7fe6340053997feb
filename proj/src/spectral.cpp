#include "hitchin/spectral.hpp"

#include <numeric>

namespace hitchin {

void require_genus(Int genus) {
  if (genus < 2) throw Error(ErrorCode::invalid_genus, "genus must be >= 2 (got " + std::to_string(genus) + ")");
}

CoverStats cover_stats(const RootDatum& datum, const WeylGroup& group, Int genus) {
  require_genus(genus);
  CoverStats s;
  s.genus = genus;
  s.deg_K = 2 * genus - 2;
  s.weyl_order = group.order();
  s.num_roots = static_cast<Int>(datum.num_roots());
  s.ram_count = checked_mul(s.num_roots, s.deg_K);
  for (const RootOrbit& orbit : group.root_orbits()) s.n.push_back(checked_mul(static_cast<Int>(orbit.size()), s.deg_K));
  s.branch_fiber_size = s.num_roots == 0 ? 0 : s.weyl_order / 2;
  s.d_alpha_size = checked_mul(s.weyl_order, s.deg_K);
  s.d = s.d_alpha_size;
  s.spectral_genus = spectral_genus(s);
  check_invariants(s, group);
  return s;
}

Int spectral_genus(const CoverStats& stats) {
  const Int positive = stats.num_roots / 2;
  return checked_add(1, checked_mul({stats.weyl_order, stats.genus - 1, 1 + positive}));
}

Int ramification_points(const CoverStats& stats) {
  if (stats.num_roots == 0) return 0;
  return checked_mul(stats.ram_count, stats.weyl_order / 2);
}

void check_invariants(const CoverStats& s, const WeylGroup& group) {
  const auto fail = [](const std::string& what) { throw Error(ErrorCode::inconsistent_input, "cover invariant violated: " + what); };
  if (s.weyl_order != group.order()) fail("|W| does not match the group");
  if (s.num_roots != static_cast<Int>(group.datum().num_roots())) fail("|R| does not match the datum");
  if (s.deg_K != 2 * s.genus - 2) fail("deg K = 2g-2");
  if (s.ram_count != s.num_roots * s.deg_K) fail("|Ram| = |R|(2g-2)");
  const auto& orbits = group.root_orbits();
  if (s.n.size() != orbits.size()) fail("one n_j per orbit");
  for (std::size_t j = 0; j < orbits.size(); ++j)
    if (s.n[j] != static_cast<Int>(orbits[j].size()) * s.deg_K) fail("n_j = |R_j|(2g-2)");
  if (std::accumulate(s.n.begin(), s.n.end(), Int{0}) != s.ram_count) fail("sum n_j = |Ram|");
  const Int positive = s.num_roots / 2;
  if (2 * s.spectral_genus - 2 != s.weyl_order * s.deg_K + positive * s.weyl_order * s.deg_K)
    fail("2g~-2 = |W|(2g-2) + |R+||W|(2g-2)");
  if (s.num_roots > 0) {
    if (s.weyl_order % 2 != 0) fail("|W| even when R is nonempty");
    if (ramification_points(s) != positive * s.d_alpha_size) fail("|Ram||W|/2 = sum |D_alpha|");
  }
  if (s.d != s.weyl_order * s.deg_K) fail("d = |W| deg K");
}

}  // namespace hitchin
