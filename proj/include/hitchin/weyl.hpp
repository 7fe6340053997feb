#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "hitchin/root_datum.hpp"

namespace hitchin {

inline constexpr Int kDefaultEnumerationCap = 2'000'000;

using ElementIndex = std::size_t;

/// A W-orbit R_j in R. All roots of an orbit share a component and a length.
struct RootOrbit {
  std::size_t component = 0;
  bool long_roots = true;
  std::vector<RootIndex> roots;  // ascending
  /// Lowest-index positive root; H_j = {1, s_representative}.
  RootIndex representative = 0;

  std::size_t size() const noexcept { return roots.size(); }
};

/// Weyl group acting on X(T) by integer matrices (column vectors).
/// The order is always known; elements are listed (in BFS order over the
/// simple reflections) only when the order does not exceed the cap.
class WeylGroup {
 public:
  const RootDatum& datum() const noexcept { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const noexcept { return datum_; }

  Int order() const noexcept { return order_; }
  bool enumerated() const noexcept { return !elements_.empty(); }
  Int cap() const noexcept { return cap_; }

  /// Simple reflections, in the order of datum().simple_roots().
  const std::vector<IntMatrix>& generators() const noexcept { return generators_; }

  const std::vector<IntMatrix>& elements() const;
  const IntMatrix& element(ElementIndex i) const;
  std::optional<ElementIndex> index_of(const IntMatrix& w) const;
  ElementIndex inverse(ElementIndex i) const;
  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  static constexpr ElementIndex identity_index() { return 0; }

  const std::vector<RootOrbit>& root_orbits() const noexcept { return orbits_; }

  /// If w is a reflection s_beta, the positive root beta.
  std::optional<RootIndex> reflection_root(const IntMatrix& w) const;

  /// Image of a root under an arbitrary lattice automorphism in W.
  RootIndex act(const IntMatrix& w, RootIndex root) const;

  /// chi_Ind(w) for orbit j: number of cosets uH_j fixed by w. Requires enumeration.
  Int fixed_coset_count(std::size_t orbit, ElementIndex w) const;

 private:
  friend WeylGroup generate(std::shared_ptr<const RootDatum> datum, Int cap);

  std::shared_ptr<const RootDatum> datum_;
  Int order_ = 1;
  Int cap_ = kDefaultEnumerationCap;
  std::vector<IntMatrix> generators_;
  std::vector<IntMatrix> elements_;
  std::vector<ElementIndex> inverse_;
  std::unordered_map<IntMatrix, ElementIndex, IntMatrixHash> index_;
  std::vector<RootOrbit> orbits_;
  std::vector<std::vector<Int>> induced_;  // per orbit, per element
  std::unordered_map<IntMatrix, RootIndex, IntMatrixHash> reflections_;
};

/// Reflection s_alpha(lambda) = lambda - <lambda, alpha^vee> alpha as a matrix on X(T).
IntMatrix reflection_matrix(const RootDatum& datum, RootIndex alpha);

WeylGroup generate(std::shared_ptr<const RootDatum> datum, Int cap = kDefaultEnumerationCap);

inline WeylGroup generate(const RootDatum& datum, Int cap = kDefaultEnumerationCap) {
  return generate(std::make_shared<const RootDatum>(datum), cap);
}

std::vector<RootOrbit> root_orbits(const WeylGroup& group);

/// #{cosets uH_j : w u H_j = u H_j}.
Int fixed_coset_count(const WeylGroup& group, std::size_t orbit, const IntMatrix& w);

}  // namespace hitchin
