#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hitchin/lattice.hpp"
#include "hitchin/types.hpp"

namespace hitchin {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

struct SimpleComponent {
  Family family;
  int rank;

  bool operator==(const SimpleComponent&) const = default;
  std::string name() const;
};

/// Dynkin type of a split reductive group: simple components plus a central torus.
/// Always stored normalized: B1, C1 -> A1; C2 -> B2; D2 -> A1+A1; D3 -> A3.
struct CartanType {
  std::vector<SimpleComponent> components;
  int central_rank = 0;

  bool operator==(const CartanType&) const = default;

  /// "A2+B3", "E8", "T" (or "torus" / empty) for no simple components.
  /// Central rank is not part of the string.
  static CartanType parse(std::string_view text, int central_rank = 0);
  std::string to_string() const;
  int semisimple_rank() const;
};

/// Validates and applies the low-rank aliases. Throws Error(invalid_type).
CartanType normalize(CartanType type);

/// Standard Weyl group order of one simple component.
Int weyl_order(const SimpleComponent& c);

struct LatticeSpec {
  enum class Kind { simply_connected, adjoint, custom };
  Kind kind = Kind::simply_connected;
  /// Rows generate X(T), in coordinates of the fundamental weights of each
  /// component followed by the central characters. Entries may be rational
  /// on input; non-integral entries fall outside the weight lattice.
  RationalMatrix custom_basis;

  static LatticeSpec simply_connected() { return {Kind::simply_connected, {}}; }
  static LatticeSpec adjoint() { return {Kind::adjoint, {}}; }
  static LatticeSpec custom(RationalMatrix basis) { return {Kind::custom, std::move(basis)}; }

  bool operator==(const LatticeSpec&) const = default;
};

std::string to_string(LatticeSpec::Kind kind);

using RootIndex = std::size_t;

/// Root datum (X(T), R, Y(T), R^vee) with X(T) = Y(T) = Z^n and the canonical
/// pairing. Roots are listed positive first (by component, then height, then
/// simple-root coordinates), followed by their negatives in the same order.
class RootDatum {
 public:
  const CartanType& type() const noexcept { return type_; }
  const LatticeSpec& lattice() const noexcept { return lattice_; }

  int rank() const noexcept { return rank_; }
  int semisimple_rank() const noexcept { return type_.semisimple_rank(); }
  int central_rank() const noexcept { return type_.central_rank; }
  /// dim Z(G)
  int h() const noexcept { return type_.central_rank; }
  Int dim_G() const noexcept { return rank_ + static_cast<Int>(roots_.size()); }

  std::size_t num_roots() const noexcept { return roots_.size(); }
  std::size_t num_positive_roots() const noexcept { return roots_.size() / 2; }
  std::size_t num_components() const noexcept { return type_.components.size(); }

  const IntVector& root(RootIndex i) const;
  const IntVector& coroot(RootIndex i) const;
  /// Expansion of root i in the simple roots (length = semisimple rank).
  const IntVector& simple_coordinates(RootIndex i) const;
  std::size_t component_of(RootIndex i) const;
  /// (beta, beta) under the normalized invariant form (long roots have 2).
  Rational norm(RootIndex i) const;
  bool is_long(RootIndex i) const;
  RootIndex negative(RootIndex i) const;
  bool is_positive(RootIndex i) const { return i < num_positive_roots(); }

  const std::vector<RootIndex>& positive_roots() const noexcept { return positive_; }
  const std::vector<RootIndex>& simple_roots() const noexcept { return simple_; }
  /// Simple roots of component c, in Bourbaki order.
  std::vector<RootIndex> simple_roots_of(std::size_t component) const;
  /// Offset of component c's block in the simple-root coordinates.
  std::size_t simple_offset(std::size_t component) const { return simple_offset_.at(component); }

  std::optional<RootIndex> find_root(const IntVector& x) const;

  /// Canonical pairing <x, y> = x . y (identity matrix).
  const IntMatrix& pairing() const noexcept { return pairing_; }
  /// Gram matrix of the W-invariant form on the X(T) basis.
  const RationalMatrix& symmetric_form() const noexcept { return form_; }
  Rational form(std::span<const Int> x, std::span<const Int> y) const;

  /// <alpha_i, alpha_j^vee> over the simple roots.
  IntMatrix cartan_matrix() const;

 private:
  friend RootDatum build_root_datum(const CartanType& type, const LatticeSpec& lattice);

  CartanType type_;
  LatticeSpec lattice_;
  int rank_ = 0;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::vector<IntVector> simple_coords_;
  std::vector<std::size_t> component_;
  std::vector<Rational> norms_;
  std::vector<bool> long_;
  std::vector<RootIndex> positive_;
  std::vector<RootIndex> simple_;
  std::vector<std::size_t> simple_offset_;
  IntMatrix pairing_;
  RationalMatrix form_;
  std::unordered_map<IntVector, RootIndex, IntVectorHash> lookup_;
};

/// Cartan matrix C[i][j] = <alpha_i, alpha_j^vee> of one simple component, Bourbaki numbering.
IntMatrix component_cartan_matrix(const SimpleComponent& c);

RootDatum build_root_datum(const CartanType& type, const LatticeSpec& lattice);

/// The one-parameter subgroup beta' of a root, as a vector in Y(T).
IntVector coroot(const RootDatum& datum, RootIndex beta);

/// True iff Y(T) meets Q-span(R^vee) exactly in Z-span(R^vee).
bool derived_group_is_simply_connected(const RootDatum& datum);

/// Invariant factors of Z-span(R^vee) inside its saturation; their product is
/// the order of the fundamental group of the derived group.
std::vector<Int> derived_fundamental_group(const RootDatum& datum);

/// Whether some lambda in X(T) has <lambda, alpha^vee> = 1.
bool root_admits_unit_pairing(const RootDatum& datum, RootIndex alpha);

}  // namespace hitchin
