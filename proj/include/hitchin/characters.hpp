#pragma once

#include <optional>
#include <vector>

#include "hitchin/spectral.hpp"

namespace hitchin {

/// Formal integer combination of the basis characters
///   chi_B (trivial), chi_{S_i} (reflection rep of component i),
///   chi_reg (regular), chi_{Ind,j} (induced from H_j = {1, s_{alpha_j}}).
struct CharacterCombination {
  Int trivial = 0;
  std::vector<Int> reflection;  // per component
  Int regular = 0;
  std::vector<Int> induced;     // per orbit

  bool operator==(const CharacterCombination&) const = default;
};

enum class Strategy { automatic, analytic, enumerated };

/// Integer-valued class function on W. Carries an analytic descriptor, an
/// explicit value table (one entry per enumerated element), or both; when
/// both are present they must agree pointwise.
/// The referenced WeylGroup must outlive the class function.
class ClassFunction {
 public:
  ClassFunction(const WeylGroup& group, std::optional<CharacterCombination> descriptor,
                std::optional<std::vector<Int>> values);

  const WeylGroup& group() const noexcept { return *group_; }
  const std::optional<CharacterCombination>& descriptor() const noexcept { return descriptor_; }
  const std::optional<std::vector<Int>>& values() const noexcept { return values_; }
  bool has_values() const noexcept { return values_.has_value(); }

  /// Value at an enumerated element; uses the explicit table when present,
  /// else evaluates the descriptor.
  Int operator()(ElementIndex w) const;
  /// Value at the identity; always available.
  Int at_identity() const;

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(Int k, const ClassFunction& f);

 private:
  const WeylGroup* group_;
  std::optional<CharacterCombination> descriptor_;
  std::optional<std::vector<Int>> values_;
};

// Basis characters. Explicit tables are attached whenever W is enumerated;
// each table is computed from the group elements directly, never from the
// descriptor.
ClassFunction trivial_character(const WeylGroup& group);
/// chi_S(w) = trace of w on X(T) (x) C.
ClassFunction reflection_character(const WeylGroup& group);
/// chi_{S_i}(w): trace on the span of the roots of component i.
ClassFunction component_reflection_character(const WeylGroup& group, std::size_t component);
ClassFunction regular_character(const WeylGroup& group);
ClassFunction induced_character(const WeylGroup& group, std::size_t orbit);

/// chi_L = (2 - 2g - |Ram|) chi_reg + sum_j n_j chi_{Ind,j}.
ClassFunction lefschetz_character(const WeylGroup& group, const CoverStats& cover);
/// chi_{H^1} = 2 chi_B - chi_L.
ClassFunction h1_character(const WeylGroup& group, const CoverStats& cover);

/// (1/|W|) sum_w f(w) h(w), exact. The analytic route needs one side to be a
/// combination of chi_B and the chi_{S_i} only; otherwise it throws
/// strategy_unavailable. automatic prefers the full sum when both tables exist.
Rational inner_product(const ClassFunction& f, const ClassFunction& h, Strategy strategy = Strategy::automatic);

/// Same, asserting the result is an integer (both arguments are virtual characters).
Int inner_product_int(const ClassFunction& f, const ClassFunction& h, Strategy strategy = Strategy::automatic);

/// <chi_{B_j}, res_j chi_{S_i}>_{H_j}: dim S_i - 1 if R_j lies in component i, else dim S_i.
Int restriction_inner_product(const WeylGroup& group, std::size_t component, std::size_t orbit);

/// (chi_{S_i}(1) + chi_{S_i}(s_{alpha_j})) / 2 evaluated on the enumerated group.
Int restriction_inner_product_enumerated(const WeylGroup& group, std::size_t component, std::size_t orbit);

}  // namespace hitchin
