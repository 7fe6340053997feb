#include "hitchin/characters.hpp"

#include <algorithm>

namespace hitchin {

namespace {

Int component_dim(const WeylGroup& g, std::size_t component) {
  return g.datum().type().components.at(component).rank;
}

CharacterCombination zero_combination(const WeylGroup& g) {
  CharacterCombination c;
  c.reflection.assign(g.datum().num_components(), 0);
  c.induced.assign(g.root_orbits().size(), 0);
  return c;
}

std::size_t orbit_of(const WeylGroup& g, RootIndex root) {
  const auto& orbits = g.root_orbits();
  for (std::size_t j = 0; j < orbits.size(); ++j)
    if (std::binary_search(orbits[j].roots.begin(), orbits[j].roots.end(), root)) return j;
  throw Error(ErrorCode::inconsistent_input, "root belongs to no orbit");
}

// Trace of w on the Q-span of component c's roots, read off from the
// simple-root expansion of w(alpha_k) for the simple roots alpha_k of c.
Int component_trace(const WeylGroup& g, std::size_t component, const IntMatrix& w) {
  const RootDatum& d = g.datum();
  const std::size_t offset = d.simple_offset(component);
  Int t = 0;
  std::size_t k = 0;
  for (RootIndex s : d.simple_roots_of(component)) {
    t += d.simple_coordinates(g.act(w, s))[offset + k];
    ++k;
  }
  return t;
}

// Pointwise value of a descriptor at an enumerated element. chi_Ind is taken
// from its closed form: |W|/2 at 1, |W|/|R_j| at reflections in R_j, else 0.
Int evaluate(const WeylGroup& g, const CharacterCombination& c, ElementIndex w) {
  const bool identity = w == WeylGroup::identity_index();
  const IntMatrix& m = g.element(w);
  Int v = c.trivial;
  for (std::size_t i = 0; i < c.reflection.size(); ++i)
    if (c.reflection[i] != 0) v += c.reflection[i] * component_trace(g, i, m);
  if (identity) v += c.regular * g.order();
  if (identity) {
    for (Int k : c.induced) v += k * (g.order() / 2);
  } else if (const auto beta = g.reflection_root(m)) {
    const std::size_t j = orbit_of(g, *beta);
    v += c.induced[j] * (g.order() / static_cast<Int>(g.root_orbits()[j].size()));
  }
  return v;
}

Int evaluate_identity(const WeylGroup& g, const CharacterCombination& c) {
  Int v = c.trivial;
  for (std::size_t i = 0; i < c.reflection.size(); ++i) v += c.reflection[i] * component_dim(g, i);
  v = checked_add(v, checked_mul(c.regular, g.order()));
  for (Int k : c.induced) v = checked_add(v, checked_mul(k, g.order() / 2));
  return v;
}

CharacterCombination combine(const CharacterCombination& a, const CharacterCombination& b, Int sign) {
  CharacterCombination r = a;
  r.trivial += sign * b.trivial;
  r.regular += sign * b.regular;
  for (std::size_t i = 0; i < r.reflection.size(); ++i) r.reflection[i] += sign * b.reflection[i];
  for (std::size_t j = 0; j < r.induced.size(); ++j) r.induced[j] += sign * b.induced[j];
  return r;
}

ClassFunction combine(const ClassFunction& a, const ClassFunction& b, Int sign) {
  if (&a.group() != &b.group()) throw Error(ErrorCode::inconsistent_input, "class functions on different groups");
  std::optional<CharacterCombination> desc;
  if (a.descriptor() && b.descriptor()) desc = combine(*a.descriptor(), *b.descriptor(), sign);
  std::optional<std::vector<Int>> vals;
  if (a.values() && b.values()) {
    vals = *a.values();
    for (std::size_t i = 0; i < vals->size(); ++i) (*vals)[i] += sign * (*b.values())[i];
  }
  return ClassFunction(a.group(), std::move(desc), std::move(vals));
}

// Inner products of basis characters; nullopt for <Ind_j, Ind_k>.
struct Gram {
  const WeylGroup& g;

  enum Kind { kTrivial, kReflection, kRegular, kInduced };

  std::optional<Int> operator()(Kind a, std::size_t ia, Kind b, std::size_t ib) const {
    if (a > b) {
      std::swap(a, b);
      std::swap(ia, ib);
    }
    switch (a) {
      case kTrivial:
        return b == kReflection ? 0 : 1;
      case kReflection:
        if (b == kReflection) return ia == ib ? 1 : 0;
        if (b == kRegular) return component_dim(g, ia);
        return restriction_inner_product(g, ia, ib);
      case kRegular:
        return b == kRegular ? g.order() : g.order() / 2;
      case kInduced:
        return std::nullopt;
    }
    return std::nullopt;
  }
};

std::vector<std::tuple<Gram::Kind, std::size_t, Int>> terms(const CharacterCombination& c) {
  std::vector<std::tuple<Gram::Kind, std::size_t, Int>> out;
  if (c.trivial) out.emplace_back(Gram::kTrivial, 0, c.trivial);
  for (std::size_t i = 0; i < c.reflection.size(); ++i)
    if (c.reflection[i]) out.emplace_back(Gram::kReflection, i, c.reflection[i]);
  if (c.regular) out.emplace_back(Gram::kRegular, 0, c.regular);
  for (std::size_t j = 0; j < c.induced.size(); ++j)
    if (c.induced[j]) out.emplace_back(Gram::kInduced, j, c.induced[j]);
  return out;
}

Rational analytic_inner_product(const CharacterCombination& f, const CharacterCombination& h, const WeylGroup& g) {
  const Gram gram{g};
  Int total = 0;
  for (const auto& [ka, ia, ca] : terms(f))
    for (const auto& [kb, ib, cb] : terms(h)) {
      const auto v = gram(ka, ia, kb, ib);
      if (!v)
        throw Error(ErrorCode::strategy_unavailable,
                    "no closed form for the product of two induced characters; enumerate W instead");
      total = checked_add(total, checked_mul({ca, cb, *v}));
    }
  return Rational(total);
}

Rational enumerated_inner_product(const std::vector<Int>& f, const std::vector<Int>& h, Int order) {
  __int128 sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += static_cast<__int128>(f[i]) * h[i];
  const __int128 q = sum / order;
  const __int128 r = sum % order;
  if (q > INT64_MAX || q < INT64_MIN) throw Error(ErrorCode::overflow, "inner product overflows 64 bits");
  return Rational(static_cast<Int>(q)) + Rational(static_cast<Int>(r), order);
}

std::vector<Int> tabulate(const WeylGroup& g, auto&& fn) {
  std::vector<Int> v;
  v.reserve(static_cast<std::size_t>(g.order()));
  for (ElementIndex w = 0; w < static_cast<ElementIndex>(g.order()); ++w) v.push_back(fn(w));
  return v;
}

void check_cover(const WeylGroup& group, const CoverStats& cover) {
  try {
    check_invariants(cover, group);
  } catch (const Error& e) {
    throw Error(ErrorCode::inconsistent_input, std::string("cover does not belong to this group: ") + e.what());
  }
}

}  // namespace

ClassFunction::ClassFunction(const WeylGroup& group, std::optional<CharacterCombination> descriptor,
                             std::optional<std::vector<Int>> values)
    : group_(&group), descriptor_(std::move(descriptor)), values_(std::move(values)) {
  if (!descriptor_ && !values_) throw Error(ErrorCode::inconsistent_input, "class function needs a descriptor or values");
  if (values_ && (!group.enumerated() || static_cast<Int>(values_->size()) != group.order()))
    throw Error(ErrorCode::inconsistent_input, "explicit values must cover every element of W");
  if (descriptor_) {
    if (descriptor_->reflection.size() != group.datum().num_components() ||
        descriptor_->induced.size() != group.root_orbits().size())
      throw Error(ErrorCode::inconsistent_input, "descriptor shape does not match the group");
  }
  if (descriptor_ && values_) {
    for (ElementIndex w = 0; w < values_->size(); ++w) {
      const Int analytic = evaluate(group, *descriptor_, w);
      if (analytic != (*values_)[w])
        throw Error(ErrorCode::verification_failed,
                    "character disagreement at element " + std::to_string(w) + ": descriptor gives " +
                        std::to_string(analytic) + ", explicit table gives " + std::to_string((*values_)[w]));
    }
  }
}

Int ClassFunction::operator()(ElementIndex w) const {
  if (values_) return values_->at(w);
  return evaluate(*group_, *descriptor_, w);
}

Int ClassFunction::at_identity() const {
  if (values_) return values_->front();
  return evaluate_identity(*group_, *descriptor_);
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) { return combine(a, b, 1); }
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) { return combine(a, b, -1); }

ClassFunction operator*(Int k, const ClassFunction& f) {
  std::optional<CharacterCombination> desc;
  if (f.descriptor()) {
    desc = *f.descriptor();
    desc->trivial *= k;
    desc->regular *= k;
    for (Int& x : desc->reflection) x *= k;
    for (Int& x : desc->induced) x *= k;
  }
  std::optional<std::vector<Int>> vals;
  if (f.values()) {
    vals = *f.values();
    for (Int& x : *vals) x = checked_mul(k, x);
  }
  return ClassFunction(f.group(), std::move(desc), std::move(vals));
}

ClassFunction trivial_character(const WeylGroup& group) {
  auto c = zero_combination(group);
  c.trivial = 1;
  std::optional<std::vector<Int>> vals;
  if (group.enumerated()) vals = std::vector<Int>(static_cast<std::size_t>(group.order()), 1);
  return ClassFunction(group, c, std::move(vals));
}

ClassFunction reflection_character(const WeylGroup& group) {
  auto c = zero_combination(group);
  c.trivial = group.datum().h();
  std::fill(c.reflection.begin(), c.reflection.end(), 1);
  std::optional<std::vector<Int>> vals;
  if (group.enumerated()) vals = tabulate(group, [&](ElementIndex w) { return group.element(w).trace(); });
  return ClassFunction(group, c, std::move(vals));
}

ClassFunction component_reflection_character(const WeylGroup& group, std::size_t component) {
  if (component >= group.datum().num_components())
    throw Error(ErrorCode::index_out_of_range, "component index " + std::to_string(component) + " out of range");
  auto c = zero_combination(group);
  c.reflection[component] = 1;
  std::optional<std::vector<Int>> vals;
  if (group.enumerated())
    vals = tabulate(group, [&](ElementIndex w) { return component_trace(group, component, group.element(w)); });
  return ClassFunction(group, c, std::move(vals));
}

ClassFunction regular_character(const WeylGroup& group) {
  auto c = zero_combination(group);
  c.regular = 1;
  std::optional<std::vector<Int>> vals;
  if (group.enumerated())
    vals = tabulate(group, [&](ElementIndex w) { return w == WeylGroup::identity_index() ? group.order() : Int{0}; });
  return ClassFunction(group, c, std::move(vals));
}

ClassFunction induced_character(const WeylGroup& group, std::size_t orbit) {
  if (orbit >= group.root_orbits().size())
    throw Error(ErrorCode::index_out_of_range, "orbit index " + std::to_string(orbit) + " out of range");
  auto c = zero_combination(group);
  c.induced[orbit] = 1;
  std::optional<std::vector<Int>> vals;
  if (group.enumerated()) vals = tabulate(group, [&](ElementIndex w) { return group.fixed_coset_count(orbit, w); });
  return ClassFunction(group, c, std::move(vals));
}

ClassFunction lefschetz_character(const WeylGroup& group, const CoverStats& cover) {
  check_cover(group, cover);
  ClassFunction l = (2 - 2 * cover.genus - cover.ram_count) * regular_character(group);
  for (std::size_t j = 0; j < cover.n.size(); ++j) l = l + cover.n[j] * induced_character(group, j);
  return l;
}

ClassFunction h1_character(const WeylGroup& group, const CoverStats& cover) {
  return 2 * trivial_character(group) - lefschetz_character(group, cover);
}

Rational inner_product(const ClassFunction& f, const ClassFunction& h, Strategy strategy) {
  if (&f.group() != &h.group()) throw Error(ErrorCode::inconsistent_input, "class functions on different groups");
  const WeylGroup& g = f.group();
  const bool tables = f.has_values() && h.has_values();
  const bool descriptors = f.descriptor() && h.descriptor();
  switch (strategy) {
    case Strategy::enumerated:
      if (!tables) throw Error(ErrorCode::strategy_unavailable, "explicit character values unavailable");
      return enumerated_inner_product(*f.values(), *h.values(), g.order());
    case Strategy::analytic:
      if (!descriptors) throw Error(ErrorCode::strategy_unavailable, "analytic descriptor unavailable");
      return analytic_inner_product(*f.descriptor(), *h.descriptor(), g);
    case Strategy::automatic:
      if (tables) return enumerated_inner_product(*f.values(), *h.values(), g.order());
      if (descriptors) return analytic_inner_product(*f.descriptor(), *h.descriptor(), g);
      throw Error(ErrorCode::strategy_unavailable, "no common evaluation strategy for the two class functions");
  }
  return Rational(0);
}

Int inner_product_int(const ClassFunction& f, const ClassFunction& h, Strategy strategy) {
  const Rational r = inner_product(f, h, strategy);
  if (r.denominator() != 1)
    throw Error(ErrorCode::verification_failed,
                "inner product of virtual characters is not an integer: " + std::to_string(r.numerator()) + "/" +
                    std::to_string(r.denominator()));
  return r.numerator();
}

Int restriction_inner_product(const WeylGroup& group, std::size_t component, std::size_t orbit) {
  if (component >= group.datum().num_components())
    throw Error(ErrorCode::index_out_of_range, "component index " + std::to_string(component) + " out of range");
  if (orbit >= group.root_orbits().size())
    throw Error(ErrorCode::index_out_of_range, "orbit index " + std::to_string(orbit) + " out of range");
  const Int dim = component_dim(group, component);
  return group.root_orbits()[orbit].component == component ? dim - 1 : dim;
}

Int restriction_inner_product_enumerated(const WeylGroup& group, std::size_t component, std::size_t orbit) {
  if (orbit >= group.root_orbits().size())
    throw Error(ErrorCode::index_out_of_range, "orbit index " + std::to_string(orbit) + " out of range");
  const ClassFunction s = component_reflection_character(group, component);
  const auto idx = group.index_of(reflection_matrix(group.datum(), group.root_orbits()[orbit].representative));
  const Int sum = s(WeylGroup::identity_index()) + s(*idx);
  if (sum % 2 != 0) throw Error(ErrorCode::verification_failed, "odd restricted character sum");
  return sum / 2;
}

}  // namespace hitchin
