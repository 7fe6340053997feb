#include "hitchin/prym.hpp"

namespace hitchin {

namespace {

void check_group(const RootDatum& datum, const WeylGroup& group) {
  if (!(group.datum().type() == datum.type()) || group.datum().rank() != datum.rank())
    throw Error(ErrorCode::inconsistent_input, "Weyl group was generated from a different root datum");
}

DimensionReport assemble(const RootDatum& datum, const WeylGroup& group, Int genus, Strategy strategy) {
  check_group(datum, group);
  const CoverStats cover = cover_stats(datum, group, genus);
  const ClassFunction trivial = trivial_character(group);
  const ClassFunction lefschetz = lefschetz_character(group, cover);
  const ClassFunction h1 = h1_character(group, cover);

  DimensionReport r;
  r.strategy = strategy;
  r.dim_M = moduli_dimension(datum, genus);
  r.trivial_lefschetz = inner_product_int(trivial, lefschetz, strategy);
  r.trivial_h1 = inner_product_int(trivial, h1, strategy);
  for (std::size_t i = 0; i < datum.num_components(); ++i) {
    const ClassFunction s = component_reflection_character(group, i);
    r.component_lefschetz.push_back(inner_product_int(s, lefschetz, strategy));
    r.component_h1.push_back(inner_product_int(s, h1, strategy));
  }
  return r;
}

void finish(DimensionReport& r) {
  if (r.M % 2 != 0) throw Error(ErrorCode::verification_failed, "M = dim Hom_W(S, H^1) is odd: " + std::to_string(r.M));
  r.dim_P = r.M / 2;
}

}  // namespace

Int moduli_dimension(const RootDatum& datum, Int genus) {
  require_genus(genus);
  return checked_add(checked_mul(genus - 1, datum.dim_G()), datum.h());
}

DimensionReport prym_dimension_analytic(const RootDatum& datum, const WeylGroup& group, Int genus) {
  DimensionReport r = assemble(datum, group, genus, Strategy::analytic);

  // <chi_B, chi_H1> = 2 - <chi_B, chi_L>, <chi_{S_i}, chi_H1> = -<chi_{S_i}, chi_L>
  if (r.trivial_h1 != 2 - r.trivial_lefschetz)
    throw Error(ErrorCode::verification_failed, "<chi_B, chi_H1> != 2 - <chi_B, chi_L>");
  for (std::size_t i = 0; i < r.component_h1.size(); ++i)
    if (r.component_h1[i] != -r.component_lefschetz[i])
      throw Error(ErrorCode::verification_failed, "<chi_S_i, chi_H1> != -<chi_S_i, chi_L>");

  r.M = checked_mul(datum.h(), r.trivial_h1);
  for (Int v : r.component_h1) r.M = checked_add(r.M, v);

  const Int ram = checked_mul(static_cast<Int>(datum.num_roots()), 2 * genus - 2);
  const Int closed = checked_add(checked_add(2 * datum.h(), checked_mul(2 * genus - 2, datum.rank())), ram);
  if (r.M != closed)
    throw Error(ErrorCode::verification_failed, "M = " + std::to_string(r.M) + " but 2h + (2g-2)dim T + |Ram| = " +
                                                    std::to_string(closed));
  finish(r);
  return r;
}

DimensionReport prym_dimension_enumerated(const RootDatum& datum, const WeylGroup& group, Int genus) {
  if (!group.enumerated())
    throw Error(ErrorCode::enumeration_unavailable,
                "enumerated strategy needs the full Weyl group (order " + std::to_string(group.order()) + ")");
  DimensionReport r = assemble(datum, group, genus, Strategy::enumerated);
  const CoverStats cover = cover_stats(datum, group, genus);
  r.M = inner_product_int(reflection_character(group), h1_character(group, cover), Strategy::enumerated);
  finish(r);
  return r;
}

DimensionReport prym_dimension(const RootDatum& datum, const WeylGroup& group, Int genus) {
  DimensionReport analytic = prym_dimension_analytic(datum, group, genus);
  if (!group.enumerated()) return analytic;
  const DimensionReport enumerated = prym_dimension_enumerated(datum, group, genus);
  analytic.strategy_agreement = enumerated.M == analytic.M && enumerated.trivial_lefschetz == analytic.trivial_lefschetz &&
                                enumerated.component_lefschetz == analytic.component_lefschetz &&
                                enumerated.trivial_h1 == analytic.trivial_h1 &&
                                enumerated.component_h1 == analytic.component_h1;
  return analytic;
}

}  // namespace hitchin
