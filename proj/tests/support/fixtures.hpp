#pragma once

#include <vector>

#include "mtcm/atlas.hpp"
#include "mtcm/cm_structures.hpp"
#include "mtcm/finite_group.hpp"

namespace fixtures {

using namespace mtcm;

// D4 = <r, s>, r = (0 1 2 3), s = (1 3). Element order: 0 = 1, 1 = r, 2 = s,
// 3 = r^2, 4 = rs, 5 = r^3 s, 6 = r^3, 7 = r^2 s.
inline constexpr Element kD4R = 1, kD4S = 2, kD4R2 = 3, kD4RS = 4;

inline GroupPtr d4_group() {
  GroupSpec spec = permutations({{1, 2, 3, 0}, {0, 3, 2, 1}});
  spec.name = "D4";
  return make_group(spec);
}

inline CmType iq() {
  auto g = make_group(cyclic(2));
  return validate_cm_type(validate_cm_datum(g, Subgroup(g, {0}), 1), {0});
}

inline CmType c4() {
  auto g = make_group(cyclic(4));
  return validate_cm_type(validate_cm_datum(g, Subgroup(g, {0}), 2), {0, 1});
}

// Z/2 x Z/4 with index 4a + b; c = (1,2) = 6; phi = {0} x Z/4.
inline CmType c2xc4() {
  auto g = make_group(direct_product({cyclic(2), cyclic(4)}));
  return validate_cm_type(validate_cm_datum(g, Subgroup(g, {0}), 6), {0, 1, 2, 3});
}

inline CmType d4() {
  auto g = d4_group();
  return validate_cm_type(validate_cm_datum(g, Subgroup(g, {0, kD4S}), kD4R2), {0, 1});
}

inline std::vector<CmType> all() { return {iq(), c4(), c2xc4(), d4()}; }

// Every valid (G, H, c) with |G| <= bound over the cyclic, abelian-product,
// dihedral and dicyclic families, H over all subgroups.
inline std::vector<CmFieldDatum> corpus_data(std::size_t bound = 16) {
  std::vector<CmFieldDatum> out;
  for (Family f : {Family::Cyclic, Family::AbelianProducts, Family::Dihedral, Family::Dicyclic})
    for (const GroupSpec& spec : family_members(f, bound))
      for (auto& d : admissible_data(make_group(spec), true)) out.push_back(std::move(d));
  return out;
}

}  // namespace fixtures
