#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mtcm/cm_structures.hpp"
#include "mtcm/integer_lattice.hpp"

namespace mtcm {

// Saturated span of the Galois orbit of the Hodge cocharacter.
IntegerLattice mt_lattice(const CmType& t);

// Column map of N_{Phi_E} o N_{k/E}, from Z[G] to the cocharacters of G/H.
LatticeMap reflex_route_map(const CmType& t, const ReflexData& reflex);

// Saturated image of the reflex-route map; never consults the Galois orbit of mu.
IntegerLattice t0_lattice(const CmType& t);
IntegerLattice t0_lattice(const CmType& t, const ReflexData& reflex);

struct MtReport {
  CmType cm_type;
  IntegerLattice mt_lattice;
  IntegerLattice t0_lattice;
  std::size_t mt_rank;
  // Convention: rank below g + 1.
  bool degenerate;
  ReflexData reflex;
  bool theorem_holds;
  bool factorization_holds;
  bool column_identity_holds;
  std::vector<std::string> violations;
};

MtReport check_main_theorem(const CmType& t);

inline constexpr std::uint64_t kDefaultWeightCap = 1'000'000;

// Extended characters live in Z[G/H] + Z; the last coordinate is the Tate slot.
struct WeightMultiset {
  std::size_t m = 0, n = 0;
  Int r = 0;
  std::map<IntVector, std::uint64_t> entries;  // lexicographic

  std::uint64_t total() const;
};

WeightMultiset motive_weights(const CmType& t, std::size_t m, std::size_t n, Int r,
                              std::uint64_t cap = kDefaultWeightCap);

enum class ClassRoute { Hodge, Tate };

// Saturated span of (gamma, 1) over the route's generators, inside Z[G/H] + Z.
IntegerLattice extended_lattice(const CmType& t, ClassRoute route);

std::uint64_t invariant_class_dimension(const CmType& t, std::size_t m, std::size_t n, Int r,
                                        ClassRoute route,
                                        std::uint64_t cap = kDefaultWeightCap);

}  // namespace mtcm
