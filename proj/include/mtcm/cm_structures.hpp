#pragma once

#include <optional>
#include <vector>

#include "mtcm/finite_group.hpp"
#include "mtcm/integer_lattice.hpp"

namespace mtcm {

// A CM type: half of the cosets of G/H, one from each conjugate pair.
struct CmType {
  CmFieldDatum datum;
  std::vector<std::size_t> phi;  // sorted coset indices
};

CmType validate_cm_type(const CmFieldDatum& datum, std::vector<std::size_t> phi);

// Indicator of phi: the cocharacter sum of the dual basis vectors over phi.
IntVector hodge_cocharacter(const CmType& t);

// Moves the coefficient at coset j to coset tau*j.
IntVector galois_translate(const CosetSpace& space, Element tau, std::span<const Int> v);
IntVector galois_translate(const CmType& t, Element tau, std::span<const Int> v);

// Stabilizer of phi under the left coset action.
Subgroup reflex_subgroup(const CmType& t);

struct ReflexData {
  Subgroup h_e;
  std::size_t reflex_degree;
  CmType phi_e;                 // on (G, H_E, c)
  std::vector<Element> phi_k;   // preimage of phi in G
  std::vector<Element> phi_k_inverse;
};

ReflexData reflex_type(const CmType& t);

// Cocharacter map of x -> prod over sigma in S (one per right source-coset) of sigma(x),
// from the lattice of `source` to that of `target`. Needs S = S * H_source and
// S = H_target * S.
LatticeMap norm_pushforward(const std::vector<Element>& s, const CosetSpace& source,
                            const CosetSpace& target);

// The three norms of the reflex construction, all through norm_pushforward.
LatticeMap reflex_norm(const CmType& t, const ReflexData& reflex);        // G/1 -> G/H
LatticeMap norm_to_reflex_field(const CmType& t, const ReflexData& reflex);  // G/1 -> G/H_E
LatticeMap reflex_type_norm(const CmType& t, const ReflexData& reflex);   // G/H_E -> G/H

struct Descent {
  Subgroup h_prime;
  CmType type;
};

// Largest H' >= H over which phi descends; empty when the type is primitive.
std::optional<Descent> primitive_descent(const CmType& t);

// Embedding of the cocharacters of G/H' into those of G/H (sum over fibers).
LatticeMap fiber_inclusion(const CosetSpace& coarse, const CosetSpace& fine);

}  // namespace mtcm
