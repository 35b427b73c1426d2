#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "cheblab/bounds.hpp"
#include "cheblab/character.hpp"

namespace cheblab {

/// Data for Q(zeta_q)/Q with Galois group realized as units:q.
struct CyclotomicField {
  int q = 1;
  GroupPtr group;                  // (Z/q)^x acting on Z/q by multiplication
  CharacterTable table;
  std::vector<int> residue;        // element id -> residue mod q
  std::vector<ElementId> element;  // residue -> element id (unused slots 0)
  std::vector<int> conductor;      // per table row: conductor of the Dirichlet character
};

CyclotomicField cyclotomic_field(int q);

/// |disc Q(zeta_q)| = q^phi / prod_{p | q} p^{phi/(p-1)}.
mpz_class cyclotomic_discriminant(int q);

/// Smallest d | q with chi trivial on the units congruent to 1 mod d.
int dirichlet_conductor(const CyclotomicField& F, std::size_t row);

/// D_F = 1, n_F = 1 and Nf_chi = conductor(chi).
ConductorData cyclotomic_conductors(const CyclotomicField& F);

}  // namespace cheblab
