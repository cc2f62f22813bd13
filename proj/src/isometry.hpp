#pragma once

#include "lattice.hpp"

namespace latref {

// Unimodularly equivalent Gram matrix with small entries (exact LLL).
GramLattice reduce(const GramLattice& L);

// Order of the isometry group O(L); exact backtracking count.
Int aut_order(const GramLattice& L);

bool is_isometric(const GramLattice& a, const GramLattice& b);

}  // namespace latref
