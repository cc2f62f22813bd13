#pragma once

#include "lattice.hpp"

namespace latref {

struct ShortVector {
  std::vector<long> coords;
  Int norm;
};

// All nonzero vectors with norm <= bound, one representative of each {v,-v}
// pair. Exact rational quadratic completion; no floating point.
std::vector<ShortVector> short_vectors(const GramLattice& L, const Int& bound);

// Count of vectors with each norm 1..bound (both signs counted).
std::vector<long> norm_histogram(const GramLattice& L, const Int& bound);

}  // namespace latref
