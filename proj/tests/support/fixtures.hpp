#pragma once

#include "lattice.hpp"

namespace latref::testing {

GramLattice zn(int n);
GramLattice diag(std::vector<long> entries);
GramLattice a2();
GramLattice a_n(int n);
GramLattice d4();
// F4-normalized root lattice Gram (D4 rescaled companion, det 4).
GramLattice f4();

}  // namespace latref::testing
