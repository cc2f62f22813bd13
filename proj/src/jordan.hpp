#pragma once

#include "lattice.hpp"

namespace latref {

// One p^scale-modular piece of a Jordan splitting. unit_gram has p-unit
// determinant (entries are p-integral rationals).
struct JordanBlock {
  int scale = 0;
  RatMat unit_gram;

  int dim() const { return unit_gram.rows(); }
};

struct JordanChain {
  long p = 0;
  std::vector<JordanBlock> blocks;  // ascending scale, one block per scale
};

// Jordan decomposition of L over Z_p. For p != 2 every block is diagonal;
// for p = 2 blocks are direct sums of odd 1x1 pieces and even 2x2 pieces
// [[2a,b],[b,2c]] with b odd.
JordanChain jordan_decompose(const GramLattice& L, long p);

// Integer Gram matrix congruent to the block's unit Gram mod p^k and
// positive definite, hence a GramLattice realizing the same Z_p-class.
IntMat integerize_block(const JordanBlock& b, long p);

// v_p of a nonzero rational.
int rat_valuation(const Rat& q, long p);

}  // namespace latref
