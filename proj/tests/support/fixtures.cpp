#include "fixtures.hpp"

namespace latref::testing {

GramLattice zn(int n) { return GramLattice(IntMat::identity(n)); }

GramLattice diag(std::vector<long> entries) {
  int n = (int)entries.size();
  IntMat g(n, n);
  for (int i = 0; i < n; ++i) g.at(i, i) = entries[i];
  return GramLattice(g);
}

GramLattice a2() {
  IntMat g(2, 2);
  g.at(0, 0) = 2;
  g.at(0, 1) = g.at(1, 0) = 1;
  g.at(1, 1) = 2;
  return GramLattice(g);
}

GramLattice a_n(int n) {
  IntMat g(n, n);
  for (int i = 0; i < n; ++i) {
    g.at(i, i) = 2;
    if (i + 1 < n) g.at(i, i + 1) = g.at(i + 1, i) = -1;
  }
  return GramLattice(g);
}

GramLattice d4() {
  IntMat g(4, 4);
  long rows[4][4] = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.at(i, j) = rows[i][j];
  return GramLattice(g);
}

GramLattice f4() {
  // Rescaled dual of D4 (norms 2 and 4 swap roles); det 4.
  GramLattice D = d4();
  return integral_lattice(rescale(inverse(D.gram()), Rat(2)));
}

}  // namespace latref::testing
