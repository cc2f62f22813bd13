#include <doctest.h>

#include "support/fixtures.hpp"

#include "isometry.hpp"

#include <random>

using namespace latref;
using namespace latref::testing;

namespace {

GramLattice random_basis_change(const GramLattice& L, std::mt19937& rng) {
  int n = L.rank();
  IntMat U = IntMat::identity(n);
  for (int step = 0; step < 6; ++step) {
    int i = (int)(rng() % n), j = (int)(rng() % n);
    if (i == j) continue;
    long c = (long)(rng() % 3) - 1;
    for (int k = 0; k < n; ++k) U.at(i, k) += c * U.at(j, k);
  }
  RatMat g = to_rat(U) * to_rat(L.gram()) * to_rat(U).transpose();
  return integral_lattice(g);
}

}  // namespace

TEST_CASE("automorphism orders of standard lattices") {
  CHECK(aut_order(zn(3)) == 48);
  CHECK(aut_order(zn(4)) == 384);
  CHECK(aut_order(a2()) == 12);
  CHECK(aut_order(d4()) == 1152);
  CHECK(aut_order(a_n(3)) == 48);
}

TEST_CASE("aut order is a basis invariant") {
  std::mt19937 rng(3);
  for (int t = 0; t < 5; ++t) {
    GramLattice M = random_basis_change(a_n(3), rng);
    CHECK(aut_order(M) == 48);
    CHECK(is_isometric(M, a_n(3)));
  }
}

TEST_CASE("isometry is reflexive and symmetric on a sample") {
  std::vector<GramLattice> ls{zn(2), a2(), diag({1, 3}), diag({2, 2})};
  for (auto& a : ls)
    for (auto& b : ls) {
      CHECK(is_isometric(a, b) == is_isometric(b, a));
      if (a.gram() == b.gram()) CHECK(is_isometric(a, b));
    }
  CHECK_FALSE(is_isometric(diag({1, 3}), a2()));
}

TEST_CASE("scaled lattices keep their automorphisms") {
  GramLattice scaled = integral_lattice(rescale(a2(), Rat(5)));
  CHECK(aut_order(scaled) == 12);
}

TEST_CASE("reduce keeps the determinant and the isometry class") {
  std::mt19937 rng(17);
  GramLattice M = random_basis_change(d4(), rng);
  GramLattice R = reduce(M);
  CHECK(R.det() == M.det());
  CHECK(is_isometric(R, d4()));
}
