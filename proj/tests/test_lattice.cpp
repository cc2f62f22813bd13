#include <doctest.h>

#include "support/fixtures.hpp"

#include "lattice.hpp"

#include <random>
#include <sstream>

using namespace latref;
using namespace latref::testing;

TEST_CASE("determinants") {
  CHECK(zn(3).det() == 1);
  CHECK(a2().det() == 3);
  CHECK(diag({1, 1, 1, 25}).det() == 25);
}

TEST_CASE("dual grams") {
  CHECK(zn(2).dual() == to_rat(IntMat::identity(2)));
  RatMat d = a2().dual();
  CHECK(d.at(0, 0) == Rat(2, 3));
  CHECK(d.at(0, 1) == Rat(-1, 3));
  CHECK(diag({2}).dual().at(0, 0) == Rat(1, 2));
}

TEST_CASE("rescale") {
  RatMat two = rescale(zn(3), Rat(2));
  for (int i = 0; i < 3; ++i) CHECK(two.at(i, i) == 2);
  CHECK(rescale(a2(), Rat(1)) == to_rat(a2().gram()));
  // 3 * dual(A2) is again A2 up to basis: same det and even.
  GramLattice L = integral_lattice(rescale(a2().dual(), Rat(3)));
  CHECK(L.det() == 3);
  CHECK(L.is_even());
}

TEST_CASE("direct sums multiply determinants") {
  CHECK(direct_sum(diag({1}), diag({1})).gram() == IntMat::identity(2));
  CHECK(direct_sum(a2(), diag({1})).det() == 3);
  std::mt19937 rng(7);
  for (int t = 0; t < 25; ++t) {
    auto rnd2 = [&]() {
      long a = 1 + (long)(rng() % 4), c = 1 + (long)(rng() % 4);
      long b = (long)(rng() % 3) - 1;
      IntMat g(2, 2);
      g.at(0, 0) = a + 4;
      g.at(1, 1) = c + 4;
      g.at(0, 1) = g.at(1, 0) = b;
      return GramLattice(g);
    };
    GramLattice x = rnd2(), y = rnd2();
    CHECK(direct_sum(x, y).det() == x.det() * y.det());
  }
}

TEST_CASE("parity and primitivity") {
  CHECK(a2().is_even());
  CHECK(a2().is_primitive());
  CHECK(diag({2, 2}).is_even());
  CHECK_FALSE(diag({2, 2}).is_primitive());
  CHECK_FALSE(zn(3).is_even());
  CHECK(zn(3).is_primitive());
}

TEST_CASE("rescale by c multiplies det by c^n") {
  for (long c : {2L, 3L, 5L}) {
    GramLattice L = integral_lattice(rescale(a2(), Rat(c)));
    CHECK(L.det() == a2().det() * c * c);
  }
}

TEST_CASE("dual round trip") {
  GramLattice L = diag({2, 3, 7});
  CHECK(inverse(inverse(L.gram())) == to_rat(L.gram()));
}

TEST_CASE("positive definiteness enforced") {
  IntMat g(2, 2);
  g.at(0, 0) = 1;
  g.at(1, 1) = -1;
  CHECK_THROWS_AS(GramLattice{g}, error);
  IntMat h(2, 2);
  h.at(0, 0) = 1;
  h.at(0, 1) = 2;
  h.at(1, 0) = 2;
  h.at(1, 1) = 1;
  CHECK_THROWS_AS(GramLattice{h}, error);
}

TEST_CASE("gram text and record round trips") {
  GramLattice L = d4();
  std::istringstream is(write_gram_text(L));
  CHECK(read_gram_text(is).gram() == L.gram());
  CHECK(parse_gram_record(gram_record(L)).gram() == L.gram());
}

TEST_CASE("discriminant group exponent") {
  CHECK(zn(4).discriminant_exponent() == 1);
  CHECK(a2().discriminant_exponent() == 3);
  CHECK(diag({1, 1, 1, 25}).discriminant_exponent() == 25);
  CHECK(d4().discriminant_exponent() == 2);
}
