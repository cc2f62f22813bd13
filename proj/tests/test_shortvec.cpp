#include <doctest.h>

#include "support/fixtures.hpp"

#include "shortvec.hpp"

#include <random>

using namespace latref;
using namespace latref::testing;

namespace {

// Brute-force enumeration over a coordinate box, the independent oracle.
std::vector<std::vector<long>> box_vectors(const GramLattice& L, long bound) {
  int n = L.rank();
  long R = 1;
  // Crude box: |x_i| <= bound (entries of Gram are >= 1 on the diagonal).
  while (R * R <= bound) ++R;
  long side = bound + 1;
  std::vector<std::vector<long>> out;
  std::vector<long> x(n, -side);
  while (true) {
    bool zero = true, lead_neg = false;
    for (int i = n - 1; i >= 0; --i)
      if (x[i] != 0) {
        zero = false;
        lead_neg = x[i] < 0;
        break;
      }
    if (!zero && !lead_neg) {
      std::vector<Int> xv(x.begin(), x.end());
      Int q = L.norm(xv);
      if (q <= bound) out.push_back(x);
    }
    int i = 0;
    while (i < n && x[i] == side) x[i++] = -side;
    if (i == n) break;
    ++x[i];
  }
  return out;
}

}  // namespace

TEST_CASE("counts on known lattices") {
  CHECK(short_vectors(a2(), 2).size() == 3);
  CHECK(short_vectors(zn(4), 1).size() == 4);
  CHECK(short_vectors(d4(), 2).size() == 12);
}

TEST_CASE("norms are within bound and exact") {
  auto svs = short_vectors(diag({1, 3, 7}), 9);
  for (auto& sv : svs) {
    CHECK(sv.norm >= 1);
    CHECK(sv.norm <= 9);
    std::vector<Int> x(sv.coords.begin(), sv.coords.end());
    CHECK(diag({1, 3, 7}).norm(x) == sv.norm);
  }
}

TEST_CASE("agrees with box enumeration on random rank-3 lattices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    IntMat g(3, 3);
    for (int i = 0; i < 3; ++i) g.at(i, i) = 2 + (long)(rng() % 5);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        long v = (long)(rng() % 3) - 1;
        g.at(i, j) = g.at(j, i) = v;
      }
    auto minors = leading_minors(g);
    bool pd = true;
    for (auto& m : minors)
      if (m <= 0) pd = false;
    if (!pd) continue;
    GramLattice L(g);
    long B = 6;
    auto fast = short_vectors(L, B);
    auto slow = box_vectors(L, B);
    CHECK(fast.size() == slow.size());
  }
}
