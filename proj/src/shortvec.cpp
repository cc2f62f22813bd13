#include "shortvec.hpp"

#include <functional>

namespace latref {

namespace {

// floor(sqrt(q)) for q >= 0.
Int floor_sqrt(const Rat& q) {
  LATREF_CHECK(q >= 0, "sqrt of negative");
  Int lo = isqrt(q.get_num() / q.get_den());
  while (Rat((lo + 1) * (lo + 1)) <= q) ++lo;
  while (lo > 0 && Rat(lo * lo) > q) --lo;
  return lo;
}

}  // namespace

std::vector<ShortVector> short_vectors(const GramLattice& L, const Int& bound) {
  LATREF_CHECK(bound >= 1, "short_vectors: bound must be positive");
  int n = L.rank();
  // LDL^T decomposition: Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2.
  RatMat a = to_rat(L.gram());
  std::vector<Rat> d(n);
  RatMat u = RatMat::identity(n);
  for (int i = 0; i < n; ++i) {
    d[i] = a.at(i, i);
    LATREF_CHECK(d[i] > 0, "not positive definite");
    for (int j = i + 1; j < n; ++j) u.at(i, j) = a.at(i, j) / d[i];
    for (int k = i + 1; k < n; ++k)
      for (int l = k; l < n; ++l) {
        a.at(k, l) -= d[i] * u.at(i, k) * u.at(i, l);
        a.at(l, k) = a.at(k, l);
      }
  }

  std::vector<ShortVector> out;
  std::vector<Int> x(n, 0);

  std::function<void(int, Rat)> descend = [&](int level, Rat budget) {
    if (level < 0) {
      bool zero = true;
      for (auto& xi : x)
        if (xi != 0) zero = false;
      if (zero) return;
      std::vector<Int> xv(x.begin(), x.end());
      Int norm = L.norm(xv);
      if (norm > bound) return;  // guards rounding at the boundary
      std::vector<long> coords(n);
      for (int j = 0; j < n; ++j) coords[j] = to_long(x[j]);
      out.push_back(ShortVector{std::move(coords), norm});
      return;
    }
    Rat c = 0;
    for (int j = level + 1; j < n; ++j) c += u.at(level, j) * Rat(x[j]);
    Rat radius2 = budget / d[level];
    Int r = floor_sqrt(radius2);
    // |x + c| <= sqrt(radius2)
    Rat lo_q = -c - Rat(r), hi_q = -c + Rat(r);
    Int lo, hi;
    mpz_cdiv_q(lo.get_mpz_t(), lo_q.get_num().get_mpz_t(),
               lo_q.get_den().get_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), hi_q.get_num().get_mpz_t(),
               hi_q.get_den().get_mpz_t());
    --lo;
    ++hi;
    while (lo <= hi && (Rat(lo) + c) * (Rat(lo) + c) > radius2) ++lo;
    while (hi >= lo && (Rat(hi) + c) * (Rat(hi) + c) > radius2) --hi;
    if (lo > hi) {
      x[level] = 0;
      return;
    }
    bool outer_zero = true;
    for (int j = level + 1; j < n; ++j)
      if (x[j] != 0) outer_zero = false;
    if (outer_zero && lo < 0) lo = 0;  // report one of {v, -v}
    for (Int xi = lo; xi <= hi; ++xi) {
      x[level] = xi;
      Rat term = d[level] * (Rat(xi) + c) * (Rat(xi) + c);
      descend(level - 1, budget - term);
    }
    x[level] = 0;
  };

  descend(n - 1, Rat(bound));
  return out;
}

std::vector<long> norm_histogram(const GramLattice& L, const Int& bound) {
  std::vector<long> h(to_long(bound) + 1, 0);
  for (auto& sv : short_vectors(L, bound)) h[to_long(sv.norm)] += 2;
  return h;
}

}  // namespace latref
