#include "jordan.hpp"

#include <algorithm>
#include <map>

namespace latref {

int rat_valuation(const Rat& q, long p) {
  LATREF_CHECK(q != 0, "valuation of zero");
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

namespace {

// Symmetric elimination of all active rows against the pivot set S (indices
// already removed from `active`). B is the pivot submatrix.
void block_eliminate(RatMat& A, const std::vector<int>& active,
                     const std::vector<int>& S, const RatMat& Binv) {
  size_t m = S.size();
  // coeffs[k] = row of A[k][S] * Binv
  std::map<int, std::vector<Rat>> coeffs;
  for (int k : active) {
    std::vector<Rat> c(m, Rat(0));
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b) c[a] += A.at(k, S[b]) * Binv.at(b, a);
    coeffs[k] = std::move(c);
  }
  for (int k : active)
    for (int l : active) {
      if (l < k) continue;
      Rat corr = 0;
      for (size_t a = 0; a < m; ++a) corr += coeffs[k][a] * A.at(S[a], l);
      A.at(k, l) -= corr;
      if (l != k) A.at(l, k) = A.at(k, l);
    }
}

}  // namespace

JordanChain jordan_decompose(const GramLattice& L, long p) {
  LATREF_CHECK(is_prime(p), "not a prime");
  int n = L.rank();
  RatMat A = to_rat(L.gram());
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;

  // Collected (scale, pivot submatrix) pieces, later merged per scale.
  std::vector<std::pair<int, RatMat>> pieces;

  while (!active.empty()) {
    int minv = 0;
    bool first = true;
    int di = -1, oi = -1, oj = -1;
    for (size_t a = 0; a < active.size(); ++a)
      for (size_t b = a; b < active.size(); ++b) {
        int i = active[a], j = active[b];
        if (A.at(i, j) == 0) continue;
        int v = rat_valuation(A.at(i, j), p);
        if (first || v < minv) {
          minv = v;
          first = false;
          di = oi = oj = -1;
        }
        if (v == minv) {
          if (i == j && di < 0) di = i;
          if (i != j && oi < 0) { oi = i; oj = j; }
        }
      }
    LATREF_CHECK(!first, "degenerate block in Jordan split");

    if (di < 0 && p != 2) {
      // Only off-diagonal entries reach the minimum: e_i += e_j creates a
      // diagonal entry of the same valuation (2 is a unit).
      Rat newdiag = A.at(oi, oi) + 2 * A.at(oi, oj) + A.at(oj, oj);
      for (int k = 0; k < n; ++k) {
        if (k == oi) continue;
        A.at(oi, k) += A.at(oj, k);
        A.at(k, oi) = A.at(oi, k);
      }
      A.at(oi, oi) = newdiag;
      di = oi;
    }

    if (di >= 0) {
      std::vector<int> S{di};
      RatMat B(1, 1);
      B.at(0, 0) = A.at(di, di);
      active.erase(std::find(active.begin(), active.end(), di));
      RatMat Binv(1, 1);
      Binv.at(0, 0) = 1 / B.at(0, 0);
      block_eliminate(A, active, S, Binv);
      pieces.emplace_back(minv, B);
    } else {
      // p = 2, off-diagonal pivot: take the 2x2 block on (oi, oj).
      std::vector<int> S{oi, oj};
      RatMat B(2, 2);
      B.at(0, 0) = A.at(oi, oi);
      B.at(0, 1) = B.at(1, 0) = A.at(oi, oj);
      B.at(1, 1) = A.at(oj, oj);
      active.erase(std::find(active.begin(), active.end(), oi));
      active.erase(std::find(active.begin(), active.end(), oj));
      block_eliminate(A, active, S, inverse(B));
      pieces.emplace_back(minv, B);
    }
  }

  // Scale down and merge pieces of equal scale into block-diagonal Grams.
  std::map<int, std::vector<RatMat>> by_scale;
  Rat pr(p);
  for (auto& [v, B] : pieces) {
    Rat f = 1;
    for (int i = 0; i < v; ++i) f /= pr;
    by_scale[v].push_back(B.scaled(f));
  }
  JordanChain chain;
  chain.p = p;
  for (auto& [v, mats] : by_scale) {
    int dim = 0;
    for (auto& m : mats) dim += m.rows();
    RatMat G(dim, dim);
    int off = 0;
    for (auto& m : mats) {
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) G.at(off + i, off + j) = m.at(i, j);
      off += m.rows();
    }
    chain.blocks.push_back(JordanBlock{v, G});
  }
  return chain;
}

IntMat integerize_block(const JordanBlock& b, long p) {
  Int pk = 1;
  for (int i = 0; i < 5; ++i) pk *= p;  // entries fixed mod p^5
  int n = b.dim();
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Rat& q = b.unit_gram.at(i, j);
      Int num = mod_pos(q.get_num(), pk);
      Int den = q.get_den();
      LATREF_CHECK(den % p != 0, "block entry not p-integral");
      Int v = mod_pos(num * inv_mod(mod_pos(den, pk), pk), pk);
      m.at(i, j) = m.at(j, i) = v;
    }
  // Shift diagonal by multiples of p^5 until positive definite.
  for (int tries = 0; tries < 64; ++tries) {
    auto minors = leading_minors(m);
    bool ok = true;
    for (auto& mm : minors)
      if (mm <= 0) ok = false;
    if (ok) return m;
    for (int i = 0; i < n; ++i) m.at(i, i) += pk;
  }
  throw error("integerize_block: failed to reach positive definite form");
}

}  // namespace latref
