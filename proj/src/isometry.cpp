#include "isometry.hpp"

#include "shortvec.hpp"

#include <algorithm>
#include <functional>

namespace latref {

GramLattice reduce(const GramLattice& L) {
  int n = L.rank();
  RatMat g = to_rat(L.gram());

  auto gram_schmidt = [&](std::vector<std::vector<Rat>>& mu, std::vector<Rat>& B) {
    // mu and squared GS norms from the Gram matrix alone.
    std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) {
        Rat s = g.at(i, j);
        for (int k = 0; k < j; ++k) s -= mu[i][k] * r[j][k];
        r[i][j] = s;
        mu[i][j] = s / B[j];
      }
      Rat s = g.at(i, i);
      for (int k = 0; k < i; ++k) s -= mu[i][k] * r[i][k];
      B[i] = s;
      r[i][i] = s;
    }
  };

  // Row operations tracked directly on the Gram matrix: b_dst += c*b_src.
  auto row_add = [&](int dst, int src, const Int& c) {
    Rat cc(c);
    Rat newdiag =
        g.at(dst, dst) + 2 * cc * g.at(dst, src) + cc * cc * g.at(src, src);
    for (int k = 0; k < n; ++k) {
      if (k == dst) continue;
      g.at(dst, k) += cc * g.at(src, k);
      g.at(k, dst) = g.at(dst, k);
    }
    g.at(dst, dst) = newdiag;
  };
  auto row_swap = [&](int i, int j) {
    for (int k = 0; k < n; ++k) std::swap(g.at(i, k), g.at(j, k));
    for (int k = 0; k < n; ++k) std::swap(g.at(k, i), g.at(k, j));
  };

  const Rat delta(3, 4);
  int guard = 0;
  while (++guard < 10000) {
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> B(n, Rat(0));
    gram_schmidt(mu, B);
    bool changed = false;
    for (int i = 1; i < n && !changed; ++i) {
      for (int j = i - 1; j >= 0; --j) {
        Rat m = mu[i][j];
        if (m > Rat(1, 2) || m < Rat(-1, 2)) {
          // nearest integer
          Rat half = m;
          if (m >= 0)
            half += Rat(1, 2);
          else
            half -= Rat(1, 2);
          Int c;
          mpz_tdiv_q(c.get_mpz_t(), half.get_num().get_mpz_t(),
                     half.get_den().get_mpz_t());
          row_add(i, j, -c);
          changed = true;
          break;
        }
      }
      if (changed) break;
      if (i < n) {
        Rat lhs = B[i] + mu[i][i - 1] * mu[i][i - 1] * B[i - 1];
        if (lhs < delta * B[i - 1]) {
          row_swap(i, i - 1);
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return integral_lattice(g);
}

namespace {

struct IsoSearch {
  int n;
  std::vector<long> target;              // Gram of the domain lattice
  std::vector<std::vector<long>> cand;   // candidate image vectors (both signs)
  std::vector<std::vector<long>> inner;  // inner[i][j]: <cand_i, cand_j> cache? (computed on the fly)
  const std::vector<long>* codomain_gram;
  int codim;

  long ip(const std::vector<long>& a, const std::vector<long>& b) const {
    long s = 0;
    for (int i = 0; i < codim; ++i) {
      long row = 0;
      for (int j = 0; j < codim; ++j) row += (*codomain_gram)[i * codim + j] * b[j];
      s += a[i] * row;
    }
    return s;
  }
};

// Backtracking over images of basis vectors; counts completions when
// count_all, otherwise stops at the first.
long long search(IsoSearch& S, std::vector<int>& chosen, int depth,
                 bool count_all) {
  if (depth == S.n) return 1;
  long long total = 0;
  long want_norm = S.target[depth * S.n + depth];
  for (int c = 0; c < (int)S.cand.size(); ++c) {
    const auto& v = S.cand[c];
    if (S.ip(v, v) != want_norm) continue;
    bool ok = true;
    for (int j = 0; j < depth && ok; ++j)
      if (S.ip(S.cand[chosen[j]], v) != S.target[depth * S.n + j]) ok = false;
    if (!ok) continue;
    chosen[depth] = c;
    long long sub = search(S, chosen, depth + 1, count_all);
    total += sub;
    if (!count_all && total > 0) return total;
  }
  return total;
}

long long isometry_count(const GramLattice& from, const GramLattice& to,
                         bool count_all) {
  if (from.rank() != to.rank() || from.det() != to.det()) return 0;
  GramLattice a = reduce(from), b = reduce(to);
  auto ga = a.gram_long(), gb = b.gram_long();
  LATREF_CHECK(ga && gb, "isometry search: Gram entries exceed long range");
  int n = a.rank();
  Int maxdiag = 0;
  for (int i = 0; i < n; ++i) maxdiag = std::max(maxdiag, a.gram().at(i, i));
  Int maxdiag_b = 0;
  for (int i = 0; i < n; ++i) maxdiag_b = std::max(maxdiag_b, b.gram().at(i, i));
  // Cheap invariant: vector counts per norm must agree.
  Int hb = std::max(maxdiag, maxdiag_b);
  if (norm_histogram(a, hb) != norm_histogram(b, hb)) return 0;

  auto svs = short_vectors(b, maxdiag);
  IsoSearch S;
  S.n = n;
  S.codim = n;
  S.target = *ga;
  S.codomain_gram = &*gb;
  for (auto& sv : svs) {
    S.cand.push_back(sv.coords);
    std::vector<long> neg(sv.coords);
    for (auto& x : neg) x = -x;
    S.cand.push_back(std::move(neg));
  }
  std::vector<int> chosen(n, -1);
  return search(S, chosen, 0, count_all);
}

}  // namespace

Int aut_order(const GramLattice& L) {
  return Int((long)isometry_count(L, L, true));
}

bool is_isometric(const GramLattice& a, const GramLattice& b) {
  return isometry_count(a, b, false) > 0;
}

}  // namespace latref
