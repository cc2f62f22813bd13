#include "matrix.hpp"

namespace latref {

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
  return r;
}

IntMat to_int(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      LATREF_CHECK(m.at(i, j).get_den() == 1, "matrix entry not integral");
      r.at(i, j) = m.at(i, j).get_num();
    }
  return r;
}

Int det(const IntMat& m) {
  LATREF_CHECK(m.rows() == m.cols(), "det of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = v;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

Rat det(const RatMat& m) {
  LATREF_CHECK(m.rows() == m.cols(), "det of non-square matrix");
  int n = m.rows();
  RatMat a = m;
  Rat d = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      d = -d;
    }
    d *= a.at(k, k);
    Rat inv = 1 / a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      Rat f = a.at(i, k) * inv;
      if (f == 0) continue;
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return d;
}

RatMat inverse(const RatMat& m) {
  LATREF_CHECK(m.rows() == m.cols(), "inverse of non-square matrix");
  int n = m.rows();
  RatMat a = m, inv = RatMat::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) { piv = i; break; }
    LATREF_CHECK(piv >= 0, "singular matrix");
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(piv, j));
        std::swap(inv.at(k, j), inv.at(piv, j));
      }
    Rat f = 1 / a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) *= f;
      inv.at(k, j) *= f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat g = a.at(i, k);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= g * a.at(k, j);
        inv.at(i, j) -= g * inv.at(k, j);
      }
    }
  }
  return inv;
}

std::vector<Int> leading_minors(const IntMat& m) {
  LATREF_CHECK(m.rows() == m.cols(), "minors of non-square matrix");
  std::vector<Int> out;
  for (int k = 1; k <= m.rows(); ++k) {
    IntMat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
    out.push_back(det(sub));
  }
  return out;
}

IntMat adjugate(const IntMat& m) {
  LATREF_CHECK(m.rows() == m.cols(), "adjugate of non-square matrix");
  int n = m.rows();
  IntMat adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat sub(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          sub.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = det(sub);
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

IntMat hnf(const IntMat& m) {
  int rows = m.rows(), cols = m.cols();
  IntMat a = m;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    // Reduce column `col` below `row` to a single nonnegative pivot by
    // pairwise gcd steps.
    while (true) {
      int piv = -1;
      for (int i = row; i < rows; ++i)
        if (a.at(i, col) != 0) { piv = i; break; }
      if (piv < 0) break;
      if (piv != row)
        for (int j = 0; j < cols; ++j) std::swap(a.at(row, j), a.at(piv, j));
      bool cleared = true;
      for (int i = row + 1; i < rows; ++i) {
        if (a.at(i, col) == 0) continue;
        Int q = a.at(i, col) / a.at(row, col);  // truncated division is fine
        if (q != 0)
          for (int j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(row, j);
        if (a.at(i, col) != 0) cleared = false;
      }
      if (cleared) break;
      // Move the smallest nonzero remainder up and repeat.
      for (int i = row + 1; i < rows; ++i)
        if (a.at(i, col) != 0 && abs(a.at(i, col)) < abs(a.at(row, col)))
          for (int j = 0; j < cols; ++j) std::swap(a.at(row, j), a.at(i, j));
    }
    if (a.at(row, col) == 0) continue;
    if (a.at(row, col) < 0)
      for (int j = 0; j < cols; ++j) a.at(row, j) = -a.at(row, j);
    // Reduce the rows above.
    for (int i = 0; i < row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(),
                 a.at(row, col).get_mpz_t());
      if (q != 0)
        for (int j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(row, j);
    }
    ++row;
  }
  IntMat out(row, cols);
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = a.at(i, j);
  return out;
}

RatMat row_lattice_basis(const RatMat& m) {
  Int den = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
  IntMat cleared(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Rat v = m.at(i, j) * Rat(den);
      cleared.at(i, j) = v.get_num();
    }
  IntMat h = hnf(cleared);
  RatMat out(h.rows(), h.cols());
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j) {
      out.at(i, j) = Rat(h.at(i, j), den);
      out.at(i, j).canonicalize();
    }
  return out;
}

}  // namespace latref
