#pragma once

#include "numbers.hpp"

#include <initializer_list>
#include <vector>

namespace latref {

// Dense exact matrix, row-major. T is Int or Rat.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(rows * cols) {}
  Mat(int rows, int cols, std::vector<T> entries)
      : r_(rows), c_(cols), a_(std::move(entries)) {
    LATREF_CHECK((int)a_.size() == r_ * c_, "matrix entry count mismatch");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& at(int i, int j) { return a_[i * c_ + j]; }
  const T& at(int i, int j) const { return a_[i * c_ + j]; }
  const std::vector<T>& entries() const { return a_; }

  bool operator==(const Mat& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }

  Mat transpose() const {
    Mat t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    LATREF_CHECK(c_ == o.r_, "matrix product shape mismatch");
    Mat p(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.c_; ++j) p.at(i, j) += x * o.at(k, j);
      }
    return p;
  }

  Mat operator+(const Mat& o) const {
    LATREF_CHECK(r_ == o.r_ && c_ == o.c_, "matrix sum shape mismatch");
    Mat s(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
  }

  Mat scaled(const T& f) const {
    Mat s(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * f;
    return s;
  }

  bool is_symmetric() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
      for (int j = i + 1; j < c_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

RatMat to_rat(const IntMat& m);
// Requires every entry to be integral.
IntMat to_int(const RatMat& m);

// Determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& m);
Rat det(const RatMat& m);

// Exact inverse of a nonsingular matrix.
RatMat inverse(const RatMat& m);
inline RatMat inverse(const IntMat& m) { return inverse(to_rat(m)); }

// Leading principal minors m[0..k][0..k], k = 1..n.
std::vector<Int> leading_minors(const IntMat& m);

// Adjugate (transposed cofactor matrix), so m * adjugate(m) = det(m) * I.
IntMat adjugate(const IntMat& m);

// Row-style Hermite normal form; returns the nonzero rows (a basis of the
// row lattice). Input rows may be dependent.
IntMat hnf(const IntMat& m);

// Basis of the row lattice spanned by rational rows: HNF of the cleared
// matrix divided back by the common denominator.
RatMat row_lattice_basis(const RatMat& m);

}  // namespace latref
