#pragma once

#include "matrix.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

namespace latref {

// Positive definite integral lattice given by a Gram matrix.
class GramLattice {
 public:
  explicit GramLattice(IntMat gram);

  int rank() const { return gram_.rows(); }
  const IntMat& gram() const { return gram_; }
  const Int& det() const { return det_; }

  bool is_even() const;
  // No prime divides every Gram entry.
  bool is_primitive() const;

  // Gram matrix of the dual lattice on the dual basis (inverse Gram).
  RatMat dual() const;

  // Largest elementary divisor of the discriminant group L^#/L.
  Int discriminant_exponent() const;

  Rat inner(const std::vector<Int>& x, const std::vector<Int>& y) const;
  Int norm(const std::vector<Int>& x) const;

  bool operator==(const GramLattice& o) const { return gram_ == o.gram_; }

  // Entries as int64 when they fit; hot loops use this snapshot.
  std::optional<std::vector<long>> gram_long() const;

 private:
  IntMat gram_;
  Int det_;
};

// Entrywise alpha * gram; alpha != 0.
RatMat rescale(const RatMat& gram, const Rat& alpha);
RatMat rescale(const GramLattice& L, const Rat& alpha);

// Interpret a rational symmetric matrix as an integral lattice.
GramLattice integral_lattice(const RatMat& gram);

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

// Divide out the content; returns the primitive rescale and the content.
std::pair<GramLattice, Int> primitive_part(const GramLattice& L);

// Gram of the sublattice/overlattice with row basis B (coordinates in L's
// basis, rational entries allowed): B * gram * B^T.
RatMat transformed_gram(const GramLattice& L, const RatMat& basis);

// Text I/O: whitespace-separated integer rows, one row per line.
GramLattice read_gram_text(std::istream& in);
std::string write_gram_text(const GramLattice& L);
// Structured record: "rank e11 e12 ... enn" on one line, row-major.
GramLattice parse_gram_record(const std::string& line);
std::string gram_record(const GramLattice& L);

}  // namespace latref
