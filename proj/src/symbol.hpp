#pragma once

#include "jordan.hpp"

#include <map>
#include <string>
#include <vector>

namespace latref {

// One Jordan constituent in a local symbol. For p = 2, `even` is the
// parity (Type II when true) and `oddity` the trace invariant mod 8 of
// Type I constituents. For odd p, even/oddity are unused (true/0).
struct Constituent {
  int scale = 0;
  int dim = 0;
  int sign = +1;
  bool even = true;
  int oddity = 0;

  bool operator==(const Constituent&) const = default;
};

struct LocalSymbol {
  long p = 0;
  std::vector<Constituent> parts;  // ascending scale, every dim >= 1

  bool operator==(const LocalSymbol&) const = default;
  const Constituent* at_scale(int s) const;
  int dim_at_scale(int s) const;
  int max_scale() const { return parts.empty() ? 0 : parts.back().scale; }
  int valuation() const;  // v_p of the determinant
};

class GenusSymbol {
 public:
  GenusSymbol(int rank, std::vector<LocalSymbol> locals);

  int rank() const { return rank_; }
  const Int& det() const { return det_; }
  const std::vector<LocalSymbol>& locals() const { return locals_; }
  const LocalSymbol* local(long p) const;
  // Local symbol at p; trivial unimodular symbol when p is not stored.
  LocalSymbol local_or_unimodular(long p) const;

  bool is_even() const;      // Type II at the 2-adic scale-0 part
  bool is_primitive() const; // some constituent of scale 0 at every prime

  bool operator==(const GenusSymbol& o) const {
    return rank_ == o.rank_ && locals_ == o.locals_;
  }

 private:
  int rank_ = 0;
  std::vector<LocalSymbol> locals_;  // ascending p; p = 2 always present
  Int det_;
};

LocalSymbol local_symbol(const GramLattice& L, long p);
LocalSymbol local_symbol(const JordanChain& chain);
GenusSymbol genus_symbol(const GramLattice& L);

bool is_square_free(const GenusSymbol& g);
bool is_square_free_at(const GenusSymbol& g, long p);
bool is_strongly_square_free(const GenusSymbol& g);

// Canonical form: 2-adic constituents replaced by the lexicographically
// smallest (oddity fusion + sign walking)-equivalent choice. Two symbols
// describe the same genus iff their canonical forms are equal.
GenusSymbol canonicalize(const GenusSymbol& g);
// Canonical printed key, suitable for dedup maps.
std::string canonical_key(const GenusSymbol& g);
bool same_genus(const GenusSymbol& a, const GenusSymbol& b);

// Compact text form, e.g. I(2_5^{-1}3^{-1}) or II(5^{+1}).
std::string print_symbol(const GenusSymbol& g);
// Parses the compact form (rank required to reconstruct implied parts) or a
// fully explicit bare factor list (rank optional, may be -1).
GenusSymbol parse_symbol(const std::string& text, int rank = -1);

// Existence conditions for abstract symbols: per-constituent realizability,
// determinant consistency and the global oddity formula.
bool symbol_exists(const GenusSymbol& g, std::string* why = nullptr);

// Sum of p-excesses (odd p) plus 2-adic oddity, mod 8; a genus of a positive
// definite lattice satisfies total == rank (mod 8).
int oddity_formula_total(const GenusSymbol& g);

// Realizable (det class mod 8, oddity mod 8) pairs of a 2-adic unimodular
// constituent of the given dimension and parity.
const std::vector<std::pair<int, int>>& two_adic_classes(int dim, bool even);

// Determinant square class mod 8 of a 2-adic constituent (unique for
// realizable data).
int two_adic_det_class(const Constituent& c);

}  // namespace latref
