#include "lattice.hpp"

#include <istream>
#include <sstream>

namespace latref {

GramLattice::GramLattice(IntMat gram) : gram_(std::move(gram)) {
  LATREF_CHECK(gram_.rows() >= 1, "empty Gram matrix");
  LATREF_CHECK(gram_.is_symmetric(), "Gram matrix not symmetric");
  auto minors = leading_minors(gram_);
  for (const Int& m : minors)
    LATREF_CHECK(m > 0, "Gram matrix not positive definite");
  det_ = minors.back();
}

bool GramLattice::is_even() const {
  for (int i = 0; i < rank(); ++i)
    if (mod_pos(gram_.at(i, i), 2) != 0) return false;
  return true;
}

bool GramLattice::is_primitive() const {
  Int g = 0;
  for (const Int& e : gram_.entries()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  return g == 1;
}

RatMat GramLattice::dual() const { return inverse(gram_); }

Int GramLattice::discriminant_exponent() const {
  IntMat adj = adjugate(gram_);
  Int g = 0;
  for (const Int& e : adj.entries()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  // Exponent of coker = det / gcd of (n-1)-minors.
  Int e;
  mpz_divexact(e.get_mpz_t(), det_.get_mpz_t(), g.get_mpz_t());
  return e;
}

Rat GramLattice::inner(const std::vector<Int>& x, const std::vector<Int>& y) const {
  LATREF_CHECK((int)x.size() == rank() && (int)y.size() == rank(), "vector size");
  Int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += x[i] * gram_.at(i, j) * y[j];
  return Rat(s);
}

Int GramLattice::norm(const std::vector<Int>& x) const {
  return inner(x, x).get_num();
}

std::optional<std::vector<long>> GramLattice::gram_long() const {
  std::vector<long> out;
  out.reserve(gram_.entries().size());
  for (const Int& e : gram_.entries()) {
    if (!e.fits_slong_p()) return std::nullopt;
    out.push_back(e.get_si());
  }
  return out;
}

RatMat rescale(const RatMat& gram, const Rat& alpha) {
  LATREF_CHECK(alpha != 0, "invalid scale 0");
  return gram.scaled(alpha);
}

RatMat rescale(const GramLattice& L, const Rat& alpha) {
  return rescale(to_rat(L.gram()), alpha);
}

GramLattice integral_lattice(const RatMat& gram) {
  return GramLattice(to_int(gram));
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  int n = a.rank() + b.rank();
  IntMat g(n, n);
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) g.at(i, j) = a.gram().at(i, j);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j)
      g.at(a.rank() + i, a.rank() + j) = b.gram().at(i, j);
  return GramLattice(g);
}

std::pair<GramLattice, Int> primitive_part(const GramLattice& L) {
  Int g = 0;
  for (const Int& e : L.gram().entries())
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g == 1) return {L, Int(1)};
  IntMat m(L.rank(), L.rank());
  for (int i = 0; i < L.rank(); ++i)
    for (int j = 0; j < L.rank(); ++j)
      mpz_divexact(m.at(i, j).get_mpz_t(), L.gram().at(i, j).get_mpz_t(),
                   g.get_mpz_t());
  return {GramLattice(m), g};
}

RatMat transformed_gram(const GramLattice& L, const RatMat& basis) {
  return basis * to_rat(L.gram()) * basis.transpose();
}

GramLattice read_gram_text(std::istream& in) {
  std::vector<std::vector<Int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) row.emplace_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  LATREF_CHECK(!rows.empty(), "no Gram rows in input");
  int n = (int)rows.size();
  IntMat g(n, n);
  for (int i = 0; i < n; ++i) {
    LATREF_CHECK((int)rows[i].size() == n, "Gram row length mismatch");
    for (int j = 0; j < n; ++j) g.at(i, j) = rows[i][j];
  }
  return GramLattice(g);
}

std::string write_gram_text(const GramLattice& L) {
  std::string out;
  for (int i = 0; i < L.rank(); ++i) {
    for (int j = 0; j < L.rank(); ++j) {
      if (j) out += ' ';
      out += L.gram().at(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

GramLattice parse_gram_record(const std::string& line) {
  std::istringstream ls(line);
  int n = 0;
  LATREF_CHECK(static_cast<bool>(ls >> n) && n >= 1, "bad gram record rank");
  IntMat g(n, n);
  std::string tok;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LATREF_CHECK(static_cast<bool>(ls >> tok), "gram record too short");
      g.at(i, j) = Int(tok);
    }
  return GramLattice(g);
}

std::string gram_record(const GramLattice& L) {
  std::string out = std::to_string(L.rank());
  for (const Int& e : L.gram().entries()) {
    out += ' ';
    out += e.get_str();
  }
  return out;
}

}  // namespace latref
