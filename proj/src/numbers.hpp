#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latref {

using Int = mpz_class;
using Rat = mpq_class;

class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

#define LATREF_CHECK(cond, msg) \
  do {                          \
    if (!(cond)) throw ::latref::error(msg); \
  } while (0)

inline Int int_of(long v) { return Int(v); }

inline long to_long(const Int& v) {
  LATREF_CHECK(v.fits_slong_p(), "integer out of long range");
  return v.get_si();
}

// Kronecker symbol (a/b), the usual extension of the Legendre symbol.
inline int kronecker(const Int& a, const Int& b) {
  return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

inline int kronecker(const Int& a, long b) {
  return mpz_kronecker_si(a.get_mpz_t(), b);
}

inline int legendre(const Int& a, long p) { return kronecker(a, p); }

// Exact p-adic valuation; v_p(0) is an error.
inline int valuation(Int n, long p) {
  LATREF_CHECK(n != 0, "valuation of zero");
  int v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  mpz_class z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

inline long next_prime(long p) {
  mpz_class z(p), r;
  mpz_nextprime(r.get_mpz_t(), z.get_mpz_t());
  return r.get_si();
}

inline std::vector<long> first_primes(int count) {
  std::vector<long> ps;
  long p = 2;
  while ((int)ps.size() < count) {
    ps.push_back(p);
    p = next_prime(p);
  }
  return ps;
}

// Prime factorization by trial division, (prime, exponent) pairs, ascending.
std::vector<std::pair<long, int>> factor(Int n);

// All positive divisors, ascending.
std::vector<Int> divisors(const Int& n);

// Number of prime factors counted with multiplicity.
int big_omega(const Int& n);

// Number of distinct prime factors.
int small_omega(const Int& n);

// Modular inverse of a mod m (m > 0, gcd(a, m) = 1).
inline Int inv_mod(const Int& a, const Int& m) {
  Int r;
  int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  LATREF_CHECK(ok, "not invertible");
  return r;
}

inline Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Unit part of a rational at p mapped into Z/p^k (numerator and denominator
// must be prime to p).
inline long unit_class_mod(const Rat& q, long p, int k) {
  Int pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  Int num = mod_pos(q.get_num(), pk);
  Int den = mod_pos(q.get_den(), pk);
  LATREF_CHECK(num % p != 0 && den % p != 0, "not a p-adic unit");
  return to_long(mod_pos(num * inv_mod(den, pk), pk));
}

// Fundamental discriminant of the quadratic field Q(sqrt(D)); returns 1 when
// D is a perfect square.
Int fundamental_discriminant(const Int& D);

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t());
}

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace latref
