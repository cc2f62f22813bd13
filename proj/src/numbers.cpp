#include "numbers.hpp"

#include <algorithm>

namespace latref {

std::vector<std::pair<long, int>> factor(Int n) {
  LATREF_CHECK(n > 0, "factor: positive integer expected");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; Int(p) * p <= n; p = (p == 2) ? 3 : p + 2) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) {
    LATREF_CHECK(n.fits_slong_p(), "factor: prime cofactor out of range");
    out.emplace_back(n.get_si(), 1);
  }
  return out;
}

std::vector<Int> divisors(const Int& n) {
  auto fs = factor(n);
  std::vector<Int> out{Int(1)};
  for (auto& [p, e] : fs) {
    size_t m = out.size();
    Int pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < m; ++j) out.push_back(out[j] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int big_omega(const Int& n) {
  int s = 0;
  for (auto& [p, e] : factor(n)) s += e;
  return s;
}

int small_omega(const Int& n) { return (int)factor(n).size(); }

Int fundamental_discriminant(const Int& D) {
  LATREF_CHECK(D != 0, "fundamental_discriminant of 0");
  if (is_square(D)) return 1;
  Int core = (D < 0) ? Int(-1) : Int(1);
  for (auto& [p, e] : factor(abs(D)))
    if (e % 2) core *= p;
  if (mod_pos(core, 4) == 1) return core;
  return 4 * core;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace latref
