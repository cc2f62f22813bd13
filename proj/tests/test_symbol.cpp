#include <doctest.h>

#include "support/fixtures.hpp"

#include "symbol.hpp"

using namespace latref;
using namespace latref::testing;

TEST_CASE("identity_4 at 2: odd unimodular symbol with oddity 4") {
  LocalSymbol two = local_symbol(zn(4), 2);
  REQUIRE(two.parts.size() == 1);
  CHECK(two.parts[0].scale == 0);
  CHECK(two.parts[0].dim == 4);
  CHECK_FALSE(two.parts[0].even);
  CHECK(two.parts[0].oddity == 4);
  CHECK(two.parts[0].sign == +1);
  CHECK(print_symbol(genus_symbol(zn(4))) == "I(1_4^{+4})");
}

TEST_CASE("A2 at 3: two scale blocks with Legendre signs") {
  LocalSymbol ls = local_symbol(a2(), 3);
  REQUIRE(ls.parts.size() == 2);
  CHECK(ls.parts[0].scale == 0);
  CHECK(ls.parts[0].dim == 1);
  CHECK(ls.parts[0].sign == -1);  // (2/3) = -1
  CHECK(ls.parts[1].scale == 1);
  CHECK(ls.parts[1].dim == 1);
  CHECK(ls.parts[1].sign == -1);  // unit 1/2, (2/3) = -1
}

TEST_CASE("square free predicates") {
  CHECK(is_square_free(genus_symbol(zn(3))));
  CHECK(is_strongly_square_free(genus_symbol(zn(3))));
  GenusSymbol g = genus_symbol(diag({1, 1, 1, 25}));
  CHECK_FALSE(is_square_free(g));
  // det p^2 rank 3 with dims (1,2): square free but not strongly.
  GenusSymbol h = genus_symbol(diag({1, 7, 7}));
  CHECK(is_square_free(h));
  CHECK_FALSE(is_strongly_square_free(h));
}

TEST_CASE("oddity formula holds for lattice symbols") {
  for (const GramLattice& L :
       {zn(2), zn(3), zn(4), a2(), a_n(3), d4(), diag({1, 3, 7}),
        diag({2, 5, 6}), diag({1, 1, 1, 25}), diag({3, 3}), diag({1, 2, 4}),
        diag({2, 6}), diag({1, 4, 9})}) {
    GenusSymbol g = genus_symbol(L);
    CHECK(oddity_formula_total(g) == g.rank() % 8);
    CHECK(symbol_exists(g));
  }
}

TEST_CASE("parse and print round trip the compact table strings") {
  // Strings as printed in the signature-(5,1) table's 4-dimensional parts.
  std::vector<std::string> table = {
      "I(1_4^{+4})",       "I(2_5^{-1})",        "I(3^{-1})",
      "I(3^{+1})",         "II(2_II^{-2})",      "I(2_2^{+2})",
      "II(5^{+1})",        "I(5^{+1})",          "I(5^{-1})",
      "I(2_7^{+1}3^{+1})", "I(2_5^{-1}3^{-1})",  "I(2_3^{+3})",
      "II(3^{+2})",        "I(3^{+2})",          "I(3^{-2})",
      "I(2_3^{-1}5^{-1})", "II(2_2^{+2}3^{-1})", "II(2_6^{+2}3^{+1})",
      "I(2_0^{+2}3^{-1})", "I(2_0^{+2}3^{+1})",  "I(2_5^{-1}7^{+1})",
      "I(3^{+1}5^{+1})",   "I(3^{-1}5^{-1})",    "I(3^{+1}5^{-1})",
      "I(2_3^{-1}3^{-2})", "I(2_1^{+1}3^{+2})",  "II(2_II^{+2}5^{+1})",
      "II(2_II^{-2}5^{-1})", "I(2_2^{+2}5^{-1})", "II(3^{-1}7^{+1})",
      "I(2_1^{-3}3^{+1})", "I(2_5^{-3}3^{-1})",  "II(5^{-2})",
      "I(5^{-2})",         "I(5^{+2})",          "I(3^{+3})",
      "I(3^{-3})",         "II(2_2^{+2}7^{+1})", "II(2_II^{-2}3^{-2})",
      "II(2_II^{+2}3^{+2})", "II(2_0^{+2}3^{+2})", "I(2_2^{+2}3^{-2})",
      "I(2_2^{+2}3^{+2})", "II(3^{-2}5^{+1})",   "II(7^{+2})",
      "I(2_3^{-1}3^{+3})", "I(2_3^{-1}3^{-3})",  "II(2_2^{+2}3^{+1}5^{+1})",
      "II(2_2^{+2}3^{-1}5^{-1})", "II(2_6^{+2}3^{+1}5^{-1})",
      "I(2_5^{-3}3^{-2})", "I(2_7^{+3}3^{+2})",  "I(3^{+1}5^{-2})",
      "II(2_II^{-2}3^{+1}7^{+1})", "II(2_II^{-2}5^{+2})",
      "II(2_II^{+2}5^{-2})", "II(2_6^{+2}3^{-3})", "II(2_6^{-2}3^{+3})",
      "I(2_6^{+2}3^{+3})", "I(2_4^{-2}3^{-3})",  "II(5^{+3})",
      "I(5^{+3})",         "II(2_II^{-2}3^{+2}5^{+1})",
      "II(2_II^{-2}7^{-2})", "I(2_7^{+3}3^{+3})", "I(2_1^{-3}3^{-3})",
      "II(2_6^{-2}3^{+1}5^{-2})", "II(2_II^{+2}5^{+3})",
      "II(2_II^{-2}5^{-3})", "II(2_II^{+2}3^{+2})",
      "I(2_II^{+2}3^{-1})", "I(2_II^{-2}3^{+1})", "I(2_II^{+2}7^{+1})",
      "I(2_II^{+2}3^{+1}5^{+1})", "I(2_II^{+2}3^{-1}5^{-1})",
      "I(2_II^{+2}3^{-1}5^{+1})", "I(2_II^{+2}3^{-3})", "I(2_II^{-2}3^{+3})",
      "I(2_II^{-2}3^{-1}5^{-2})"};
  for (const auto& s : table) {
    GenusSymbol g = parse_symbol(s, 4);
    CHECK(print_symbol(g) == s);
  }
}

TEST_CASE("parsed symbols match lattice symbols") {
  CHECK(same_genus(parse_symbol("I(1_4^{+4})", 4), genus_symbol(zn(4))));
  GenusSymbol g = parse_symbol("I(2_5^{-1}3^{-1})", 4);
  CHECK(g.det() == 6);
  CHECK_FALSE(g.is_even());
  GenusSymbol h = parse_symbol("II(5^{+1})", 4);
  CHECK(h.det() == 5);
  CHECK(h.is_even());
}

TEST_CASE("malformed and nonexistent symbols are rejected") {
  CHECK_THROWS_AS(parse_symbol("I(2_5^{-1)", 4), error);
  CHECK_THROWS_AS(parse_symbol("I()", 4), error);
  CHECK_THROWS_AS(parse_symbol("I(6^{+1})", 4), error);  // 6 is not a prime power
  // Even unimodular rank-4: oddity formula obstruction.
  CHECK_THROWS_AS(parse_symbol("II(1_II^{+4})", 4), error);
}

TEST_CASE("canonical keys identify rescaled duals of A2 with A2") {
  GramLattice L = integral_lattice(rescale(a2().dual(), Rat(3)));
  CHECK(same_genus(genus_symbol(L), genus_symbol(a2())));
}
