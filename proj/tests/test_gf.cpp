#include <catch2/catch_amalgamated.hpp>

#include "bimoore/errors.hpp"
#include "bimoore/gf.hpp"

using namespace bimoore;

TEST_CASE("field axioms hold exhaustively for every supported order") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const GaloisField& F = GaloisField::get(q);
    INFO("q = " << q);
    REQUIRE(F.q() == q);

    for (int a = 0; a < q; ++a) {
      REQUIRE(F.add(a, 0) == a);
      REQUIRE(F.mul(a, 1) == a);
      REQUIRE(F.mul(a, 0) == 0);
      REQUIRE(F.add(a, F.neg(a)) == 0);
      if (a != 0) {
        REQUIRE(F.mul(a, F.inv(a)) == 1);
        REQUIRE(F.inv(F.inv(a)) == a);
      }
      for (int b = 0; b < q; ++b) {
        REQUIRE(F.add(a, b) == F.add(b, a));
        REQUIRE(F.mul(a, b) == F.mul(b, a));
        REQUIRE(F.sub(a, b) == F.add(a, F.neg(b)));
        for (int c = 0; c < q; ++c) {
          REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }

    // no zero divisors
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b) REQUIRE(F.mul(a, b) != 0);

    // the multiplicative group is cyclic of order q-1: some element has
    // order exactly q-1
    bool found_generator = false;
    for (int a = 1; a < q && !found_generator; ++a) {
      int x = a, order = 1;
      while (x != 1) {
        x = F.mul(x, a);
        ++order;
      }
      found_generator = order == q - 1;
    }
    REQUIRE(found_generator);
  }
}

TEST_CASE("prime fields are arithmetic mod p") {
  for (int p : {2, 3, 5, 7}) {
    const GaloisField& F = GaloisField::get(p);
    REQUIRE(F.characteristic() == p);
    REQUIRE(F.degree() == 1);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        REQUIRE(F.add(a, b) == (a + b) % p);
        REQUIRE(F.mul(a, b) == (a * b) % p);
      }
  }
}

TEST_CASE("extension field structure") {
  const GaloisField& f4 = GaloisField::get(4);
  REQUIRE(f4.characteristic() == 2);
  REQUIRE(f4.degree() == 2);
  // elements are digit vectors indexed in base p: x is element 2, and with
  // modulus x^2 + x + 1 we get x * x = x + 1 = element 3
  REQUIRE(f4.mul(2, 2) == 3);
  REQUIRE(f4.mul(2, 3) == 1);  // x(x+1) = x^2 + x = 1
  REQUIRE(f4.add(2, 3) == 1);  // characteristic 2: x + (x+1) = 1

  const GaloisField& f8 = GaloisField::get(8);
  REQUIRE(f8.characteristic() == 2);
  REQUIRE(f8.degree() == 3);
  // modulus x^3 + x + 1: x * x^2 = x^3 = x + 1 = element 3
  REQUIRE(f8.mul(2, 4) == 3);

  const GaloisField& f9 = GaloisField::get(9);
  REQUIRE(f9.characteristic() == 3);
  REQUIRE(f9.degree() == 2);
  // modulus x^2 + 1: x * x = -1 = 2
  REQUIRE(f9.mul(3, 3) == 2);
  // frobenius: a -> a^3 is an automorphism fixing exactly GF(3) = {0,1,2}
  int fixed = 0;
  for (int a = 0; a < 9; ++a) {
    int cube = f9.mul(a, f9.mul(a, a));
    if (cube == a) ++fixed;
  }
  REQUIRE(fixed == 3);
}

TEST_CASE("unsupported orders and bad elements are rejected") {
  for (int q : {0, 1, 6, 10, 11, 16, 25}) {
    REQUIRE_THROWS_AS(GaloisField::get(q), Error);
    try {
      GaloisField::get(q);
    } catch (const Error& e) {
      REQUIRE(e.code() == Errc::unsupported_order);
    }
  }
  const GaloisField& F = GaloisField::get(5);
  REQUIRE_THROWS_AS(F.inv(0), Error);
  REQUIRE_THROWS_AS(F.add(0, 5), Error);
  REQUIRE_THROWS_AS(F.mul(-1, 2), Error);
}

TEST_CASE("repeated lookups return the same cached field") {
  const GaloisField& a = GaloisField::get(9);
  const GaloisField& b = GaloisField::get(9);
  REQUIRE(&a == &b);
}
