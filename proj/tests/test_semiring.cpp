#include <doctest.h>

#include "mwp/semiring.hpp"

using namespace mwp;

TEST_CASE("addition is max") {
  CHECK(coeff_add(Coeff::M, Coeff::W) == Coeff::W);
  CHECK(coeff_add(Coeff::Zero, Coeff::Zero) == Coeff::Zero);
  CHECK(coeff_add(Coeff::P, Coeff::Inf) == Coeff::Inf);
}

TEST_CASE("multiplication annihilates finite zeros only") {
  CHECK(coeff_mul(Coeff::W, Coeff::P) == Coeff::P);
  CHECK(coeff_mul(Coeff::Zero, Coeff::P) == Coeff::Zero);
  CHECK(coeff_mul(Coeff::Inf, Coeff::Zero) == Coeff::Inf);
  CHECK(coeff_mul(Coeff::Zero, Coeff::Inf) == Coeff::Inf);
}

TEST_CASE("exhaustive semi-ring laws over all 125 triples") {
  for (Coeff a : kAllCoeffs) {
    CHECK(coeff_add(a, Coeff::Zero) == a);
    CHECK(coeff_add(a, a) == a);
    CHECK(coeff_mul(a, Coeff::M) == a);
    CHECK(coeff_mul(Coeff::M, a) == a);
    for (Coeff b : kAllCoeffs) {
      CHECK(coeff_add(a, b) == coeff_add(b, a));
      for (Coeff c : kAllCoeffs) {
        CHECK(coeff_add(coeff_add(a, b), c) == coeff_add(a, coeff_add(b, c)));
        CHECK(coeff_mul(coeff_mul(a, b), c) == coeff_mul(a, coeff_mul(b, c)));
        CHECK(coeff_mul(a, coeff_add(b, c)) ==
              coeff_add(coeff_mul(a, b), coeff_mul(a, c)));
        CHECK(coeff_mul(coeff_add(b, c), a) ==
              coeff_add(coeff_mul(b, a), coeff_mul(c, a)));
      }
    }
  }
}

TEST_CASE("restricted to the finite grades, Zero annihilates") {
  for (Coeff a : {Coeff::Zero, Coeff::M, Coeff::W, Coeff::P}) {
    CHECK(coeff_mul(Coeff::Zero, a) == Coeff::Zero);
    CHECK(coeff_mul(a, Coeff::Zero) == Coeff::Zero);
  }
  // The extension is deliberately not strong.
  CHECK(coeff_mul(Coeff::Inf, Coeff::Zero) == Coeff::Inf);
}

TEST_CASE("rendering") {
  CHECK(coeff_str(Coeff::Zero) == "0");
  CHECK(coeff_str(Coeff::M) == "m");
  CHECK(coeff_str(Coeff::W) == "w");
  CHECK(coeff_str(Coeff::P) == "p");
  CHECK(coeff_str(Coeff::Inf) == "i");
  CHECK(coeff_from_char('w') == Coeff::W);
  CHECK_THROWS_AS(coeff_from_char('x'), std::invalid_argument);
}
