#include <doctest.h>

#include "oracles.hpp"
#include "ptab/poly.hpp"

using namespace ptab;

TEST_SUITE("poly") {

TEST_CASE("trimming and basic arithmetic") {
  CHECK(UniPoly{1, 2, 0, 0}.degree() == 1);
  CHECK(UniPoly{0, 0}.is_zero());
  CHECK((UniPoly{1, 1} * UniPoly{1, 1}) == UniPoly{1, 2, 1});
  CHECK((UniPoly{1, 2} - UniPoly{1, 2}).is_zero());
  CHECK(UniPoly{0, 1}.times_z_power(2) == UniPoly{0, 0, 0, 1});
  CHECK((UniPoly{0, 1, 2}).str() == "2*z^2 + z");
  CHECK(UniPoly{}.str() == "0");
}

TEST_CASE("rising factorial") {
  CHECK(UniPoly::rising_factorial(0) == UniPoly{1});
  CHECK(UniPoly::rising_factorial(3) == UniPoly{0, 2, 3, 1});
}

TEST_CASE("shift of small polynomials") {
  CHECK(UniPoly{0, 1}.shifted() == UniPoly{1, 1});
  CHECK(UniPoly{0, 0, 1}.shifted() == UniPoly{1, 2, 1});
  CHECK(UniPoly{0, 0, 1}.shifted(Exec::parallel) == UniPoly{1, 2, 1});
}

TEST_CASE("property: both shift kernels agree and evaluate p at z + 1") {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto coeffs = gen.big_coefficients(40, 200);
    std::vector<BigInt> ref = coeffs;
    kernels::taylor_shift_reference(ref);
    CHECK(kernels::taylor_shift_convolution(coeffs, Exec::serial) == ref);
    CHECK(kernels::taylor_shift_convolution(coeffs, Exec::parallel) == ref);

    const UniPoly p(coeffs);
    const UniPoly q = p.shifted();
    for (int z = -3; z <= 3; ++z) CHECK(q(BigInt(z)) == p(BigInt(z + 1)));
    const Rational r = gen.positive_rational(9, 7);
    CHECK(q(r) == p(Rational(r + 1)));
  }
}

TEST_CASE("property: multiplication matches evaluation") {
  oracle::Gen gen(8);
  for (int trial = 0; trial < 200; ++trial) {
    const UniPoly a(gen.big_coefficients(12, 90));
    const UniPoly b(gen.big_coefficients(12, 90));
    for (int z = -2; z <= 2; ++z) {
      CHECK((a * b)(BigInt(z)) == a(BigInt(z)) * b(BigInt(z)));
      CHECK((a + b)(BigInt(z)) == a(BigInt(z)) + b(BigInt(z)));
    }
  }
}

}
