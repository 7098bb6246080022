#include "fuscat/scalar.hpp"
#include "fuscat/algebraic.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fuscat;

TEST_CASE("complex arithmetic basics") {
  Complex i{Real(0), Real(1)};
  Complex z = i * i;
  REQUIRE(scalar_equal(z, Complex{Real(-1)}, 1e-40));
  Complex q = Complex{Real(3), Real(4)} / Complex{Real(0), Real(2)};
  REQUIRE(scalar_equal(q, Complex{Real(2), Real(-3) / 2}, 1e-40));
  REQUIRE(abs(Complex{Real(3), Real(4)}) == Real(5));
}

TEST_CASE("unit phase and cis") {
  // e^{2 pi i / 3} has real part -1/2.
  Complex w = unit_phase(Real(1) / 3);
  REQUIRE(abs(w.re + Real(1) / 2) < Real("1e-70"));
  REQUIRE(abs(norm2(w) - 1) < Real("1e-70"));
  Complex w3 = w * w * w;
  REQUIRE(scalar_equal(w3, Complex{Real(1)}, 1e-70));
}

TEST_CASE("principal square root") {
  Complex z{Real(-4)};
  Complex r = sqrt(z);
  REQUIRE(scalar_equal(r, Complex{Real(0), Real(2)}, 1e-70));
  Complex w{Real(3), Real(-4)};
  Complex rw = sqrt(w);
  REQUIRE(scalar_equal(rw * rw, w, 1e-70));
  REQUIRE(rw.re >= 0);
}

TEST_CASE("precision is configurable") {
  set_precision_bits(512);
  Real two = 2;
  Real s = sqrt(two);
  REQUIRE(abs(s * s - two) < Real("1e-140"));
  set_precision_bits(256);
}

TEST_CASE("polynomial root refinement") {
  // Golden ratio minus 1: root of x^2 + x - 1.
  Complex r = refine_root({-1, 1, 1}, 0.618);
  REQUIRE(abs(r.re - (sqrt(Real(5)) - 1) / 2) < Real("1e-60"));
  REQUIRE(abs(r.im) < Real("1e-60"));
  // Complex seed converges to the matching complex root of x^2 + 1.
  Complex i = refine_root({1, 0, 1}, 0.0, 1.0, 0.5);
  REQUIRE(scalar_equal(i, Complex{Real(0), Real(1)}, 1e-60));
}

TEST_CASE("root refinement rejects bad seeds") {
  // Seed exactly between the roots of x^2 - 1 sits on the derivative zero.
  REQUIRE_THROWS_AS(refine_root({-1, 0, 1}, 0.0), std::exception);
}

TEST_CASE("delta values") {
  // (nu + sqrt(nu^2+4))/2 for nu=1 is the golden ratio.
  REQUIRE(abs(delta_pm(1, +1) - (1 + sqrt(Real(5))) / 2) < Real("1e-70"));
  REQUIRE(abs(delta_pm(1, -1) - (1 - sqrt(Real(5))) / 2) < Real("1e-70"));
  REQUIRE(abs(delta_pm(3, +1) - (3 + sqrt(Real(13))) / 2) < Real("1e-70"));
  // delta_+ * delta_- = -1.
  REQUIRE(abs(delta_pm(5, +1) * delta_pm(5, -1) + 1) < Real("1e-70"));
}
