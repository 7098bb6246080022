#include "fuscat/hidatum.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fuscat;

TEST_CASE("trivial-group datums") {
  for (int sign : {+1, -1}) {
    HIDatum d = solve_Z1(sign);
    // A_{0,0} = -1/delta_pm = delta_mp = (1 -+ sqrt5)/2.
    Real expect = (Real(1) - sign * sqrt(Real(5))) / 2;
    REQUIRE(abs(d.a(0, 0).re - expect) < Real("1e-60"));
    REQUIRE(abs(d.a(0, 0).im) < Real("1e-60"));
    Report rep = verify_equations(d);
    INFO(rep.summary());
    REQUIRE(rep.pass());
    REQUIRE(rep.worst() < Real("1e-40"));
  }
  REQUIRE(classify(solve_Z1(+1)) == "unitary");
  REQUIRE(classify(solve_Z1(-1)) == "hermitian-nonunitary");
}

TEST_CASE("b branch") {
  // For the nu=1 '-' datum, b^2 = 1/delta_- < 0, so b is positive imaginary.
  HIDatum d = solve_Z1(-1);
  REQUIRE(d.b.im > 0);
  REQUIRE(abs(d.b.re) < Real("1e-60"));
  // For '+' it is positive real.
  HIDatum dp = solve_Z1(+1);
  REQUIRE(dp.b.re > 0);
  REQUIRE(abs(dp.b.im) < Real("1e-60"));
}

TEST_CASE("Z3 solutions") {
  for (int sign : {+1, -1}) {
    auto sols = solve_small(GroupSpec({3}), sign);
    REQUIRE(sols.size() == 2);
    for (const auto& d : sols) {
      Report rep = verify_equations(d);
      INFO(rep.summary());
      REQUIRE(rep.pass());
      REQUIRE(rep.worst() < Real("1e-40"));
    }
    // The two solutions are inequivalent.
    REQUIRE_FALSE(equivalence(sols[0], sols[1]).has_value());
  }
  // '+' solutions are unitary.
  for (const auto& d : solve_small(GroupSpec({3}), +1)) {
    REQUIRE(classify(d) == "unitary");
  }
}

TEST_CASE("Z5 solutions") {
  for (int sign : {+1, -1}) {
    auto sols = solve_small(GroupSpec({5}), sign);
    REQUIRE(sols.size() == 2);
    for (const auto& d : sols) {
      Report rep = verify_equations(d);
      INFO(rep.summary());
      REQUIRE(rep.pass());
      REQUIRE(rep.worst() < Real("1e-40"));
    }
    REQUIRE_FALSE(equivalence(sols[0], sols[1]).has_value());
  }
  for (const auto& d : solve_small(GroupSpec({5}), +1)) {
    REQUIRE(classify(d) == "unitary");
  }
}

TEST_CASE("equivalence detects automorphism relabelling") {
  auto sols = solve_small(GroupSpec({3}), +1);
  const HIDatum& d = sols[0];
  // Relabel by the inversion automorphism g -> -g.
  HIDatum d2 = d;
  const GroupSpec& G = d.group;
  for (int g = 0; g < 3; ++g) {
    for (int h = 0; h < 3; ++h) d2.A(g, h) = d.a(G.neg(g), G.neg(h));
  }
  auto pi = equivalence(d2, d);
  REQUIRE(pi.has_value());
  REQUIRE(verify_equations(d2).pass());
}

TEST_CASE("perturbed datum fails verification") {
  HIDatum d = solve_Z1(+1);
  d.A(0, 0) += Complex{Real(1) / 1000};
  REQUIRE_FALSE(verify_equations(d).pass());
}

TEST_CASE("derived quantities") {
  HIDatum d = solve_small(GroupSpec({3}), +1)[0];
  REQUIRE(d.mu() == 13);
  REQUIRE(d.m() == 6);
  REQUIRE(abs(d.lambda() - 3 * (1 + d.delta() * d.delta())) < Real("1e-60"));
}
