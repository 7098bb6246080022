#include "fuscat/tube.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fuscat;

TEST_CASE("tube dimensions") {
  REQUIRE(TubeAlgebra(solve_Z1(+1)).dim() == 7);
  REQUIRE(TubeAlgebra(solve_small(GroupSpec({3}), +1)[0]).dim() == 171);
}

TEST_CASE("label round trip") {
  TubeAlgebra T(solve_small(GroupSpec({3}), -1)[0]);
  for (int i = 0; i < T.dim(); ++i) {
    TubeLabel L = T.label(i);
    int back = -1;
    switch (L.fam) {
      case Fam::A: back = T.idxA(L.g, L.h); break;
      case Fam::B: back = T.idxB(L.g, L.h); break;
      case Fam::C: back = T.idxC(L.g, L.h); break;
      case Fam::F: back = T.idxF(L.g, L.h); break;
      case Fam::D: back = T.idxD(L.g, L.k, L.h); break;
      case Fam::E: back = T.idxE(L.g, L.k, L.h); break;
      case Fam::G: back = T.idxG(L.g, L.h, L.k, L.l); break;
    }
    REQUIRE(back == i);
  }
}

TEST_CASE("structure table Z1") {
  for (int sign : {+1, -1}) {
    TubeAlgebra T(solve_Z1(sign));
    Report rep = T.structure_table();
    INFO(rep.summary());
    REQUIRE(rep.pass());
  }
}

TEST_CASE("structure table Z3") {
  for (int sign : {+1, -1}) {
    for (const auto& d : solve_small(GroupSpec({3}), sign)) {
      TubeAlgebra T(d);
      Report rep = T.structure_table();
      INFO(rep.summary());
      REQUIRE(rep.pass());
    }
  }
}

TEST_CASE("associativity on random triples") {
  TubeAlgebra T(solve_small(GroupSpec({3}), +1)[0]);
  Report rep = T.check_associativity(200, 99);
  INFO(rep.summary());
  REQUIRE(rep.pass());
}

TEST_CASE("two-sided unit") {
  for (int sign : {+1, -1}) {
    TubeAlgebra T1(solve_Z1(sign));
    TubeElement u = T1.unit();
    // Expected form: sum_g A_{g,0} + sum_g C_{g,g}.
    TubeElement expect;
    tube_add(expect, T1.idxA(0, 0), Complex{Real(1)});
    tube_add(expect, T1.idxC(0, 0), Complex{Real(1)});
    REQUIRE(tube_distance(u, expect) < Real("1e-25"));
  }
  TubeAlgebra T3(solve_small(GroupSpec({3}), -1)[1]);
  TubeElement u3 = T3.unit();
  TubeElement expect3;
  for (int g = 0; g < 3; ++g) {
    tube_add(expect3, T3.idxA(g, 0), Complex{Real(1)});
    tube_add(expect3, T3.idxC(g, g), Complex{Real(1)});
  }
  REQUIRE(tube_distance(u3, expect3) < Real("1e-25"));
}
