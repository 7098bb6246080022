#include "fuscat/class_v.hpp"
#include "fuscat/tube.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fuscat;

namespace {

Real min_dist_to(const Complex& w, const std::vector<Complex>& set) {
  Real best = 100;
  for (const auto& s : set) {
    Real r = abs(w - s);
    if (r < best) best = r;
  }
  return best;
}

}  // namespace

TEST_CASE("corner algebra structure constants match the tube engine") {
  HIDatum d = solve_small(GroupSpec({3}), +1)[0];
  CornerAlgebra A(d);
  TubeAlgebra T(d);
  const int nu = 3;
  // Map corner basis index -> tube basis index.
  auto tube_idx = [&](int i) {
    if (i == A.idxC()) return T.idxC(0, 0);
    if (i == A.idxF()) return T.idxF(0, 0);
    int k = (i - 2) / nu, l = (i - 2) % nu;
    return T.idxG(0, 0, k, l);
  };
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) {
      const CVector& closed = A.basis_product(i, j);
      const TubeElement& engine = T.basis_product(tube_idx(i), tube_idx(j));
      TubeElement expect;
      for (int k = 0; k < A.dim(); ++k) {
        if (abs(closed[k]) > Real(tol_zero())) {
          tube_add(expect, tube_idx(k), closed[k]);
        }
      }
      REQUIRE(tube_distance(engine, expect) < Real("1e-40"));
    }
  }
}

TEST_CASE("corner algebra is commutative") {
  HIDatum d = solve_small(GroupSpec({3}), -1)[0];
  CornerAlgebra A(d);
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) {
      REQUIRE(detail::vec_distance(A.basis_product(i, j),
                                   A.basis_product(j, i)) < Real("1e-45"));
    }
  }
}

TEST_CASE("trivial-group half-braidings") {
  // '+': twists exp(4 pi i/5), exp(6 pi i/5); '-': exp(8 pi i/5),
  // exp(2 pi i/5).
  {
    auto sols = solve_class_v(solve_Z1(+1));
    REQUIRE(sols.size() == 2);
    std::vector<Complex> expect{unit_phase(Real(2) / 5),
                                unit_phase(Real(3) / 5)};
    for (const auto& s : sols) {
      REQUIRE(min_dist_to(s.w, expect) < Real("1e-40"));
      REQUIRE(s.w_order == 5);
    }
    REQUIRE(abs(sols[0].w - sols[1].w) > Real(1) / 2);
    Report rep = verify_class_v(solve_Z1(+1), sols);
    INFO(rep.summary());
    REQUIRE(rep.pass());
  }
  {
    auto sols = solve_class_v(solve_Z1(-1));
    REQUIRE(sols.size() == 2);
    std::vector<Complex> expect{unit_phase(Real(4) / 5),
                                unit_phase(Real(1) / 5)};
    for (const auto& s : sols) {
      REQUIRE(min_dist_to(s.w, expect) < Real("1e-40"));
    }
    Report rep = verify_class_v(solve_Z1(-1), sols);
    INFO(rep.summary());
    REQUIRE(rep.pass());
  }
}

TEST_CASE("Z3 half-braidings") {
  for (int sign : {+1, -1}) {
    for (const auto& d : solve_small(GroupSpec({3}), sign)) {
      auto sols = solve_class_v(d);
      REQUIRE(sols.size() == 6);
      Report rep = verify_class_v(d, sols);
      INFO(rep.summary());
      REQUIRE(rep.pass());
      REQUIRE(rep.worst() < Real("1e-30"));
      // Twists are distinct roots of unity.
      for (size_t i = 0; i < sols.size(); ++i) {
        REQUIRE(sols[i].w_order > 0);
        for (size_t j = i + 1; j < sols.size(); ++j) {
          REQUIRE(abs(sols[i].w - sols[j].w) > Real("1e-10"));
        }
      }
    }
  }
}

TEST_CASE("solver is seed independent") {
  HIDatum d = solve_small(GroupSpec({3}), +1)[0];
  auto s1 = solve_class_v(d, 1);
  auto s2 = solve_class_v(d, 999);
  REQUIRE(s1.size() == s2.size());
  for (size_t i = 0; i < s1.size(); ++i) {
    REQUIRE(abs(s1[i].w - s2[i].w) < Real("1e-40"));
    for (int g = 0; g < 3; ++g) {
      for (int h = 0; h < 3; ++h) {
        REQUIRE(abs(s1[i].C(g, h) - s2[i].C(g, h)) < Real("1e-40"));
      }
    }
  }
}
