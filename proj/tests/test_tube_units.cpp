#include "fuscat/tube_units.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fuscat;

namespace {

std::vector<TubeBlock> all_blocks(const TubeAlgebra& T) {
  std::vector<TubeBlock> blocks = known_blocks(T);
  auto v = class_v_blocks(T, solve_class_v(T.datum()));
  for (auto& b : v) blocks.push_back(std::move(b));
  return blocks;
}

}  // namespace

TEST_CASE("trivial group decomposition") {
  for (int sign : {+1, -1}) {
    TubeAlgebra T(solve_Z1(sign));
    auto blocks = all_blocks(T);
    REQUIRE(blocks.size() == 4);  // i, ii, and two class-v blocks
    Report val = validate_blocks(T, blocks);
    INFO(val.summary());
    REQUIRE(val.pass());
    Report dec = check_decomposition(T, blocks);
    INFO(dec.summary());
    REQUIRE(dec.pass());
  }
}

TEST_CASE("Z3 block counts and sizes") {
  TubeAlgebra T(solve_small(GroupSpec({3}), +1)[0]);
  auto blocks = all_blocks(T);
  // 1 + 1 + 1 + 3 + 6 = 12 blocks.
  REQUIRE(blocks.size() == 12);
  int n4 = 0, n5 = 0, n3 = 0, n1 = 0;
  for (const auto& b : blocks) {
    switch (b.size()) {
      case 1: ++n1; break;
      case 3: ++n3; break;
      case 4: ++n4; break;
      case 5: ++n5; break;
      default: FAIL("unexpected block size");
    }
  }
  REQUIRE(n1 == 1);
  REQUIRE(n4 == 1);
  REQUIRE(n5 == 4);
  REQUIRE(n3 == 6);
}

TEST_CASE("Z3 matrix unit relations and decomposition") {
  for (int sign : {+1, -1}) {
    TubeAlgebra T(solve_small(GroupSpec({3}), sign)[sign > 0 ? 0 : 1]);
    auto blocks = all_blocks(T);
    Report val = validate_blocks(T, blocks);
    INFO(val.summary());
    REQUIRE(val.pass());
    Report dec = check_decomposition(T, blocks);
    INFO(dec.summary());
    REQUIRE(dec.pass());
  }
}

TEST_CASE("perturbed class-v data breaks the block relations") {
  TubeAlgebra T(solve_small(GroupSpec({3}), +1)[0]);
  auto sols = solve_class_v(T.datum());
  sols[0].C(1, 2) += Complex{Real(1) / 100};
  auto blocks = class_v_blocks(T, sols);
  REQUIRE_FALSE(validate_blocks(T, blocks).pass());
}
