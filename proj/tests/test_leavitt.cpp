#include "fuscat/leavitt.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace fuscat;

namespace {
LElement from_word(std::initializer_list<Letter> ls) {
  LElement e;
  e.add_term(word_of(ls), Complex{Real(1)});
  return e;
}
}  // namespace

TEST_CASE("defining relations reduce to scalars") {
  GroupSpec G({3});
  LElement one = LElement::unit();
  auto S = LElement::gen(GK::S), Sp = LElement::gen(GK::Sp);
  REQUIRE(equal(mul(G, Sp, S), one));
  for (int g = 0; g < 3; ++g) {
    auto T = LElement::gen(GK::T, g), Tp = LElement::gen(GK::Tp, g);
    REQUIRE(equal(mul(G, Tp, T), one));
    REQUIRE(mul(G, Sp, T).empty());
    REQUIRE(mul(G, Tp, S).empty());
    for (int h = 0; h < 3; ++h) {
      if (h != g) REQUIRE(mul(G, LElement::gen(GK::Tp, h), T).empty());
    }
  }
  // Completeness: s s' + sum_g t_g t'_g = 1.
  LElement sum = mul(G, S, Sp);
  for (int g = 0; g < 3; ++g) {
    sum += mul(G, LElement::gen(GK::T, g), LElement::gen(GK::Tp, g));
  }
  REQUIRE(equal(sum, one));
}

TEST_CASE("s s' substitution branches") {
  GroupSpec G({3});
  LElement e = from_word({letter(GK::S), letter(GK::Sp)});
  LElement r = reduce(G, e);
  // 1 - t_0 t'_0 - t_1 t'_1 - t_2 t'_2: four terms.
  REQUIRE(r.size() == 4);
  REQUIRE(scalar_equal(r.terms().at(LWord{}), Complex{Real(1)}, 1e-40));
  for (int g = 0; g < 3; ++g) {
    LWord w = word_of({letter(GK::T, g), letter(GK::Tp, g)});
    REQUIRE(scalar_equal(r.terms().at(w), Complex{Real(-1)}, 1e-40));
  }
}

TEST_CASE("reduced forms contain no forbidden patterns") {
  GroupSpec G({5});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    LElement r;
    reduce_word_into(G, random_word(rng, G, 8), Complex{Real(1)}, r);
    for (const auto& [w, c] : r.terms()) {
      for (size_t i = 0; i + 1 < w.size(); ++i) {
        Letter a = static_cast<Letter>(w[i]), b = static_cast<Letter>(w[i + 1]);
        REQUIRE_FALSE((is_primed(a) && !is_primed(b)));
        REQUIRE_FALSE((kind(a) == GK::S && kind(b) == GK::Sp));
      }
    }
  }
}

TEST_CASE("normal form is independent of reduction order") {
  GroupSpec G({3});
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    LWord w = random_word(rng, G, 9);
    LElement a, b;
    reduce_word_into(G, w, Complex{Real(1)}, a, ReduceOrder::Leftmost);
    reduce_word_into(G, w, Complex{Real(1)}, b, ReduceOrder::Rightmost);
    a.prune();
    b.prune();
    REQUIRE(equal(a, b));
  }
}

TEST_CASE("multiplication is associative") {
  GroupSpec G({3});
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    LElement x, y, z;
    reduce_word_into(G, random_word(rng, G, 6), Complex{Real(1), Real(1)}, x);
    reduce_word_into(G, random_word(rng, G, 6), Complex{Real(2), Real(-1)}, y);
    reduce_word_into(G, random_word(rng, G, 6), Complex{Real(0), Real(1)}, z);
    REQUIRE(equal(mul(G, mul(G, x, y), z), mul(G, x, mul(G, y, z)), 1e-25));
  }
}

TEST_CASE("star is a conjugate-linear anti-homomorphism") {
  GroupSpec G({5});
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    LElement x, y;
    reduce_word_into(G, random_word(rng, G, 6), Complex{Real(1), Real(2)}, x);
    reduce_word_into(G, random_word(rng, G, 6), Complex{Real(-1), Real(1)}, y);
    REQUIRE(equal(star(mul(G, x, y)), mul(G, star(y), star(x)), 1e-25));
    REQUIRE(equal(star(star(x)), reduce(G, x), 1e-25));
  }
}

TEST_CASE("star of a reduced element stays reduced") {
  GroupSpec G({3});
  // (t_1 t'_2)* = t_2 t'_1, no rewriting needed.
  LElement e = from_word({letter(GK::T, 1), letter(GK::Tp, 2)});
  LElement se = star(e);
  REQUIRE(se.size() == 1);
  REQUIRE(se.terms().count(word_of({letter(GK::T, 2), letter(GK::Tp, 1)})) == 1);
}
