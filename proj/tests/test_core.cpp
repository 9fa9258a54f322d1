#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "waring/core.hpp"

using namespace waring;

TEST_CASE("exponent sequence validates its input") {
  CHECK_THROWS_AS(ExponentSequence({}), std::invalid_argument);
  CHECK_THROWS_AS(ExponentSequence({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ExponentSequence({3, 2}), std::invalid_argument);
  CHECK_NOTHROW(ExponentSequence({2, 2, 3, 5}));
}

TEST_CASE("theta is exact: 1/2 + 1/3 + 1/6 = 1") {
  ExponentSequence ks({2, 3, 6});
  CHECK(ks.theta() == Rat(1));
  CHECK(ks.gcd() == 1);
}

TEST_CASE("theta for five squares is 5/2") {
  ExponentSequence ks = ExponentSequence::constant(2, 5);
  CHECK(ks.theta() == Rat(5, 2));
  CHECK(ks.gcd() == 2);
  CHECK(ks.size() == 5);
}

TEST_CASE("progression expansion") {
  ExponentSequence ks = expand_progression({3, 2, 4});  // 3, 5, 7, 9
  REQUIRE(ks.size() == 4);
  CHECK(ks[0] == 3);
  CHECK(ks[3] == 9);
  CHECK_THROWS_AS(expand_progression({1, 1, 3}), std::invalid_argument);
}

TEST_CASE("box sizes are exact integer roots") {
  ProblemInstance inst(ExponentSequence({2, 3}), Int(100));
  auto boxes = inst.box_sizes();
  REQUIRE(boxes.size() == 2);
  CHECK(boxes[0] == 10);  // floor(sqrt(100))
  CHECK(boxes[1] == 4);   // floor(100^{1/3})
}

TEST_CASE("problem instance validates n and eta") {
  ExponentSequence ks({2, 2});
  CHECK_THROWS_AS(ProblemInstance(ks, Int(0)), std::invalid_argument);
  CHECK_THROWS_AS(ProblemInstance(ks, Int(5), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ProblemInstance(ks, Int(5), 1.5), std::invalid_argument);
  CHECK_NOTHROW(ProblemInstance(ks, Int(5), 0.5));
}

TEST_CASE("kth_root_floor bracketing invariant on a pseudorandom sample") {
  Int n = 1;
  for (int i = 0; i < 200; ++i) {
    n = n * 48271 % 2147483647;  // classic Lehmer stream, deterministic
    for (int k = 2; k <= 7; ++k) {
      Int r = kth_root_floor(n, k);
      CHECK(ipow(r, static_cast<unsigned long>(k)) <= n);
      CHECK(ipow(r + 1, static_cast<unsigned long>(k)) > n);
    }
  }
}

TEST_CASE("kth_root_floor is exact on perfect powers") {
  for (int b = 1; b <= 50; ++b)
    for (int k = 2; k <= 5; ++k)
      CHECK(kth_root_floor(ipow(Int(b), static_cast<unsigned long>(k)), k) == b);
}

TEST_CASE("ceil_rat") {
  CHECK(ceil_rat(Rat(7, 2)) == 4);
  CHECK(ceil_rat(Rat(-7, 2)) == -3);
  CHECK(ceil_rat(Rat(6, 2)) == 3);
}
