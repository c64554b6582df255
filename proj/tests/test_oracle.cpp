#include <doctest.h>

#include "congforge/error.hpp"
#include "congforge/oracle.hpp"

using namespace congforge;

TEST_CASE("oracle values at p=5") {
  CHECK(brute_force_oracle(5, "T1.1 LHS") == make_rational(3973, 72));
  CHECK(brute_force_oracle(5, "T1.2 LHS") == make_rational(3511, 48));
  CHECK(brute_force_oracle(5, "C2.10 LHS") == make_rational(727, 72));
  CHECK(brute_force_oracle(5, "ST10 LHS") == make_rational(175, 6));
  CHECK(brute_force_oracle(5, "ST10 RHS") == make_rational(100, 27));
  CHECK(brute_force_oracle(5, "sum g") == 750);
  CHECK(brute_force_oracle(5, "sum h") == 225);
  const ExactOracle o(5);
  CHECK(o.value("CONJ1 LHS") - o.value("CONJ1 RHS") == make_rational(-173125, 72));
}

TEST_CASE("oracle special numbers") {
  const ExactOracle o(7);
  CHECK(o.bernoulli(2) == make_rational(1, 6));
  CHECK(o.bernoulli(4) == make_rational(-1, 30));
  CHECK(o.euler_even(2) == 5);
  CHECK(ExactOracle(5).bernoulli_third() == make_rational(1, 27));
}

TEST_CASE("oracle parameters") {
  const ExactOracle o(7);
  CHECK_NOTHROW(o.value("P2.A LHS", BigInt(3)));
  CHECK_NOTHROW(o.value("C3.8 RHS", BigInt(-12)));
  CHECK_THROWS_AS(o.value("P2.A LHS"), Error);
  CHECK_THROWS_AS(o.value("NOPE LHS"), Error);
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(brute_force_oracle(101, "sum g"), Error);
  try {
    ExactOracle o(103);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeGuard);
  }
}
