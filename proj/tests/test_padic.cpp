#include <doctest.h>

#include <random>

#include "congforge/error.hpp"
#include "congforge/padic.hpp"
#include "congforge/rational.hpp"
#include "congforge/residue.hpp"

using namespace congforge;

namespace {

bool throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("res_from_int reduces to the canonical representative") {
  CHECK(Residue::from_int(5, 3, -1).value() == 124);
  CHECK(Residue::from_int(5, 3, 126).value() == 1);
  CHECK(Residue::from_int(7, 1, 30).value() == 2);
}

TEST_CASE("modulus must fit below 2^127") {
  CHECK_NOTHROW(Modulus(10007, 8));
  CHECK(throws_kind([] { Modulus(1000003, 7); }, ErrorKind::Config));
  CHECK(throws_kind([] { Modulus(3, 2); }, ErrorKind::Config));
}

TEST_CASE("res_inv") {
  const Residue twelve = Residue::from_int(5, 3, 12);
  CHECK(twelve.inv().value() == 73);
  CHECK(Residue::from_int(5, 3, 1).inv().value() == 1);
  CHECK(throws_kind([] { Residue::from_int(5, 3, 5).inv(); }, ErrorKind::NotAUnit));
}

TEST_CASE("wide moduli multiply correctly") {
  // 10007^5 > 2^64 takes the shift-and-add path; compare against GMP.
  const Modulus mod(10007, 5);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const u128 a = ((static_cast<u128>(rng()) << 64) | rng()) % mod.value();
    const u128 b = ((static_cast<u128>(rng()) << 64) | rng()) % mod.value();
    const mpz_class expect = to_mpz(a) * to_mpz(b) % to_mpz(mod.value());
    CHECK(to_mpz(mod.mul(a, b)) == expect);
    if (a % 10007 != 0) CHECK(mod.mul(a, mod.inv(a)) == 1);
  }
}

TEST_CASE("padic_from_ratio") {
  const PadicRat x = PadicRat::from_ratio(5, 3, 25, 12);
  CHECK(x.valuation() == 2);
  CHECK(x.unit() == 73);
  CHECK(x.relative_precision() == 3);

  const PadicRat y = PadicRat::from_ratio(5, 3, 175, 6);
  CHECK(y.valuation() == 2);
  CHECK(y.unit() == 22);

  CHECK(PadicRat::from_ratio(5, 3, 0, 9).is_exact_zero());
  CHECK(throws_kind([] { PadicRat::from_ratio(5, 3, 1, 0); }, ErrorKind::DivisionByZero));
}

TEST_CASE("padic_add") {
  SUBCASE("H_4 at p=5 loses unit digits to cancellation") {
    PadicRat h = PadicRat::exact_zero(5);
    for (int k = 1; k <= 4; ++k) h += PadicRat::from_ratio(5, 3, 1, k);
    CHECK(h.valuation() == 2);
    CHECK(h.absolute_precision() == 3);
    CHECK(h.relative_precision() == 1);
    CHECK(h.unit() % 5 == 3);
  }
  SUBCASE("x + (-x) is zero to precision") {
    const PadicRat x = PadicRat::from_ratio(5, 3, 7, 2);
    const PadicRat z = x + (-x);
    CHECK(z.is_zero_to_precision());
    CHECK(z.absolute_precision() == 3);
  }
  SUBCASE("2 + 5") {
    const PadicRat s = PadicRat::from_parts(5, 0, 2, 3) + PadicRat::from_parts(5, 1, 1, 3);
    CHECK(s.valuation() == 0);
    CHECK(s.unit() == 7);
    CHECK(s.absolute_precision() == 3);
  }
  SUBCASE("zero to precision absorbs digits beyond its bound") {
    const PadicRat z = PadicRat::zero_to(5, 2);
    const PadicRat s = z + PadicRat::from_parts(5, 0, 8, 3);
    CHECK(s.valuation() == 0);
    CHECK(s.absolute_precision() == 2);
    CHECK(s.unit() == 8);
    CHECK((z + PadicRat::from_parts(5, 3, 1, 3)).is_zero_to_precision());
  }
}

TEST_CASE("padic_mul and padic_shift") {
  const PadicRat a = PadicRat::from_parts(5, 2, 7, 3);
  const PadicRat b = PadicRat::from_parts(5, -1, 3, 3);
  const PadicRat c = a * b;
  CHECK(c.valuation() == 1);
  CHECK(c.unit() == 21);

  const PadicRat h4 = PadicRat::from_ratio(5, 5, 25, 12);
  CHECK(h4.shift(-1).valuation() == 1);
  CHECK(h4.shift(-1).unit() == h4.unit());

  CHECK((a * PadicRat::exact_zero(5)).is_exact_zero());
  const PadicRat z = PadicRat::zero_to(5, 2) * a;
  CHECK(z.is_zero_to_precision());
  CHECK(z.absolute_precision() == 4);
}

TEST_CASE("padic_reduce") {
  CHECK(PadicRat::from_ratio(5, 3, 25, 12).reduce(3).value() == 75);
  CHECK(PadicRat::exact_zero(5).reduce(4).value() == 0);
  CHECK(throws_kind([] { PadicRat::from_parts(5, -1, 1, 3).reduce(1); }, ErrorKind::NotPIntegral));
  CHECK(throws_kind([] { PadicRat::from_ratio(5, 2, 1, 3).reduce(3); }, ErrorKind::InsufficientPrecision));
  CHECK(throws_kind([] { PadicRat::zero_to(5, 1).reduce(2); }, ErrorKind::InsufficientPrecision));
  CHECK(PadicRat::zero_to(5, 3).reduce(2).value() == 0);
}

TEST_CASE("inverse") {
  const PadicRat x = PadicRat::from_ratio(7, 4, 49, 3);
  const PadicRat y = x.inverse();
  CHECK(y.valuation() == -2);
  CHECK((x * y).reduce(4).value() == 1);
  CHECK(throws_kind([] { PadicRat::zero_to(7, 2).inverse(); }, ErrorKind::DivisionByZero));
}

TEST_CASE("agreement with exact rationals on random expressions") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {5u, 7u, 13u}) {
    for (int trial = 0; trial < 300; ++trial) {
      const int work = 5;
      ExactRational exact = 0;
      PadicRat approx = PadicRat::exact_zero(p);
      for (int t = 0; t < 6; ++t) {
        const long a = static_cast<long>(rng() % 401) - 200;
        long b = static_cast<long>(rng() % 60) + 1;
        const ExactRational q = make_rational(a, b);
        const PadicRat qp = PadicRat::from_ratio(p, work, q);
        if (rng() % 3 == 0) {
          exact *= q;
          approx *= qp;
        } else {
          exact += q;
          approx += qp;
        }
      }
      if (exact == 0) continue;
      if (approx.is_value()) CHECK(approx.valuation() == valuation(exact, p));
      const int m = std::min(approx.absolute_precision(), 5);
      if (valuation(exact, p) >= 0 && m >= 1) {
        CHECK(approx.reduce(m) == reduce_exact(exact, p, m));
      }
    }
  }
}
