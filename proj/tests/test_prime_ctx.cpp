#include <doctest.h>

#include "congforge/error.hpp"
#include "congforge/prime_ctx.hpp"
#include "congforge/rational.hpp"

using namespace congforge;

TEST_CASE("sieve_primes") {
  CHECK(sieve_primes(0, 12) == std::vector<std::uint64_t>{5, 7, 11});
  CHECK(sieve_primes(5, 5).empty());
  const auto to100 = sieve_primes(0, 100);
  CHECK(to100.size() == 23);
  CHECK(to100.back() == 97);
  CHECK(sieve_primes(4, 5) == std::vector<std::uint64_t>{5});
}

TEST_CASE("build_ctx at p=5") {
  const PrimeCtx ctx(5, 5);
  const long expect[] = {1, 2, 6, 20, 70};
  for (std::uint64_t k = 0; k < 5; ++k) {
    CHECK(ctx.central_binomial(k).reduce(5) == reduce_exact(expect[k], 5, 5));
  }
  CHECK(ctx.central_binomial(3).valuation() == 1);
  CHECK(ctx.central_binomial(3).unit() % 3125 == 4);
  CHECK(ctx.central_binomial(4).valuation() == 1);
  CHECK(ctx.central_binomial(4).unit() % 3125 == 14);
  CHECK(ctx.harmonic(4).valuation() == 2);
  CHECK(ctx.harmonic(8).valuation() == -1);
  CHECK(ctx.catalan(3).reduce(4) == reduce_exact(5, 5, 4));
}

TEST_CASE("harmonic lookups") {
  const PrimeCtx ctx7(7, 5);
  const PadicRat h = ctx7.harmonic(4, 2);
  CHECK(h.valuation() == 0);
  CHECK(h.reduce(1) == reduce_exact(make_rational(205, 144), 7, 1));
  CHECK(h.reduce(1).value() == 4);

  const PrimeCtx ctx5(5, 5);
  CHECK(ctx5.harmonic(0).is_exact_zero());
  const PadicRat h6 = ctx5.harmonic(6);
  CHECK(h6.valuation() == -1);
  CHECK(h6.unit() % 5 == 1);
  CHECK_THROWS_AS(ctx5.harmonic(9), Error);
  CHECK_THROWS_AS(ctx5.harmonic(3, 3), Error);
}

TEST_CASE("tables agree with exact harmonic numbers") {
  for (std::uint64_t p : sieve_primes(0, 40)) {
    const PrimeCtx ctx(p, 5);
    ExactRational h1 = 0, h2 = 0;
    for (std::uint64_t n = 1; n <= 2 * p - 2; ++n) {
      h1 += make_rational(1, static_cast<long>(n));
      h2 += make_rational(1, static_cast<long>(n * n));
      for (auto [table, exact] : {std::pair{&ctx.harmonic(n, 1), &h1}, std::pair{&ctx.harmonic(n, 2), &h2}}) {
        const int v = valuation(*exact, p);
        CHECK(table->valuation() == v);
        // Compare units: strip p^v on both sides.
        ExactRational unit = *exact;
        if (v > 0) unit /= ExactRational(to_mpz(prime_power(p, v)));
        if (v < 0) unit *= ExactRational(to_mpz(prime_power(p, -v)));
        const int digits = table->relative_precision();
        CHECK(PadicRat::from_parts(p, 0, table->unit(), digits).reduce(digits) == reduce_exact(unit, p, digits));
      }
    }
  }
}

TEST_CASE("central binomial valuation profile and integrality") {
  for (std::uint64_t p : sieve_primes(0, 300)) {
    const PrimeCtx ctx(p, 5);
    for (std::uint64_t k = 0; k < p; ++k) {
      CHECK(ctx.central_binomial(k).valuation() == (2 * k + 1 > p ? 1 : 0));
      if (2 * k > p) {
        CHECK(ctx.harmonic(2 * k).valuation() == -1);
        CHECK((ctx.central_binomial(k) * ctx.harmonic(2 * k)).valuation() >= 0);
      }
    }
  }
}

TEST_CASE("harmonic reflection properties") {
  for (std::uint64_t p : sieve_primes(0, 200)) {
    const PrimeCtx ctx(p, 5);
    for (std::uint64_t k = 1; k < p; ++k) {
      CHECK(ctx.harmonic(p - k).reduce(1) == ctx.harmonic(k - 1).reduce(1));
    }
    for (std::uint64_t k = 1; 2 * k < p; ++k) {
      CHECK(ctx.harmonic(2 * p - 2 * k).shift(1).reduce(1).value() == 1);
    }
  }
}

TEST_CASE("fermat_style_quotient") {
  const PrimeCtx ctx5(5, 5);
  const PadicRat q5 = fermat_style_quotient(ctx5);
  CHECK(q5.valuation() == 1);
  CHECK(q5.reduce(5) == reduce_exact(make_rational(5, 12), 5, 5));

  CHECK(fermat_style_quotient(PrimeCtx(7, 5)).valuation() >= 1);

  ExactRational h12 = 0;
  for (long k = 1; k <= 12; ++k) h12 += make_rational(1, k);
  CHECK(fermat_style_quotient(PrimeCtx(13, 5)).reduce(2) == reduce_exact(h12 / 13, 13, 2));
}

TEST_CASE("context errors") {
  CHECK_THROWS_AS(PrimeCtx(9, 5), Error);
  CHECK_THROWS_AS(PrimeCtx(5, 9), Error);
  const PrimeCtx ctx(11, 3);
  CHECK_THROWS_AS(ctx.inverse(11), Error);
  CHECK(ctx.inverse(12).value() * 12 % 1331 == 1);
}
