#pragma once

#include <cstdint>
#include <vector>

#include "congforge/padic.hpp"
#include "congforge/residue.hpp"

namespace congforge {

// Primes p > 3 with lo < p <= hi, ascending.
std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi);

// Default working precision: enough for H_{p-1}/p mod p^4.
inline constexpr int kDefaultWork = 5;

// Per-prime tables at a fixed working precision. Immutable once built.
class PrimeCtx {
 public:
  PrimeCtx(std::uint64_t p, int work);

  std::uint64_t prime() const noexcept { return p_; }
  int work() const noexcept { return work_; }
  const Modulus& modulus() const noexcept { return mod_; }

  // 1/i mod p^work for 1 <= i <= 2p with p not dividing i.
  Residue inverse(std::uint64_t i) const;
  // H_n (order 1) or H_n^(2) (order 2), 0 <= n <= 2p-2.
  const PadicRat& harmonic(std::uint64_t n, int order = 1) const;
  // binom(2k, k), 0 <= k <= p-1.
  const PadicRat& central_binomial(std::uint64_t k) const;
  // C_k = binom(2k, k)/(k+1), 0 <= k <= p-1.
  const PadicRat& catalan(std::uint64_t k) const;

  // 1/i as a PadicRat (valuation -1 when p | i).
  PadicRat reciprocal(std::uint64_t i) const;
  PadicRat integer(std::int64_t z) const { return PadicRat::from_int(p_, work_, z); }
  PadicRat ratio(std::int64_t a, std::int64_t b) const;

 private:
  std::uint64_t p_;
  int work_;
  Modulus mod_;
  std::vector<u128> inv_;
  std::vector<PadicRat> h1_, h2_, cbc_, cat_;
  PadicRat wolstenholme_sum_;  // H_{p-1} with one guard digit

  friend PadicRat fermat_style_quotient(const PrimeCtx& ctx);
};

// H_{p-1}/p. H_{p-1} is summed with one guard digit, so the quotient keeps
// absolute precision work (work-1 when work is already the maximum).
PadicRat fermat_style_quotient(const PrimeCtx& ctx);

}  // namespace congforge
