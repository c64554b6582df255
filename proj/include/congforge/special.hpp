#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "congforge/prime_ctx.hpp"
#include "congforge/residue.hpp"

namespace congforge {

// (p/3): +1 when p = 1 mod 3, -1 when p = 2 mod 3.
int legendre_p3(std::uint64_t p);
// (-1/p): +1 when p = 1 mod 4, -1 when p = 3 mod 4.
int legendre_m1(std::uint64_t p);

// B_n mod p for n = 0 or even 2 <= n <= p-3, from (sum_{j<p} j^n)/p mod p.
Residue bernoulli_mod_p(const PrimeCtx& ctx, std::uint64_t n);

// B_{p-2}(1/3) mod p as -2 H^(2)_{t-1}, t = 1/3 mod p.
Residue bernoulli_third(const PrimeCtx& ctx);

// B_{p-2}(1/3) mod p by expanding sum_j binom(p-2, j) B_j (1/3)^(p-2-j).
// Quadratic in p; the cross-check for bernoulli_third.
Residue bernoulli_third_direct(const PrimeCtx& ctx);

// E_{2k} mod p for 2k < p, from sum_{j<=k} binom(2k, 2j) E_{2j} = 0.
Residue euler_even_mod_p(const PrimeCtx& ctx, std::uint64_t k);
// E_{p-3} mod p.
Residue euler_mod_p(const PrimeCtx& ctx);

// Primes up to this bound get bernoulli_third cross-checked on construction.
inline constexpr std::uint64_t kThirdCrossCheckBound = 200;

struct SpecialOptions {
  bool with_euler = true;
  std::vector<std::uint64_t> bernoulli_indices;  // defaults to {p-3, p-5}
};

// Special values of one prime. Residues are mod p.
struct SpecialValues {
  std::uint64_t p = 0;
  Residue bern_p2_third;
  std::map<std::uint64_t, Residue> bern;
  std::optional<Residue> euler_pm3;
  int chi3 = 0;
  int chi4 = 0;

  static SpecialValues compute(const PrimeCtx& ctx, const SpecialOptions& options = {});

  const Residue& bernoulli(std::uint64_t n) const;
  const Residue& euler() const;
  // B_n as a PadicRat: exact for n = 0, otherwise known mod p only.
  PadicRat bernoulli_padic(const PrimeCtx& ctx, std::uint64_t n) const;
};

}  // namespace congforge
