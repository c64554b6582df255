#pragma once

#include <cstdint>
#include <vector>

#include "congforge/prime_ctx.hpp"
#include "congforge/rational.hpp"
#include "congforge/residue.hpp"

namespace congforge {

BigInt central_binom_exact(std::uint64_t n);
BigInt catalan(std::uint64_t n);

// g_n = sum_k binom(n,k)^2 binom(2k,k).
BigInt g_seq(std::uint64_t n);
// h_n = sum_k binom(n,k)^2 C_k.
BigInt h_seq(std::uint64_t n);
// Franel numbers sum_k binom(n,k)^3.
BigInt franel(std::uint64_t n);

// g_n(x) = sum_k binom(n,k)^2 binom(2k,k) x^k.
struct SeqPoly {
  std::uint64_t degree = 0;
  std::vector<BigInt> coeffs;  // coeffs[k] multiplies x^k

  BigInt eval(const BigInt& x) const;
  // sum_k c_k/(k+1), the integral over [0, 1].
  ExactRational integral01() const;
};

SeqPoly g_poly(std::uint64_t n);

// Horner evaluation with coefficients reduced into x's ring.
Residue poly_eval_mod(const SeqPoly& poly, const Residue& x);

// g_k and h_k mod p^work for 0 <= k <= p-1, without materializing the
// exact integers.
struct SequenceTerms {
  std::vector<Residue> g;
  std::vector<Residue> h;
};

SequenceTerms sequence_terms_mod(const PrimeCtx& ctx);

// Running sums: out[N] = terms[0] + ... + terms[N].
std::vector<Residue> partial_sums(const std::vector<Residue>& terms);

}  // namespace congforge
