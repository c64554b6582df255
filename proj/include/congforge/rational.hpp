#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "congforge/residue.hpp"

namespace congforge {

// Exact rational in lowest terms with a positive denominator.
using ExactRational = mpq_class;
using BigInt = mpz_class;

// num/den in lowest terms; den != 0.
ExactRational make_rational(const BigInt& num, const BigInt& den);

// Exact p-adic valuation of a non-zero rational.
int valuation(const ExactRational& q, std::uint64_t p);

// q mod p^m for a p-integral q; throws NotPIntegral otherwise.
Residue reduce_exact(const ExactRational& q, std::uint64_t p, int m);

// Generalized binomial z(z-1)...(z-k+1)/k! for any integer z; zero for k < 0.
BigInt binomial(const BigInt& z, long k);
BigInt binomial(long z, long k);

}  // namespace congforge
