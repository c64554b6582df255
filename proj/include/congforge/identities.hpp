#pragma once

#include <optional>
#include <string>
#include <vector>

#include "congforge/rational.hpp"

namespace congforge {

struct IdentityResult {
  std::string id;
  std::vector<long> params;
  ExactRational lhs;
  ExactRational rhs;
  bool pass = false;
};

// sum_k binom(x,k) binom(y,n-k) = binom(x+y,n).
IdentityResult check_chu_vandermonde(long n, long x, long y);
// sum_k binom(n,k)^2 H_k = binom(2n,n)(2H_n - H_2n).
IdentityResult check_squared_harmonic(long n);
// sum_k (-1)^k binom(n,k) binom(2k,k) = (-1)^n sum_k binom(n,2k) binom(2k,k).
IdentityResult check_alternating(long n);
// sum_{k<=n} binom(x+k,m) = binom(n+x+1,m+1) - binom(x,m+1).
IdentityResult check_hockey(long n, long m, long x);
// sum_k binom(n,k)^2 binom(x+k,2n) = binom(x,n)^2.
IdentityResult check_square_identity(long n, long x);
// F(x) = sum_k binom(n,k)^2 binom(x+k,2n+1) against
// G(x) = sum_k (2x-3k) binom(x,k)^2 binom(2k,k) / ((4n+2) binom(2n,n)).
IdentityResult check_antidifference(long n, long x);
// G(x+1) - G(x) = binom(x,n)^2.
IdentityResult check_antidifference_step(long n, long x);
// sum_{k<N} binom(2k,k) H_2k / k
//   = 2 sum_{k<N} binom(2k,k) H_k / k - sum_{k<N} (1/k) sum_{j<=k} binom(k,j)^2 H_j.
IdentityResult check_harmonic_rearrangement(long upper);

struct IdentityEnvelope {
  long max_n = 50;
  long max_abs_x = 50;
  long max_m = 10;
};

struct IdentityTally {
  std::string id;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<IdentityResult> first_failure;
};

// Every checker over the envelope, tallied per identity in a fixed order.
// Polynomial identities in x are sampled at every integer |x| <= max_abs_x,
// extended upward when that gives no more than 2n+1 points.
std::vector<IdentityTally> run_identity_envelope(const IdentityEnvelope& env = {});

}  // namespace congforge
