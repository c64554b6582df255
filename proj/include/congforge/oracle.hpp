#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "congforge/rational.hpp"

namespace congforge {

// Largest prime the exact oracle accepts.
inline constexpr std::uint64_t kOracleMaxPrime = 100;

// Exact big-rational values of the registry's sums at one prime, computed
// from the definitions with no modular arithmetic. Expressions are named
// "<ID> LHS" / "<ID> RHS" for every registry id, plus "sum g" and "sum h".
// Quantified entries take their index (k or j) as the parameter; C3.8 takes
// the sample value x.
class ExactOracle {
 public:
  explicit ExactOracle(std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  ExactRational value(std::string_view expr, const std::optional<BigInt>& param = std::nullopt) const;

  const ExactRational& bernoulli(std::uint64_t n) const { return bern_.at(n); }
  // E_{2k}.
  const BigInt& euler_even(std::uint64_t k) const { return euler_.at(k); }
  // B_{p-2}(1/3).
  const ExactRational& bernoulli_third() const { return third_; }

 private:
  ExactRational harmonic(std::uint64_t n, int order = 1) const;
  ExactRational g_at(std::uint64_t n, const BigInt& x) const;

  std::uint64_t p_;
  std::vector<ExactRational> h1_, h2_;
  std::vector<BigInt> cbc_, g_;
  std::vector<ExactRational> h_seq_;
  std::vector<ExactRational> bern_;
  std::vector<BigInt> euler_;
  ExactRational third_;
};

// Convenience wrapper; throws SizeGuard for p > kOracleMaxPrime.
ExactRational brute_force_oracle(std::uint64_t p, std::string_view expr,
                                 const std::optional<BigInt>& param = std::nullopt);

}  // namespace congforge
