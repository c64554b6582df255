#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "congforge/padic.hpp"
#include "congforge/prime_ctx.hpp"
#include "congforge/sequences.hpp"
#include "congforge/special.hpp"

namespace congforge {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status status);

// Proven lower bound on val_p(LHS - RHS); exact once a non-zero digit is seen.
struct DiffValuation {
  int value = 0;
  bool exact = false;
  bool infinite = false;  // the difference is an exact zero

  // "4" when exact, ">=4" when only bounded, "inf" for exact zero.
  std::string str() const;
  bool at_least(int m) const { return infinite || value >= m; }
};

struct Verdict {
  std::string id;
  std::uint64_t p = 0;
  int mod_exp = 0;
  std::string lhs;  // residue mod p^mod_exp in decimal
  std::string rhs;
  Status status = Status::Skipped;
  DiffValuation diff;
  std::optional<std::uint64_t> witness_index;

  bool pass() const { return status == Status::Pass; }
};

// Both sides of a congruence instance, before reduction.
struct Sides {
  PadicRat lhs;
  PadicRat rhs;
};

class Evaluator;

struct IndexRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;  // inclusive
};

struct CongruenceSpec {
  std::string id;
  int mod_exp = 1;
  std::string description;
  int required_precision = 1;
  bool needs_euler = false;
  bool conjecture = false;
  Sides (*sides)(Evaluator&, std::uint64_t index) = nullptr;
  // Present for entries quantified over an index (k, j, or a sample ordinal).
  IndexRange (*range)(const Evaluator&) = nullptr;

  bool quantified() const { return range != nullptr; }
};

// Every displayed congruence, in a fixed order.
const std::vector<CongruenceSpec>& registry();
const CongruenceSpec& find_spec(std::string_view id);

// Number of seeded random C3.8 samples in addition to x = 0, 1, 2.
inline constexpr int kC38RandomSamples = 3;

// x = 0, 1, 2 followed by kC38RandomSamples values in [0, p^4) drawn from a
// generator seeded by (seed, p).
std::vector<BigInt> c38_samples(std::uint64_t p, std::uint64_t seed);

// Per-prime evaluation state. Shared sums and the O(p^2) sequence tables are
// built on first use and reused across registry entries.
class Evaluator {
 public:
  Evaluator(const PrimeCtx& ctx, const SpecialValues& specials, std::vector<BigInt> samples = {0, 1, 2});

  Verdict evaluate(const CongruenceSpec& spec);
  Sides sides(const CongruenceSpec& spec, std::uint64_t index = 0);

  const PrimeCtx& ctx() const { return ctx_; }
  const SpecialValues& specials() const { return specials_; }
  const std::vector<BigInt>& samples() const { return samples_; }

  // Building blocks used by the registry entries.
  struct CentralSums {
    PadicRat by_k;            // sum_{k<p} binom(2k,k)/k
    PadicRat by_k_half;       // same, k <= (p-1)/2
    PadicRat h1;              // sum_{k<p} binom(2k,k) H_k / k
    PadicRat h2k;             // sum_{k<p} binom(2k,k) H_2k / k
    PadicRat h2k_half;        // same, k <= (p-1)/2
    PadicRat by_k2;           // sum_{k<p} binom(2k,k)/k^2
    PadicRat by_k2_half;      // same, k <= (p-1)/2
    PadicRat inverse_half;    // sum_{k<=(p-1)/2} 2/(k^2 binom(2k,k))
  };
  const CentralSums& central();
  const SequenceTerms& sequences();
  // binom(p, k) for 0 <= k <= p-1.
  const PadicRat& binom_p(std::uint64_t k);
  // binom(p-1, k) for 0 <= k <= p-1.
  const PadicRat& binom_pm1(std::uint64_t k);
  // binom(2p-1, p-1).
  PadicRat wolstenholme_binomial();
  // sum_{k=j}^{p-1} binom(k,j) binom(k-1,j-1) mod p.
  Residue chu_sum_mod_p(std::uint64_t j);
  // binom(n, k) mod p by Lucas' theorem.
  Residue lucas_binomial(std::uint64_t n, std::uint64_t k);
  // Coefficients of x^j on both sides of the g_k(x) congruence, mod p^work.
  const std::pair<std::vector<u128>, std::vector<u128>>& c38_coefficients();

  PadicRat integer(std::int64_t z) const { return ctx_.integer(z); }
  PadicRat ratio(std::int64_t a, std::int64_t b) const { return ctx_.ratio(a, b); }
  PadicRat third() const;  // (p/3) B_{p-2}(1/3), known mod p
  PadicRat euler() const;  // E_{p-3}, known mod p

 private:
  const PrimeCtx& ctx_;
  const SpecialValues& specials_;
  std::vector<BigInt> samples_;
  std::optional<CentralSums> central_;
  std::optional<SequenceTerms> sequences_;
  std::vector<PadicRat> binom_p_, binom_pm1_;
  std::vector<u128> fact_mod_p_, inv_fact_mod_p_;
  std::optional<std::pair<std::vector<u128>, std::vector<u128>>> c38_;
};

// Single-entry convenience wrapper around Evaluator.
Verdict evaluate(const PrimeCtx& ctx, const SpecialValues& specials, const CongruenceSpec& spec);

// The C3.8 congruence at each sample; witness_index holds the sample ordinal.
std::vector<Verdict> evaluate_c38(const PrimeCtx& ctx, const SpecialValues& specials,
                                  const std::vector<BigInt>& x_samples);

}  // namespace congforge
