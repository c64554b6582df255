#include "congforge/prime_ctx.hpp"

#include <algorithm>

#include "congforge/error.hpp"

namespace congforge {

std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 5 || hi <= lo) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint64_t n = std::max<std::uint64_t>(lo + 1, 5); n <= hi; ++n) {
    if (!composite[n]) out.push_back(n);
  }
  return out;
}

PrimeCtx::PrimeCtx(std::uint64_t p, int work)
    : p_(p), work_(work), mod_(p, work), wolstenholme_sum_(PadicRat::exact_zero(p)) {
  if (work < 1 || work > kMaxPrecision) {
    throw Error(ErrorKind::Config, "working precision must lie in 1.." + std::to_string(kMaxPrecision));
  }
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw Error(ErrorKind::Config, std::to_string(p) + " is not prime");
  }

  // Batch inversion over 1..2p skipping multiples of p.
  inv_.assign(2 * p + 1, 0);
  {
    std::vector<u128> prefix(2 * p + 1, 1);
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= 2 * p; ++i) {
      if (i % p != 0) acc = mod_.mul(acc, i);
      prefix[i] = acc;
    }
    u128 inv_acc = mod_.inv(acc);
    for (std::uint64_t i = 2 * p; i >= 1; --i) {
      if (i % p == 0) continue;
      inv_[i] = mod_.mul(inv_acc, prefix[i - 1]);
      inv_acc = mod_.mul(inv_acc, i);
    }
  }

  const std::uint64_t top = 2 * p - 2;
  h1_.reserve(top + 1);
  h2_.reserve(top + 1);
  h1_.push_back(PadicRat::exact_zero(p));
  h2_.push_back(PadicRat::exact_zero(p));
  for (std::uint64_t n = 1; n <= top; ++n) {
    const PadicRat r = reciprocal(n);
    h1_.push_back(h1_.back() + r);
    h2_.push_back(h2_.back() + r * r);
  }

  // binom(2(k+1), k+1) = binom(2k, k) * 2(2k+1)/(k+1); 2k+1 = p at k = (p-1)/2.
  cbc_.reserve(p);
  cat_.reserve(p);
  cbc_.push_back(integer(1));
  for (std::uint64_t k = 0; k + 1 < p; ++k) {
    const PadicRat step = integer(static_cast<std::int64_t>(2 * (2 * k + 1))) * reciprocal(k + 1);
    cbc_.push_back(cbc_.back() * step);
  }
  for (std::uint64_t k = 0; k < p; ++k) cat_.push_back(cbc_[k] * reciprocal(k + 1));

  const int guarded = std::min(work + 1, kMaxPrecision);
  wolstenholme_sum_ = h1_[p - 1];
  if (guarded > work) {
    const Modulus wide(p, guarded);
    u128 acc = 0;
    for (std::uint64_t j = 1; j < p; ++j) acc = wide.add(acc, wide.inv(j));
    wolstenholme_sum_ = PadicRat::from_residue(Residue(wide, acc));
  }
}

Residue PrimeCtx::inverse(std::uint64_t i) const {
  if (i == 0 || i > 2 * p_) throw Error(ErrorKind::IndexOutOfRange, "inverse index " + std::to_string(i));
  if (i % p_ == 0) throw Error(ErrorKind::NotAUnit, std::to_string(i) + " is divisible by p");
  return Residue(mod_, inv_[i]);
}

PadicRat PrimeCtx::reciprocal(std::uint64_t i) const {
  if (i == 0) throw Error(ErrorKind::DivisionByZero, "1/0");
  if (i <= 2 * p_ && i % p_ != 0) return PadicRat::from_parts(p_, 0, inv_[i], work_);
  return PadicRat::from_ratio(p_, work_, 1, static_cast<unsigned long>(i));
}

PadicRat PrimeCtx::ratio(std::int64_t a, std::int64_t b) const {
  return PadicRat::from_ratio(p_, work_, mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b)));
}

const PadicRat& PrimeCtx::harmonic(std::uint64_t n, int order) const {
  if (order != 1 && order != 2) throw Error(ErrorKind::UnsupportedIndex, "harmonic order must be 1 or 2");
  if (n >= h1_.size()) throw Error(ErrorKind::IndexOutOfRange, "harmonic index " + std::to_string(n));
  return order == 1 ? h1_[n] : h2_[n];
}

const PadicRat& PrimeCtx::central_binomial(std::uint64_t k) const {
  if (k >= cbc_.size()) throw Error(ErrorKind::IndexOutOfRange, "central binomial index " + std::to_string(k));
  return cbc_[k];
}

const PadicRat& PrimeCtx::catalan(std::uint64_t k) const {
  if (k >= cat_.size()) throw Error(ErrorKind::IndexOutOfRange, "catalan index " + std::to_string(k));
  return cat_[k];
}

PadicRat fermat_style_quotient(const PrimeCtx& ctx) {
  return ctx.wolstenholme_sum_.shift(-1);
}

}  // namespace congforge
