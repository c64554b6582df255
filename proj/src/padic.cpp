#include "congforge/padic.hpp"

#include <algorithm>

#include "congforge/error.hpp"

namespace congforge {

namespace {

void check_work(int work) {
  if (work < 1 || work > kMaxPrecision) {
    throw Error(ErrorKind::Config, "working precision must lie in 1.." + std::to_string(kMaxPrecision));
  }
}

void check_prime(std::uint64_t a, std::uint64_t b) {
  if (a != b) throw Error(ErrorKind::Internal, "p-adic arithmetic across different primes");
}

// Strips p from z (non-zero) and returns the exponent removed.
int remove_p(mpz_class& z, std::uint64_t p) {
  mpz_class pz = static_cast<unsigned long>(p);
  return static_cast<int>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t()));
}

}  // namespace

PadicRat PadicRat::from_parts(std::uint64_t p, int v, u128 unit, int n) {
  if (n < 1 || n > kMaxPrecision) throw Error(ErrorKind::Internal, "relative precision out of range");
  if (unit % p == 0) throw Error(ErrorKind::Internal, "unit part divisible by p");
  return PadicRat(p, Kind::Value, v, unit % prime_power(p, n), n);
}

PadicRat PadicRat::from_int(std::uint64_t p, int work, std::int64_t z) {
  return from_ratio(p, work, mpz_class(static_cast<long>(z)), mpz_class(1));
}

PadicRat PadicRat::from_ratio(std::uint64_t p, int work, const mpz_class& a, const mpz_class& b) {
  check_work(work);
  if (b == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (a == 0) return exact_zero(p);
  mpz_class num = a, den = b;
  const int v = remove_p(num, p) - remove_p(den, p);
  Modulus mod(p, work);
  const u128 unit = mod.mul(mod.reduce(num), mod.inv(mod.reduce(den)));
  return PadicRat(p, Kind::Value, v, unit, work);
}

PadicRat PadicRat::from_residue(const Residue& r) {
  const std::uint64_t p = r.prime();
  const int m = r.exponent();
  if (r.value() == 0) return zero_to(p, m);
  const int v = congforge::valuation(r.value(), p);
  const u128 unit = r.value() / prime_power(p, v);
  return PadicRat(p, Kind::Value, v, unit, m - v);
}

int PadicRat::valuation() const noexcept {
  switch (kind_) {
    case Kind::ExactZero: return std::numeric_limits<int>::max();
    case Kind::ZeroToPrecision:
    case Kind::Value: return v_;
  }
  return v_;
}

int PadicRat::absolute_precision() const noexcept {
  switch (kind_) {
    case Kind::ExactZero: return std::numeric_limits<int>::max();
    case Kind::ZeroToPrecision: return v_;
    case Kind::Value: return v_ + n_;
  }
  return v_;
}

PadicRat PadicRat::operator-() const {
  if (kind_ != Kind::Value || unit_ == 0) return *this;
  return PadicRat(p_, kind_, v_, prime_power(p_, n_) - unit_, n_);
}

PadicRat operator+(const PadicRat& x, const PadicRat& y) {
  check_prime(x.p_, y.p_);
  if (x.is_exact_zero()) return y;
  if (y.is_exact_zero()) return x;
  const std::uint64_t p = x.p_;
  const int a = std::min(x.absolute_precision(), y.absolute_precision());
  if (x.is_zero_to_precision() || y.is_zero_to_precision()) {
    const PadicRat& val = x.is_value() ? x : y;
    if (!val.is_value() || val.v_ >= a) return PadicRat::zero_to(p, a);
    const int n = a - val.v_;
    return PadicRat(p, PadicRat::Kind::Value, val.v_, val.unit_ % prime_power(p, n), n);
  }
  const int vmin = std::min(x.v_, y.v_);
  if (a <= vmin) return PadicRat::zero_to(p, a);
  const int k = a - vmin;
  const Modulus mod(p, k);
  auto aligned = [&](const PadicRat& t) -> u128 {
    const int s = t.v_ - vmin;
    if (s >= k) return 0;
    return mod.mul(t.unit_ % mod.value(), prime_power(p, s));
  };
  const u128 sum = mod.add(aligned(x), aligned(y));
  if (sum == 0) return PadicRat::zero_to(p, a);
  const int t = congforge::valuation(sum, p);
  return PadicRat(p, PadicRat::Kind::Value, vmin + t, sum / prime_power(p, t), k - t);
}

PadicRat operator*(const PadicRat& x, const PadicRat& y) {
  check_prime(x.p_, y.p_);
  const std::uint64_t p = x.p_;
  if (x.is_exact_zero() || y.is_exact_zero()) return PadicRat::exact_zero(p);
  if (!x.is_value() || !y.is_value()) return PadicRat::zero_to(p, x.valuation() + y.valuation());
  const int n = std::min(x.n_, y.n_);
  const Modulus mod(p, n);
  const u128 unit = mod.mul(x.unit_ % mod.value(), y.unit_ % mod.value());
  return PadicRat(p, PadicRat::Kind::Value, x.v_ + y.v_, unit, n);
}

PadicRat PadicRat::shift(int k) const {
  if (kind_ == Kind::ExactZero) return *this;
  return PadicRat(p_, kind_, v_ + k, unit_, n_);
}

PadicRat PadicRat::inverse() const {
  if (kind_ != Kind::Value) throw Error(ErrorKind::DivisionByZero, "inverse of a p-adic zero");
  const Modulus mod(p_, n_);
  return PadicRat(p_, Kind::Value, -v_, mod.inv(unit_), n_);
}

Residue PadicRat::reduce(int m) const {
  const Modulus mod(p_, m);
  switch (kind_) {
    case Kind::ExactZero: return Residue(mod, 0);
    case Kind::ZeroToPrecision:
      if (v_ < m) {
        throw Error(ErrorKind::InsufficientPrecision,
                    "value known only mod p^" + std::to_string(v_) + ", need p^" + std::to_string(m));
      }
      return Residue(mod, 0);
    case Kind::Value:
      break;
  }
  if (v_ < 0) throw Error(ErrorKind::NotPIntegral, "valuation " + std::to_string(v_) + " < 0");
  if (v_ + n_ < m) {
    throw Error(ErrorKind::InsufficientPrecision,
                "absolute precision " + std::to_string(v_ + n_) + " < " + std::to_string(m));
  }
  if (v_ >= m) return Residue(mod, 0);
  return Residue(mod, mod.mul(unit_ % mod.value(), prime_power(p_, v_)));
}

std::string PadicRat::debug_string() const {
  switch (kind_) {
    case Kind::ExactZero: return "0";
    case Kind::ZeroToPrecision: return "O(p^" + std::to_string(v_) + ")";
    case Kind::Value: break;
  }
  return to_string(unit_) + "*p^" + std::to_string(v_) + " + O(p^" + std::to_string(v_ + n_) + ")";
}

}  // namespace congforge
