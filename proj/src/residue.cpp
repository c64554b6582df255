#include "congforge/residue.hpp"

#include <algorithm>

#include "congforge/error.hpp"

namespace congforge {

namespace {

constexpr u128 kLimit = static_cast<u128>(1) << 127;
constexpr u128 kSmall = static_cast<u128>(1) << 64;

// Extended Euclid over unsigned 64-bit values; a and p coprime, p > 1.
std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t p) {
  i128 old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_s < 0) old_s += p;
  return static_cast<std::uint64_t>(old_s);
}

}  // namespace

std::string to_string(u128 x) {
  if (x == 0) return "0";
  std::string out;
  while (x != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

u128 to_u128(const mpz_class& z) {
  if (sgn(z) < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 128) {
    throw Error(ErrorKind::Internal, "value does not fit in 128 bits");
  }
  u128 out = 0;
  std::size_t count = 0;
  std::uint64_t limbs[2] = {0, 0};
  mpz_export(limbs, &count, -1, sizeof(std::uint64_t), 0, 0, z.get_mpz_t());
  out = (static_cast<u128>(limbs[1]) << 64) | limbs[0];
  return out;
}

mpz_class to_mpz(u128 x) {
  std::uint64_t limbs[2] = {static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(x >> 64)};
  mpz_class out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  return out;
}

u128 prime_power(std::uint64_t p, int k) {
  if (k < 0) throw Error(ErrorKind::Config, "negative exponent");
  u128 n = 1;
  for (int i = 0; i < k; ++i) {
    if (n > (kLimit - 1) / p) {
      throw Error(ErrorKind::Config, std::to_string(p) + "^" + std::to_string(k) + " does not fit below 2^127");
    }
    n *= p;
  }
  return n;
}

int valuation(u128 x, std::uint64_t p) noexcept {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

Modulus::Modulus(std::uint64_t p, int m) : p_(p), m_(m) {
  if (p < 5) throw Error(ErrorKind::Config, "prime must exceed 3");
  if (m < 1) throw Error(ErrorKind::Config, "modulus exponent must be at least 1");
  n_ = prime_power(p, m);
  small_ = n_ <= kSmall;
}

u128 Modulus::reduce(std::int64_t z) const noexcept {
  if (z >= 0) return static_cast<u128>(z) % n_;
  u128 mag = static_cast<u128>(-(static_cast<i128>(z))) % n_;
  return neg(mag);
}

u128 Modulus::reduce(const mpz_class& z) const {
  mpz_class r = z % to_mpz(n_);
  if (r < 0) r += to_mpz(n_);
  return to_u128(r);
}

u128 Modulus::mul_wide(u128 a, u128 b) const noexcept {
  // a, b < n < 2^127: doubling and adding never wraps 128 bits.
  u128 r = 0;
  for (int bit = 127; bit >= 0; --bit) {
    r = add(r, r);
    if ((b >> bit) & 1) r = add(r, a);
  }
  return r;
}

u128 Modulus::pow(u128 a, std::uint64_t e) const noexcept {
  u128 r = 1 % n_;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u128 Modulus::inv(u128 a) const {
  const std::uint64_t a_mod_p = static_cast<std::uint64_t>(a % p_);
  if (a_mod_p == 0) throw Error(ErrorKind::NotAUnit, to_string(a) + " is divisible by " + std::to_string(p_));
  // Hensel lift x <- x(2 - a x), doubling correct digits each round.
  u128 x = inverse_mod_prime(a_mod_p, p_);
  for (int digits = 1; digits < m_; digits *= 2) {
    x = mul(x, sub(2 % n_, mul(a, x)));
  }
  return x;
}

Residue Residue::from_int(std::uint64_t p, int m, std::int64_t z) {
  Modulus mod(p, m);
  return {mod, mod.reduce(z)};
}

void Residue::check_same(const Residue& o) const {
  if (!(mod_ == o.mod_)) throw Error(ErrorKind::Internal, "mixed moduli in residue arithmetic");
}

Residue& Residue::operator+=(const Residue& o) {
  check_same(o);
  value_ = mod_.add(value_, o.value_);
  return *this;
}

Residue& Residue::operator-=(const Residue& o) {
  check_same(o);
  value_ = mod_.sub(value_, o.value_);
  return *this;
}

Residue& Residue::operator*=(const Residue& o) {
  check_same(o);
  value_ = mod_.mul(value_, o.value_);
  return *this;
}

}  // namespace congforge
