#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace congforge {

using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string(u128 x);
u128 to_u128(const mpz_class& nonnegative);
mpz_class to_mpz(u128 x);

// p^m for a prime p > 3 and 1 <= m. Construction fails with a Config error
// when p^m does not fit below 2^127; arithmetic helpers assume canonical
// operands in [0, p^m).
class Modulus {
 public:
  Modulus(std::uint64_t p, int m);

  std::uint64_t prime() const noexcept { return p_; }
  int exponent() const noexcept { return m_; }
  u128 value() const noexcept { return n_; }

  u128 reduce(std::int64_t z) const noexcept;
  u128 reduce(const mpz_class& z) const;
  u128 add(u128 a, u128 b) const noexcept {
    u128 s = a + b;  // n < 2^127 so no wraparound
    return s >= n_ ? s - n_ : s;
  }
  u128 sub(u128 a, u128 b) const noexcept { return a >= b ? a - b : a + (n_ - b); }
  u128 neg(u128 a) const noexcept { return a == 0 ? 0 : n_ - a; }
  u128 mul(u128 a, u128 b) const noexcept {
    if (small_) return static_cast<u128>(static_cast<std::uint64_t>(a)) * static_cast<std::uint64_t>(b) % n_;
    return mul_wide(a, b);
  }
  u128 pow(u128 a, std::uint64_t e) const noexcept;
  // Inverse of a p-unit; throws NotAUnit when p | a.
  u128 inv(u128 a) const;

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_;
  }

 private:
  u128 mul_wide(u128 a, u128 b) const noexcept;

  std::uint64_t p_;
  int m_;
  u128 n_;
  bool small_;
};

// p^k as a 128-bit integer; throws Config when it would reach 2^127.
u128 prime_power(std::uint64_t p, int k);

// Largest v with p^v | x, for x != 0.
int valuation(u128 x, std::uint64_t p) noexcept;

// An integer modulo p^m, kept as its least non-negative representative.
class Residue {
 public:
  Residue(const Modulus& mod, u128 canonical) : mod_(mod), value_(canonical) {}

  static Residue from_int(std::uint64_t p, int m, std::int64_t z);
  static Residue from_int(const Modulus& mod, std::int64_t z) { return {mod, mod.reduce(z)}; }
  static Residue from_mpz(const Modulus& mod, const mpz_class& z) { return {mod, mod.reduce(z)}; }

  const Modulus& modulus() const noexcept { return mod_; }
  std::uint64_t prime() const noexcept { return mod_.prime(); }
  int exponent() const noexcept { return mod_.exponent(); }
  u128 value() const noexcept { return value_; }
  bool is_unit() const noexcept { return value_ % mod_.prime() != 0; }

  Residue inv() const { return {mod_, mod_.inv(value_)}; }
  Residue pow(std::uint64_t e) const { return {mod_, mod_.pow(value_, e)}; }

  Residue operator-() const { return {mod_, mod_.neg(value_)}; }
  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend bool operator==(const Residue& a, const Residue& b) noexcept {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

  std::string str() const { return to_string(value_); }

 private:
  void check_same(const Residue& o) const;

  Modulus mod_;
  u128 value_;
};

}  // namespace congforge
