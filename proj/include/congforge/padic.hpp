#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

#include "congforge/residue.hpp"

namespace congforge {

// Largest relative precision carried by a PadicRat.
inline constexpr int kMaxPrecision = 8;

// A finite-precision p-adic rational u * p^v + O(p^(v+n)).
//
// Three states:
//  - exact zero (known to be 0 with unlimited precision);
//  - zero to precision a (only known to be divisible by p^a);
//  - a value with exact valuation v and unit u known mod p^n.
//
// Absolute precision v + n never grows under arithmetic. Exact integers and
// ratios enter with relative precision `work`, so exact factors never cost
// digits.
class PadicRat {
 public:
  enum class Kind : std::uint8_t { ExactZero, ZeroToPrecision, Value };

  static PadicRat exact_zero(std::uint64_t p) { return PadicRat(p, Kind::ExactZero, 0, 0, 0); }
  static PadicRat zero_to(std::uint64_t p, int absolute) {
    return PadicRat(p, Kind::ZeroToPrecision, absolute, 0, 0);
  }
  // unit must be prime to p and canonical mod p^n.
  static PadicRat from_parts(std::uint64_t p, int v, u128 unit, int n);

  static PadicRat from_int(std::uint64_t p, int work, std::int64_t z);
  static PadicRat from_ratio(std::uint64_t p, int work, const mpz_class& a, const mpz_class& b);
  static PadicRat from_ratio(std::uint64_t p, int work, const mpq_class& q) {
    return from_ratio(p, work, q.get_num(), q.get_den());
  }
  // An integer known modulo p^m (absolute precision m).
  static PadicRat from_residue(const Residue& r);

  std::uint64_t prime() const noexcept { return p_; }
  Kind kind() const noexcept { return kind_; }
  bool is_exact_zero() const noexcept { return kind_ == Kind::ExactZero; }
  bool is_zero_to_precision() const noexcept { return kind_ == Kind::ZeroToPrecision; }
  bool is_value() const noexcept { return kind_ == Kind::Value; }

  // Exact valuation for values; the proven lower bound for zero-to-precision;
  // INT_MAX for exact zero.
  int valuation() const noexcept;
  int relative_precision() const noexcept { return kind_ == Kind::Value ? n_ : 0; }
  // v + n; INT_MAX for exact zero.
  int absolute_precision() const noexcept;
  u128 unit() const noexcept { return unit_; }

  PadicRat operator-() const;
  PadicRat& operator+=(const PadicRat& o) { return *this = *this + o; }
  PadicRat& operator-=(const PadicRat& o) { return *this = *this - o; }
  PadicRat& operator*=(const PadicRat& o) { return *this = *this * o; }
  friend PadicRat operator+(const PadicRat& x, const PadicRat& y);
  friend PadicRat operator-(const PadicRat& x, const PadicRat& y) { return x + (-y); }
  friend PadicRat operator*(const PadicRat& x, const PadicRat& y);

  // Multiplication by p^k: valuation moves, digits are untouched.
  PadicRat shift(int k) const;
  // Multiplicative inverse; throws DivisionByZero for either zero state.
  PadicRat inverse() const;
  friend PadicRat operator/(const PadicRat& x, const PadicRat& y) { return x * y.inverse(); }

  // The represented value mod p^m. Throws NotPIntegral for v < 0 and
  // InsufficientPrecision when fewer than m digits are known.
  Residue reduce(int m) const;

  std::string debug_string() const;

 private:
  PadicRat(std::uint64_t p, Kind kind, int v, u128 unit, int n)
      : p_(p), unit_(unit), v_(v), n_(n), kind_(kind) {}

  std::uint64_t p_;
  u128 unit_;
  int v_;  // valuation, or absolute precision for ZeroToPrecision
  int n_;
  Kind kind_;
};

}  // namespace congforge
