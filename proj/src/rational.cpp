#include "congforge/rational.hpp"

#include <limits>
#include <vector>

#include "congforge/error.hpp"

namespace congforge {

ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

int valuation(const ExactRational& q, std::uint64_t p) {
  if (q == 0) return std::numeric_limits<int>::max();
  mpz_class pz = static_cast<unsigned long>(p);
  mpz_class num = q.get_num(), den = q.get_den();
  const auto vn = mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
  const auto vd = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  return static_cast<int>(vn) - static_cast<int>(vd);
}

Residue reduce_exact(const ExactRational& q, std::uint64_t p, int m) {
  const Modulus mod(p, m);
  if (q.get_den() % static_cast<unsigned long>(p) == 0) {
    throw Error(ErrorKind::NotPIntegral, "denominator divisible by p");
  }
  return Residue(mod, mod.mul(mod.reduce(q.get_num()), mod.inv(mod.reduce(q.get_den()))));
}

namespace {

// Pascal table of generalized binomials for |z| <= kTableZ, 0 <= k <= kTableK.
constexpr long kTableZ = 160;
constexpr long kTableK = 160;

BigInt binomial_direct(const BigInt& z, long k) {
  if (k < 0) return 0;
  BigInt num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= z - i;
    den *= i + 1;
  }
  return num / den;
}

const std::vector<BigInt>& pascal_table() {
  static const std::vector<BigInt> table = [] {
    std::vector<BigInt> t;
    t.reserve(static_cast<std::size_t>((2 * kTableZ + 1) * (kTableK + 1)));
    for (long z = -kTableZ; z <= kTableZ; ++z) {
      BigInt c = 1;
      for (long k = 0; k <= kTableK; ++k) {
        t.push_back(c);
        c = c * (z - k) / (k + 1);
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

BigInt binomial(long z, long k) {
  if (k < 0) return 0;
  if (z >= -kTableZ && z <= kTableZ && k <= kTableK) {
    return pascal_table()[static_cast<std::size_t>((z + kTableZ) * (kTableK + 1) + k)];
  }
  return binomial_direct(BigInt(z), k);
}

BigInt binomial(const BigInt& z, long k) {
  if (z.fits_slong_p()) return binomial(z.get_si(), k);
  return binomial_direct(z, k);
}

}  // namespace congforge
