#include "congforge/special.hpp"

#include "congforge/error.hpp"

namespace congforge {

namespace {

struct FactorialsModP {
  FactorialsModP(const Modulus& mod, std::uint64_t top) : mod(mod), fact(top + 1, 1), inv_fact(top + 1, 1) {
    for (std::uint64_t i = 1; i <= top; ++i) fact[i] = mod.mul(fact[i - 1], i);
    inv_fact[top] = mod.inv(fact[top]);
    for (std::uint64_t i = top; i >= 1; --i) inv_fact[i - 1] = mod.mul(inv_fact[i], i);
  }
  u128 binom(std::uint64_t n, std::uint64_t k) const {
    if (k > n) return 0;
    return mod.mul(fact[n], mod.mul(inv_fact[k], inv_fact[n - k]));
  }
  const Modulus& mod;
  std::vector<u128> fact, inv_fact;
};

}  // namespace

int legendre_p3(std::uint64_t p) { return p % 3 == 1 ? 1 : -1; }

int legendre_m1(std::uint64_t p) { return p % 4 == 1 ? 1 : -1; }

Residue bernoulli_mod_p(const PrimeCtx& ctx, std::uint64_t n) {
  const std::uint64_t p = ctx.prime();
  const Modulus mod_p(p, 1);
  if (n == 0) return Residue(mod_p, 1);
  if (n % 2 != 0 || n + 3 > p) {
    throw Error(ErrorKind::UnsupportedIndex, "B_" + std::to_string(n) + " mod " + std::to_string(p));
  }
  const Modulus mod_p2(p, 2);
  u128 sum = 0;
  for (std::uint64_t j = 1; j < p; ++j) sum = mod_p2.add(sum, mod_p2.pow(j, n));
  if (sum % p != 0) throw Error(ErrorKind::Internal, "power sum not divisible by p");
  return Residue(mod_p, sum / p);
}

Residue bernoulli_third(const PrimeCtx& ctx) {
  const std::uint64_t p = ctx.prime();
  const std::uint64_t t = static_cast<std::uint64_t>(Modulus(p, 1).inv(3));
  return Residue::from_int(p, 1, -2) * ctx.harmonic(t - 1, 2).reduce(1);
}

Residue bernoulli_third_direct(const PrimeCtx& ctx) {
  const std::uint64_t p = ctx.prime();
  const Modulus mod(p, 1);
  const FactorialsModP f(mod, p - 2);
  const u128 third = mod.inv(3);
  const std::uint64_t n = p - 2;
  // j = 0 and j = 1 (B_1 = -1/2); odd j >= 3 vanish, as does B_{p-2}.
  u128 acc = mod.pow(third, n);
  acc = mod.add(acc, mod.mul(f.binom(n, 1), mod.mul(mod.neg(mod.inv(2)), mod.pow(third, n - 1))));
  for (std::uint64_t j = 2; j + 3 <= p; j += 2) {
    const u128 bj = bernoulli_mod_p(ctx, j).value();
    acc = mod.add(acc, mod.mul(f.binom(n, j), mod.mul(bj, mod.pow(third, n - j))));
  }
  return Residue(mod, acc);
}

Residue euler_even_mod_p(const PrimeCtx& ctx, std::uint64_t k) {
  const std::uint64_t p = ctx.prime();
  if (2 * k >= p) throw Error(ErrorKind::UnsupportedIndex, "E_" + std::to_string(2 * k) + " mod " + std::to_string(p));
  const Modulus mod(p, 1);
  const FactorialsModP f(mod, 2 * k);
  std::vector<u128> e(k + 1, 0);  // e[i] = E_{2i}
  e[0] = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    u128 s = 0;
    for (std::uint64_t j = 0; j < i; ++j) s = mod.add(s, mod.mul(f.binom(2 * i, 2 * j), e[j]));
    e[i] = mod.neg(s);
  }
  return Residue(mod, e[k]);
}

Residue euler_mod_p(const PrimeCtx& ctx) { return euler_even_mod_p(ctx, (ctx.prime() - 3) / 2); }

SpecialValues SpecialValues::compute(const PrimeCtx& ctx, const SpecialOptions& options) {
  const std::uint64_t p = ctx.prime();
  const Residue third = bernoulli_third(ctx);
  if (p <= kThirdCrossCheckBound && !(bernoulli_third_direct(ctx) == third)) {
    throw Error(ErrorKind::Internal, "B_{p-2}(1/3) cross-check failed at p=" + std::to_string(p));
  }
  std::map<std::uint64_t, Residue> bern;
  std::vector<std::uint64_t> indices = options.bernoulli_indices;
  if (indices.empty()) indices = {p - 3, p - 5};
  for (std::uint64_t n : indices) bern.emplace(n, bernoulli_mod_p(ctx, n));
  std::optional<Residue> euler;
  if (options.with_euler) euler = euler_mod_p(ctx);
  return SpecialValues{p, third, std::move(bern), euler, legendre_p3(p), legendre_m1(p)};
}

const Residue& SpecialValues::bernoulli(std::uint64_t n) const {
  auto it = bern.find(n);
  if (it == bern.end()) throw Error(ErrorKind::UnsupportedIndex, "B_" + std::to_string(n) + " was not computed");
  return it->second;
}

const Residue& SpecialValues::euler() const {
  if (!euler_pm3) throw Error(ErrorKind::UnsupportedIndex, "E_{p-3} was not computed");
  return *euler_pm3;
}

PadicRat SpecialValues::bernoulli_padic(const PrimeCtx& ctx, std::uint64_t n) const {
  if (n == 0) return ctx.integer(1);
  return PadicRat::from_residue(bernoulli(n));
}

}  // namespace congforge
