#include "congforge/sequences.hpp"

#include "congforge/error.hpp"

namespace congforge {

BigInt central_binom_exact(std::uint64_t n) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), 2 * n, n);
  return out;
}

BigInt catalan(std::uint64_t n) {
  BigInt c = central_binom_exact(n);
  return c / static_cast<unsigned long>(n + 1);
}

namespace {

BigInt choose(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

BigInt g_seq(std::uint64_t n) {
  BigInt sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const BigInt b = choose(n, k);
    sum += b * b * central_binom_exact(k);
  }
  return sum;
}

BigInt h_seq(std::uint64_t n) {
  BigInt sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const BigInt b = choose(n, k);
    sum += b * b * catalan(k);
  }
  return sum;
}

BigInt franel(std::uint64_t n) {
  BigInt sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const BigInt b = choose(n, k);
    sum += b * b * b;
  }
  return sum;
}

SeqPoly g_poly(std::uint64_t n) {
  SeqPoly poly;
  poly.degree = n;
  poly.coeffs.reserve(n + 1);
  for (std::uint64_t k = 0; k <= n; ++k) {
    const BigInt b = choose(n, k);
    poly.coeffs.push_back(b * b * central_binom_exact(k));
  }
  return poly;
}

BigInt SeqPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactRational SeqPoly::integral01() const {
  ExactRational acc = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) acc += make_rational(coeffs[k], static_cast<unsigned long>(k + 1));
  return acc;
}

Residue poly_eval_mod(const SeqPoly& poly, const Residue& x) {
  const Modulus& mod = x.modulus();
  u128 acc = 0;
  for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) {
    acc = mod.add(mod.mul(acc, x.value()), mod.reduce(*it));
  }
  return Residue(mod, acc);
}

SequenceTerms sequence_terms_mod(const PrimeCtx& ctx) {
  const std::uint64_t p = ctx.prime();
  const int work = ctx.work();
  const Modulus& mod = ctx.modulus();
  std::vector<u128> cbc(p), cat(p);
  for (std::uint64_t j = 0; j < p; ++j) {
    cbc[j] = ctx.central_binomial(j).reduce(work).value();
    cat[j] = ctx.catalan(j).reduce(work).value();
  }
  SequenceTerms out;
  out.g.reserve(p);
  out.h.reserve(p);
  // Row k of Pascal's triangle mod p^work; every k < p is a unit.
  std::vector<u128> row{1};
  for (std::uint64_t k = 0; k < p; ++k) {
    if (k > 0) {
      row.push_back(1);
      for (std::uint64_t j = k - 1; j >= 1; --j) row[j] = mod.add(row[j], row[j - 1]);
    }
    u128 g = 0, h = 0;
    for (std::uint64_t j = 0; j <= k; ++j) {
      const u128 sq = mod.mul(row[j], row[j]);
      g = mod.add(g, mod.mul(sq, cbc[j]));
      h = mod.add(h, mod.mul(sq, cat[j]));
    }
    out.g.emplace_back(mod, g);
    out.h.emplace_back(mod, h);
  }
  return out;
}

std::vector<Residue> partial_sums(const std::vector<Residue>& terms) {
  std::vector<Residue> out;
  out.reserve(terms.size());
  for (const Residue& t : terms) out.push_back(out.empty() ? t : out.back() + t);
  return out;
}

}  // namespace congforge
