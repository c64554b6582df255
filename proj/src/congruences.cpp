#include "congforge/congruences.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "congforge/error.hpp"

namespace congforge {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

std::string DiffValuation::str() const {
  if (infinite) return "inf";
  return exact ? std::to_string(value) : ">=" + std::to_string(value);
}

namespace {

using Ev = Evaluator;

std::uint64_t half(const Ev& ev) { return (ev.ctx().prime() - 1) / 2; }
std::uint64_t prime(const Ev& ev) { return ev.ctx().prime(); }
const PadicRat& H(const Ev& ev, std::uint64_t n) { return ev.ctx().harmonic(n, 1); }
const PadicRat& H2(const Ev& ev, std::uint64_t n) { return ev.ctx().harmonic(n, 2); }
const PadicRat& cbc(const Ev& ev, std::uint64_t k) { return ev.ctx().central_binomial(k); }
PadicRat rec(const Ev& ev, std::uint64_t k) { return ev.ctx().reciprocal(k); }
PadicRat zero(const Ev& ev) { return PadicRat::exact_zero(prime(ev)); }

IndexRange all_indices(const Ev& ev) { return {1, prime(ev) - 1}; }
IndexRange upper_half(const Ev& ev) { return {half(ev) + 1, prime(ev) - 1}; }
IndexRange sample_ordinals(const Ev& ev) {
  if (ev.samples().empty()) throw Error(ErrorKind::Config, "no C3.8 samples");
  return {0, ev.samples().size() - 1};
}

PadicRat sum_g(Ev& ev, bool weighted) {
  const auto& seq = ev.sequences();
  PadicRat acc = zero(ev);
  for (std::uint64_t k = 1; k < prime(ev); ++k) {
    const PadicRat g = PadicRat::from_residue(seq.g[k]);
    acc += weighted ? g * H2(ev, k) : g;
  }
  return acc;
}

PadicRat sum_h(Ev& ev, bool weighted) {
  const auto& seq = ev.sequences();
  PadicRat acc = zero(ev);
  for (std::uint64_t k = 1; k < prime(ev); ++k) {
    const PadicRat h = PadicRat::from_residue(seq.h[k]);
    acc += weighted ? h * H2(ev, k) : h;
  }
  return acc;
}

std::vector<CongruenceSpec> build_registry() {
  std::vector<CongruenceSpec> r;
  auto add = [&r](std::string id, int mod_exp, std::string description, Sides (*sides)(Ev&, std::uint64_t),
                  IndexRange (*range)(const Ev&) = nullptr, int required = 0, bool euler = false,
                  bool conjecture = false) {
    r.push_back(CongruenceSpec{std::move(id), mod_exp, std::move(description), std::max(required, mod_exp),
                               euler, conjecture, sides, range});
  };

  add("W.HARM1", 2, "H_{p-1} = 0", [](Ev& ev, std::uint64_t) {
    return Sides{H(ev, prime(ev) - 1), zero(ev)};
  });
  add("W.HARM2", 1, "H^(2)_{p-1} = 0", [](Ev& ev, std::uint64_t) {
    return Sides{H2(ev, prime(ev) - 1), zero(ev)};
  });
  add("W.CBC", 3, "binom(2p-1,p-1) = 1", [](Ev& ev, std::uint64_t) {
    return Sides{ev.wolstenholme_binomial(), ev.integer(1)};
  });
  add("ST10", 3, "sum_{k<p} binom(2k,k)/k = (8/9) p^2 B_{p-3}", [](Ev& ev, std::uint64_t) {
    const std::uint64_t p = prime(ev);
    return Sides{ev.central().by_k, ev.ratio(8, 9).shift(2) * ev.specials().bernoulli_padic(ev.ctx(), p - 3)};
  });
  add("S11B.HALF", 2, "sum_{k<=(p-1)/2} binom(2k,k)/k = -(-1/p)(8/3) p E_{p-3}",
      [](Ev& ev, std::uint64_t) {
        const PadicRat rhs = ev.integer(-ev.specials().chi4) * ev.ratio(8, 3).shift(1) * ev.euler();
        return Sides{ev.central().by_k_half, rhs};
      },
      nullptr, 0, true);
  add("T1.1", 1, "sum binom(2k,k) H_k / k = (1/3)(p/3) B_{p-2}(1/3)", [](Ev& ev, std::uint64_t) {
    return Sides{ev.central().h1, ev.ratio(1, 3) * ev.third()};
  });
  add("T1.2", 1, "sum binom(2k,k) H_2k / k = (7/12)(p/3) B_{p-2}(1/3)", [](Ev& ev, std::uint64_t) {
    return Sides{ev.central().h2k, ev.ratio(7, 12) * ev.third()};
  });
  add("COR1.3", 1, "sum binom(2k,k)(4H_2k - 7H_k)/k = 0", [](Ev& ev, std::uint64_t) {
    const auto& c = ev.central();
    return Sides{ev.integer(4) * c.h2k - ev.integer(7) * c.h1, zero(ev)};
  });
  add("CONJ1", 4, "sum binom(2k,k)(4H_2k - 7H_k)/k = -14 H_{p-1}/p + (278/15) p^3 B_{p-5}",
      [](Ev& ev, std::uint64_t) {
        const auto& c = ev.central();
        const std::uint64_t p = prime(ev);
        const PadicRat rhs = ev.integer(-14) * fermat_style_quotient(ev.ctx()) +
                             ev.ratio(278, 15).shift(3) * ev.specials().bernoulli_padic(ev.ctx(), p - 5);
        return Sides{ev.integer(4) * c.h2k - ev.integer(7) * c.h1, rhs};
      },
      nullptr, 5, false, true);
  add("P2.A", 3, "binom(p,k) = (-1)^(k-1) (p/k)(1 - p H_{k-1}), 1 <= k <= p-1",
      [](Ev& ev, std::uint64_t k) {
        const PadicRat sign = ev.integer(k % 2 == 1 ? 1 : -1);
        const PadicRat rhs = sign * rec(ev, k).shift(1) * (ev.integer(1) - H(ev, k - 1).shift(1));
        return Sides{ev.binom_p(k), rhs};
      },
      all_indices);
  add("P2.B", 1, "sum_{k=j}^{p-1} binom(k,j) binom(k-1,j-1) = binom(2p-2j-1, p-1-j), 1 <= j <= p-1",
      [](Ev& ev, std::uint64_t j) {
        const std::uint64_t p = prime(ev);
        return Sides{PadicRat::from_residue(ev.chu_sum_mod_p(j)),
                     PadicRat::from_residue(ev.lucas_binomial(2 * p - 2 * j - 1, p - 1 - j))};
      },
      all_indices);
  add("P2.C", 2, "j binom(2j,j) binom(2(p-j),p-j) = 2p, (p+1)/2 <= j <= p-1",
      [](Ev& ev, std::uint64_t j) {
        const std::uint64_t p = prime(ev);
        const PadicRat lhs = ev.integer(static_cast<std::int64_t>(j)) * cbc(ev, j) * cbc(ev, p - j);
        return Sides{lhs, ev.integer(2).shift(1)};
      },
      upper_half);
  add("P2.D", 1, "H_{p-k} = H_k - 1/k, 1 <= k <= p-1",
      [](Ev& ev, std::uint64_t k) {
        return Sides{H(ev, prime(ev) - k), H(ev, k) - rec(ev, k)};
      },
      all_indices);
  add("P2.E", 3, "p H_{2p-1} = 1 - 2 p^2 H^(2)_{p-1}", [](Ev& ev, std::uint64_t) {
    const std::uint64_t p = prime(ev);
    const PadicRat h = H(ev, 2 * p - 2) + rec(ev, 2 * p - 1);
    return Sides{h.shift(1), ev.integer(1) - ev.integer(2).shift(2) * H2(ev, p - 1)};
  });
  add("C2.5", 1, "sum binom(2k,k) H_2k/k = (5/2) sum binom(2k,k) H_k/k - (1/2) sum binom(2k,k)/k^2",
      [](Ev& ev, std::uint64_t) {
        const auto& c = ev.central();
        return Sides{c.h2k, ev.ratio(5, 2) * c.h1 - ev.ratio(1, 2) * c.by_k2};
      });
  add("C2.6", 3, "-p sum binom(2k,k)(1 - pH_k + p/k)/k - binom(2p,p) + 1 = -1 + p sum_{k<=(p-1)/2} ...",
      [](Ev& ev, std::uint64_t) {
        const std::uint64_t p = prime(ev);
        PadicRat inner = zero(ev);
        for (std::uint64_t k = 1; k < p; ++k) {
          const PadicRat paren = ev.integer(1) - H(ev, k).shift(1) + rec(ev, k).shift(1);
          inner += cbc(ev, k) * rec(ev, k) * paren;
        }
        const PadicRat binom_2p = ev.integer(2) * ev.wolstenholme_binomial();
        const PadicRat lhs = -inner.shift(1) - binom_2p + ev.integer(1);
        PadicRat tail = zero(ev);
        for (std::uint64_t k = 1; k <= half(ev); ++k) {
          const PadicRat paren = ev.integer(1) - (H(ev, 2 * k) - rec(ev, 2 * k)).shift(1);
          tail += paren * rec(ev, 2 * k) * cbc(ev, k);
        }
        return Sides{lhs, ev.integer(-1) + tail.shift(1)};
      });
  add("C2.7", 2, "sum binom(2k,k)/k = 0", [](Ev& ev, std::uint64_t) {
    return Sides{ev.central().by_k, zero(ev)};
  });
  add("C2.8", 1, "sum binom(2k,k) H_k/k = (1/2p) S_half - (1/2) sum_half binom(2k,k) H_2k/k + (5/4) sum_half binom(2k,k)/k^2",
      [](Ev& ev, std::uint64_t) {
        const auto& c = ev.central();
        const PadicRat rhs = ev.ratio(1, 2) * c.by_k_half.shift(-1) - ev.ratio(1, 2) * c.h2k_half +
                             ev.ratio(5, 4) * c.by_k2_half;
        return Sides{c.h1, rhs};
      },
      nullptr, 2);
  add("C2.9", 1, "sum binom(2k,k) H_k/k = (5/4) sum binom(2k,k)/k^2 - (1/2) sum binom(2k,k) H_2k/k",
      [](Ev& ev, std::uint64_t) {
        const auto& c = ev.central();
        return Sides{c.h1, ev.ratio(5, 4) * c.by_k2 - ev.ratio(1, 2) * c.h2k};
      });
  add("C2.10", 1, "sum binom(2k,k)/k^2 = (1/2)(p/3) B_{p-2}(1/3)", [](Ev& ev, std::uint64_t) {
    return Sides{ev.central().by_k2, ev.ratio(1, 2) * ev.third()};
  });
  add("C2.HALFEQ", 1, "sum_{k<p} binom(2k,k)/k^2 = sum_{k<=(p-1)/2} binom(2k,k)/k^2", [](Ev& ev, std::uint64_t) {
    const auto& c = ev.central();
    return Sides{c.by_k2, c.by_k2_half};
  });
  add("R2.1a", 1, "-(1/p) sum_half binom(2k,k)/k = sum_half 2/(k^2 binom(2k,k))",
      [](Ev& ev, std::uint64_t) {
        const auto& c = ev.central();
        return Sides{-c.by_k_half.shift(-1), c.inverse_half};
      },
      nullptr, 2);
  add("R2.1b", 1, "sum_half 2/(k^2 binom(2k,k)) = (-1/p)(8/3) E_{p-3}",
      [](Ev& ev, std::uint64_t) {
        const PadicRat rhs = ev.integer(ev.specials().chi4) * ev.ratio(8, 3) * ev.euler();
        return Sides{ev.central().inverse_half, rhs};
      },
      nullptr, 0, true);
  add("P3.F", 2, "binom(p-1,j-1)^2 = 1 - 2p H_{j-1}, 1 <= j <= p-1",
      [](Ev& ev, std::uint64_t j) {
        const PadicRat& b = ev.binom_pm1(j - 1);
        return Sides{b * b, ev.integer(1) - ev.integer(2).shift(1) * H(ev, j - 1)};
      },
      all_indices);
  add("T1.6a", 1, "(1/p^2) sum g_k = (5/8)(p/3) B_{p-2}(1/3)",
      [](Ev& ev, std::uint64_t) {
        return Sides{sum_g(ev, false).shift(-2), ev.ratio(5, 8) * ev.third()};
      },
      nullptr, 3);
  add("T1.6b", 1, "sum g_k H^(2)_k = (5/8)(p/3) B_{p-2}(1/3)", [](Ev& ev, std::uint64_t) {
    return Sides{sum_g(ev, true), ev.ratio(5, 8) * ev.third()};
  });
  add("T1.7a", 3, "sum h_k = (3/4) p^2 (p/3) B_{p-2}(1/3)", [](Ev& ev, std::uint64_t) {
    return Sides{sum_h(ev, false), ev.ratio(3, 4).shift(2) * ev.third()};
  });
  add("T1.7b", 1, "sum h_k H^(2)_k = (3/4)(p/3) B_{p-2}(1/3)", [](Ev& ev, std::uint64_t) {
    return Sides{sum_h(ev, true), ev.ratio(3, 4) * ev.third()};
  });
  add("C3.7", 4, "sum g_k = p^2 sum g_k H^(2)_k + (7/6) p^3 B_{p-3}", [](Ev& ev, std::uint64_t) {
    const std::uint64_t p = prime(ev);
    const PadicRat rhs =
        sum_g(ev, true).shift(2) + ev.ratio(7, 6).shift(3) * ev.specials().bernoulli_padic(ev.ctx(), p - 3);
    return Sides{sum_g(ev, false), rhs};
  });
  add("C3.8", 4, "sum_{k<p} g_k(x)(1 - p^2 H^(2)_k) = sum_{k<p} (p/(2k+1))(1 - 2p^2 H^(2)_k) x^k",
      [](Ev& ev, std::uint64_t ordinal) {
        const Modulus& mod = ev.ctx().modulus();
        const u128 x = mod.reduce(ev.samples().at(ordinal));
        const auto& [lhs_coeffs, rhs_coeffs] = ev.c38_coefficients();
        auto horner = [&](const std::vector<u128>& c) {
          u128 acc = 0;
          for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mod.add(mod.mul(acc, x), *it);
          return PadicRat::from_residue(Residue(mod, acc));
        };
        return Sides{horner(lhs_coeffs), horner(rhs_coeffs)};
      },
      sample_ordinals, 5);
  add("C3.H", 3, "sum_{k<p} h_k (1 - p^2 H^(2)_k) = 1", [](Ev& ev, std::uint64_t) {
    const auto& seq = ev.sequences();
    PadicRat acc = zero(ev);
    for (std::uint64_t k = 0; k < prime(ev); ++k) {
      acc += PadicRat::from_residue(seq.h[k]) * (ev.integer(1) - H2(ev, k).shift(2));
    }
    return Sides{acc, ev.integer(1)};
  });
  return r;
}

struct Instance {
  Residue lhs;
  Residue rhs;
  DiffValuation diff;
};

Instance judge(const Sides& sides, int m, const std::string& id) {
  const PadicRat d = sides.lhs - sides.rhs;
  DiffValuation dv;
  if (d.is_exact_zero()) {
    dv.infinite = true;
  } else {
    dv.value = d.valuation();
    dv.exact = d.is_value();
    if (!dv.exact && dv.value < m) {
      throw Error(ErrorKind::InsufficientPrecision,
                  id + ": difference known only mod p^" + std::to_string(dv.value));
    }
  }
  Instance out{sides.lhs.reduce(m), sides.rhs.reduce(m), dv};
  if (dv.at_least(m) != (out.lhs == out.rhs)) {
    throw Error(ErrorKind::Internal, id + ": residues disagree with the difference valuation");
  }
  return out;
}

int rank(const DiffValuation& d) { return d.infinite ? std::numeric_limits<int>::max() : d.value; }

}  // namespace

const std::vector<CongruenceSpec>& registry() {
  static const std::vector<CongruenceSpec> specs = build_registry();
  return specs;
}

const CongruenceSpec& find_spec(std::string_view id) {
  for (const CongruenceSpec& s : registry()) {
    if (s.id == id) return s;
  }
  throw Error(ErrorKind::Usage, "unknown registry id '" + std::string(id) + "'");
}

std::vector<BigInt> c38_samples(std::uint64_t p, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32)};
  std::mt19937_64 rng(seq);
  const u128 bound = prime_power(p, 4);
  std::vector<BigInt> out{0, 1, 2};
  for (int i = 0; i < kC38RandomSamples; ++i) {
    const u128 hi = rng();
    const u128 lo = rng();
    out.push_back(to_mpz(((hi << 64) | lo) % bound));
  }
  return out;
}

Evaluator::Evaluator(const PrimeCtx& ctx, const SpecialValues& specials, std::vector<BigInt> samples)
    : ctx_(ctx), specials_(specials), samples_(std::move(samples)) {
  if (specials.p != ctx.prime()) throw Error(ErrorKind::Internal, "special values belong to another prime");
}

PadicRat Evaluator::third() const {
  return integer(specials_.chi3) * PadicRat::from_residue(specials_.bern_p2_third);
}

PadicRat Evaluator::euler() const { return PadicRat::from_residue(specials_.euler()); }

const Evaluator::CentralSums& Evaluator::central() {
  if (central_) return *central_;
  const std::uint64_t p = ctx_.prime();
  const std::uint64_t h = (p - 1) / 2;
  const PadicRat z = PadicRat::exact_zero(p);
  CentralSums s{z, z, z, z, z, z, z, z};
  for (std::uint64_t k = 1; k < p; ++k) {
    const PadicRat r = ctx_.reciprocal(k);
    const PadicRat t = ctx_.central_binomial(k) * r;
    const PadicRat t2 = t * r;
    const PadicRat with_h2k = t * ctx_.harmonic(2 * k);
    s.by_k += t;
    s.h1 += t * ctx_.harmonic(k);
    s.h2k += with_h2k;
    s.by_k2 += t2;
    if (k <= h) {
      s.by_k_half += t;
      s.h2k_half += with_h2k;
      s.by_k2_half += t2;
      s.inverse_half += integer(2) * r * r * ctx_.central_binomial(k).inverse();
    }
  }
  central_ = std::move(s);
  return *central_;
}

const SequenceTerms& Evaluator::sequences() {
  if (!sequences_) sequences_ = sequence_terms_mod(ctx_);
  return *sequences_;
}

const PadicRat& Evaluator::binom_p(std::uint64_t k) {
  const std::uint64_t p = ctx_.prime();
  if (k >= p) throw Error(ErrorKind::IndexOutOfRange, "binom(p, k) index");
  if (binom_p_.empty()) {
    binom_p_.push_back(integer(1));
    for (std::uint64_t i = 1; i < p; ++i) {
      binom_p_.push_back(binom_p_.back() * integer(static_cast<std::int64_t>(p - i + 1)) * ctx_.reciprocal(i));
    }
  }
  return binom_p_[k];
}

const PadicRat& Evaluator::binom_pm1(std::uint64_t k) {
  const std::uint64_t p = ctx_.prime();
  if (k >= p) throw Error(ErrorKind::IndexOutOfRange, "binom(p-1, k) index");
  if (binom_pm1_.empty()) {
    binom_pm1_.push_back(integer(1));
    for (std::uint64_t i = 1; i < p; ++i) {
      binom_pm1_.push_back(binom_pm1_.back() * integer(static_cast<std::int64_t>(p - i)) * ctx_.reciprocal(i));
    }
  }
  return binom_pm1_[k];
}

PadicRat Evaluator::wolstenholme_binomial() {
  const std::uint64_t p = ctx_.prime();
  PadicRat acc = integer(1);
  for (std::uint64_t j = 1; j < p; ++j) acc *= integer(static_cast<std::int64_t>(p + j)) * ctx_.reciprocal(j);
  return acc;
}

Residue Evaluator::chu_sum_mod_p(std::uint64_t j) {
  const std::uint64_t p = ctx_.prime();
  const Modulus mod(p, 1);
  if (j == 0 || j >= p) throw Error(ErrorKind::IndexOutOfRange, "Chu-Vandermonde index");
  if (fact_mod_p_.empty()) {
    fact_mod_p_.assign(p, 1);
    inv_fact_mod_p_.assign(p, 1);
    for (std::uint64_t i = 1; i < p; ++i) fact_mod_p_[i] = mod.mul(fact_mod_p_[i - 1], i);
    inv_fact_mod_p_[p - 1] = mod.inv(fact_mod_p_[p - 1]);
    for (std::uint64_t i = p - 1; i >= 1; --i) inv_fact_mod_p_[i - 1] = mod.mul(inv_fact_mod_p_[i], i);
  }
  auto choose = [&](std::uint64_t n, std::uint64_t k) {
    return mod.mul(fact_mod_p_[n], mod.mul(inv_fact_mod_p_[k], inv_fact_mod_p_[n - k]));
  };
  u128 acc = 0;
  for (std::uint64_t k = j; k < p; ++k) acc = mod.add(acc, mod.mul(choose(k, j), choose(k - 1, j - 1)));
  return Residue(mod, acc);
}

Residue Evaluator::lucas_binomial(std::uint64_t n, std::uint64_t k) {
  const std::uint64_t p = ctx_.prime();
  const Modulus mod(p, 1);
  u128 acc = 1;
  while (n != 0 || k != 0) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return Residue(mod, 0);
    u128 num = 1, den = 1;
    for (std::uint64_t i = 0; i < kd; ++i) {
      num = mod.mul(num, nd - i);
      den = mod.mul(den, i + 1);
    }
    acc = mod.mul(acc, mod.mul(num, mod.inv(den)));
    n /= p;
    k /= p;
  }
  return Residue(mod, acc);
}

const std::pair<std::vector<u128>, std::vector<u128>>& Evaluator::c38_coefficients() {
  if (c38_) return *c38_;
  const std::uint64_t p = ctx_.prime();
  const int work = ctx_.work();
  const Modulus& mod = ctx_.modulus();
  std::vector<u128> weight(p), lhs(p, 0), rhs(p);
  for (std::uint64_t k = 0; k < p; ++k) {
    const PadicRat& h2 = ctx_.harmonic(k, 2);
    weight[k] = (integer(1) - h2.shift(2)).reduce(work).value();
    const PadicRat c = integer(static_cast<std::int64_t>(p)) * ctx_.reciprocal(2 * k + 1) *
                       (integer(1) - integer(2).shift(2) * h2);
    rhs[k] = c.reduce(work).value();
  }
  // lhs[j] = binom(2j,j) * sum_{k>=j} weight[k] binom(k,j)^2.
  std::vector<u128> row{1};
  for (std::uint64_t k = 0; k < p; ++k) {
    if (k > 0) {
      row.push_back(1);
      for (std::uint64_t j = k - 1; j >= 1; --j) row[j] = mod.add(row[j], row[j - 1]);
    }
    for (std::uint64_t j = 0; j <= k; ++j) lhs[j] = mod.add(lhs[j], mod.mul(weight[k], mod.mul(row[j], row[j])));
  }
  for (std::uint64_t j = 0; j < p; ++j) lhs[j] = mod.mul(lhs[j], ctx_.central_binomial(j).reduce(work).value());
  c38_ = std::make_pair(std::move(lhs), std::move(rhs));
  return *c38_;
}

Sides Evaluator::sides(const CongruenceSpec& spec, std::uint64_t index) {
  if (spec.quantified()) {
    const IndexRange range = spec.range(*this);
    if (index < range.first || index > range.last) {
      throw Error(ErrorKind::IndexOutOfRange, spec.id + " index " + std::to_string(index));
    }
  }
  return spec.sides(*this, index);
}

Verdict Evaluator::evaluate(const CongruenceSpec& spec) {
  Verdict v;
  v.id = spec.id;
  v.p = ctx_.prime();
  v.mod_exp = spec.mod_exp;
  if (ctx_.work() < spec.required_precision) {
    throw Error(ErrorKind::InsufficientPrecision, spec.id + " needs working precision " +
                                                      std::to_string(spec.required_precision));
  }
  if (spec.needs_euler && !specials_.euler_pm3) {
    v.status = Status::Skipped;
    return v;
  }
  auto fill = [&](const Instance& inst) {
    v.lhs = inst.lhs.str();
    v.rhs = inst.rhs.str();
    v.diff = inst.diff;
  };
  if (!spec.quantified()) {
    const Instance inst = judge(sides(spec), spec.mod_exp, spec.id);
    fill(inst);
    v.status = inst.diff.at_least(spec.mod_exp) ? Status::Pass : Status::Fail;
    return v;
  }
  const IndexRange range = spec.range(*this);
  std::optional<Instance> weakest;
  for (std::uint64_t i = range.first; i <= range.last; ++i) {
    Instance inst = judge(spec.sides(*this, i), spec.mod_exp, spec.id);
    if (!inst.diff.at_least(spec.mod_exp)) {
      fill(inst);
      v.status = Status::Fail;
      v.witness_index = i;
      return v;
    }
    if (!weakest || rank(inst.diff) < rank(weakest->diff)) weakest = std::move(inst);
  }
  fill(*weakest);
  v.status = Status::Pass;
  return v;
}

Verdict evaluate(const PrimeCtx& ctx, const SpecialValues& specials, const CongruenceSpec& spec) {
  Evaluator ev(ctx, specials);
  return ev.evaluate(spec);
}

std::vector<Verdict> evaluate_c38(const PrimeCtx& ctx, const SpecialValues& specials,
                                  const std::vector<BigInt>& x_samples) {
  const CongruenceSpec& spec = find_spec("C3.8");
  if (ctx.work() < spec.required_precision) {
    throw Error(ErrorKind::InsufficientPrecision, "C3.8 needs working precision 5");
  }
  Evaluator ev(ctx, specials, x_samples);
  std::vector<Verdict> out;
  for (std::uint64_t i = 0; i < x_samples.size(); ++i) {
    const Instance inst = judge(ev.sides(spec, i), spec.mod_exp, spec.id);
    Verdict v;
    v.id = spec.id;
    v.p = ctx.prime();
    v.mod_exp = spec.mod_exp;
    v.lhs = inst.lhs.str();
    v.rhs = inst.rhs.str();
    v.diff = inst.diff;
    v.status = inst.diff.at_least(spec.mod_exp) ? Status::Pass : Status::Fail;
    v.witness_index = i;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace congforge
