#include "congforge/oracle.hpp"

#include "congforge/error.hpp"

namespace congforge {

namespace {

ExactRational q(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

ExactOracle::ExactOracle(std::uint64_t p) : p_(p) {
  if (p > kOracleMaxPrime) {
    throw Error(ErrorKind::SizeGuard, "exact oracle is limited to p <= " + std::to_string(kOracleMaxPrime));
  }
  if (p < 5) throw Error(ErrorKind::Config, "prime must exceed 3");
  const long n = static_cast<long>(p);
  h1_.assign(2 * p + 1, 0);
  h2_.assign(2 * p + 1, 0);
  for (long k = 1; k <= 2 * n; ++k) {
    h1_[k] = h1_[k - 1] + q(1, k);
    h2_[k] = h2_[k - 1] + q(1, k * k);
  }
  for (long k = 0; k < n; ++k) cbc_.push_back(binomial(2 * k, k));
  for (long m = 0; m < n; ++m) {
    BigInt g = 0;
    ExactRational h = 0;
    for (long k = 0; k <= m; ++k) {
      const BigInt b = binomial(m, k);
      g += b * b * cbc_[k];
      h += ExactRational(b * b) * make_rational(cbc_[k], k + 1);
    }
    g_.push_back(g);
    h_seq_.push_back(h);
  }
  // sum_{j<=m} binom(m+1, j) B_j = 0.
  bern_.push_back(1);
  for (long m = 1; m <= n; ++m) {
    ExactRational s = 0;
    for (long j = 0; j < m; ++j) s += ExactRational(binomial(m + 1, j)) * bern_[j];
    bern_.push_back(-s / (m + 1));
  }
  // sum_{j<=k} binom(2k, 2j) E_2j = 0.
  euler_.push_back(1);
  for (long k = 1; 2 * k <= n; ++k) {
    BigInt s = 0;
    for (long j = 0; j < k; ++j) s += binomial(2 * k, 2 * j) * euler_[j];
    euler_.push_back(-s);
  }
  // B_{p-2}(x) = sum_k binom(p-2, k) B_k x^(p-2-k) at x = 1/3.
  third_ = 0;
  const long d = n - 2;
  for (long k = 0; k <= d; ++k) {
    BigInt pow3;
    mpz_ui_pow_ui(pow3.get_mpz_t(), 3, static_cast<unsigned long>(d - k));
    third_ += ExactRational(binomial(d, k)) * bern_[k] / ExactRational(pow3);
  }
}

ExactRational ExactOracle::harmonic(std::uint64_t n, int order) const {
  return order == 1 ? h1_.at(n) : h2_.at(n);
}

ExactRational ExactOracle::g_at(std::uint64_t n, const BigInt& x) const {
  BigInt acc = 0, xp = 1;
  const long m = static_cast<long>(n);
  for (long k = 0; k <= m; ++k) {
    const BigInt b = binomial(m, k);
    acc += b * b * cbc_[k] * xp;
    xp *= x;
  }
  return ExactRational(acc);
}

ExactRational ExactOracle::value(std::string_view expr, const std::optional<BigInt>& param) const {
  const long p = static_cast<long>(p_);
  const long half = (p - 1) / 2;
  const ExactRational pq = q(p);
  const long chi3 = p % 3 == 1 ? 1 : -1;
  const long chi4 = p % 4 == 1 ? 1 : -1;
  auto idx = [&]() -> long {
    if (!param || !param->fits_slong_p()) throw Error(ErrorKind::Usage, std::string(expr) + " needs an index");
    return param->get_si();
  };
  auto sum_k = [&](long last, auto&& term) {
    ExactRational s = 0;
    for (long k = 1; k <= last; ++k) s += term(k);
    return s;
  };
  auto c_over_k = [&](long k) -> ExactRational { return make_rational(cbc_[k], k); };
  auto S1 = [&]() -> ExactRational { return sum_k(p - 1, [&](long k) -> ExactRational { return c_over_k(k) * h1_[k]; }); };
  auto S2 = [&](long last) -> ExactRational { return sum_k(last, [&](long k) -> ExactRational { return c_over_k(k) * h1_[2 * k]; }); };
  auto A = [&](long last) -> ExactRational { return sum_k(last, c_over_k); };
  auto Q = [&](long last) -> ExactRational { return sum_k(last, [&](long k) -> ExactRational { return c_over_k(k) / k; }); };
  auto inv_half = [&]() -> ExactRational { return sum_k(half, [&](long k) -> ExactRational { return make_rational(2, cbc_[k] * k * k); }); };
  auto sum_g = [&](bool weighted) {
    return sum_k(p - 1, [&](long k) -> ExactRational { return weighted ? ExactRational(g_[k]) * h2_[k] : ExactRational(g_[k]); });
  };
  auto sum_h = [&](bool weighted) {
    return sum_k(p - 1, [&](long k) -> ExactRational { return weighted ? h_seq_[k] * h2_[k] : h_seq_[k]; });
  };
  auto pow_p = [&](unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), e);
    return ExactRational(r);
  };
  const ExactRational& bt = third_;
  auto E = [&] { return ExactRational(euler_.at(static_cast<std::size_t>((p - 3) / 2))); };

  const std::string e(expr);
  if (e == "sum g") return sum_g(false);
  if (e == "sum h") return sum_h(false);
  if (e == "W.HARM1 LHS") return h1_[p - 1];
  if (e == "W.HARM2 LHS") return h2_[p - 1];
  if (e == "W.HARM1 RHS" || e == "W.HARM2 RHS" || e == "COR1.3 RHS" || e == "C2.7 RHS") return 0;
  if (e == "W.CBC LHS") return ExactRational(binomial(2 * p - 1, p - 1));
  if (e == "W.CBC RHS" || e == "C3.H RHS") return 1;
  if (e == "ST10 LHS" || e == "C2.7 LHS") return A(p - 1);
  if (e == "ST10 RHS") return q(8, 9) * pow_p(2) * bern_[p - 3];
  if (e == "S11B.HALF LHS") return A(half);
  if (e == "S11B.HALF RHS") return q(-chi4) * q(8, 3) * pq * E();
  if (e == "T1.1 LHS" || e == "C2.8 LHS" || e == "C2.9 LHS") return S1();
  if (e == "T1.1 RHS") return q(chi3, 3) * bt;
  if (e == "T1.2 LHS" || e == "C2.5 LHS") return S2(p - 1);
  if (e == "T1.2 RHS") return q(7 * chi3, 12) * bt;
  if (e == "COR1.3 LHS" || e == "CONJ1 LHS") return 4 * S2(p - 1) - 7 * S1();
  if (e == "CONJ1 RHS") return q(-14) * h1_[p - 1] / pq + q(278, 15) * pow_p(3) * bern_[p - 5];
  if (e == "P2.A LHS") return ExactRational(binomial(p, idx()));
  if (e == "P2.A RHS") {
    const long k = idx();
    return q(k % 2 == 1 ? 1 : -1) * q(p, k) * (1 - pq * h1_[k - 1]);
  }
  if (e == "P2.B LHS") {
    const long j = idx();
    BigInt s = 0;
    for (long k = j; k < p; ++k) s += binomial(k, j) * binomial(k - 1, j - 1);
    return ExactRational(s);
  }
  if (e == "P2.B RHS") {
    const long j = idx();
    return ExactRational(binomial(2 * p - 2 * j - 1, p - 1 - j));
  }
  if (e == "P2.C LHS") {
    const long j = idx();
    return ExactRational(j * cbc_[j] * binomial(2 * (p - j), p - j));
  }
  if (e == "P2.C RHS") return q(2 * p);
  if (e == "P2.D LHS") return h1_[p - idx()];
  if (e == "P2.D RHS") {
    const long k = idx();
    return h1_[k] - q(1, k);
  }
  if (e == "P2.E LHS") return pq * h1_[2 * p - 1];
  if (e == "P2.E RHS") return 1 - 2 * pow_p(2) * h2_[p - 1];
  if (e == "C2.5 RHS") return q(5, 2) * S1() - q(1, 2) * Q(p - 1);
  if (e == "C2.6 LHS") {
    const ExactRational inner =
        sum_k(p - 1, [&](long k) -> ExactRational { return c_over_k(k) * (1 - pq * h1_[k] + q(p, k)); });
    return -pq * inner - ExactRational(binomial(2 * p, p)) + 1;
  }
  if (e == "C2.6 RHS") {
    return -1 + pq * sum_k(half, [&](long k) -> ExactRational {
             return (1 - pq * (h1_[2 * k] - q(1, 2 * k))) / (2 * k) * ExactRational(cbc_[k]);
           });
  }
  if (e == "C2.8 RHS") {
    return A(half) / (2 * pq) - q(1, 2) * S2(half) + q(5, 4) * Q(half);
  }
  if (e == "C2.9 RHS") return q(5, 4) * Q(p - 1) - q(1, 2) * S2(p - 1);
  if (e == "C2.10 LHS" || e == "C2.HALFEQ LHS") return Q(p - 1);
  if (e == "C2.10 RHS") return q(chi3, 2) * bt;
  if (e == "C2.HALFEQ RHS") return Q(half);
  if (e == "R2.1a LHS") return -A(half) / pq;
  if (e == "R2.1a RHS" || e == "R2.1b LHS") return inv_half();
  if (e == "R2.1b RHS") return q(8 * chi4, 3) * E();
  if (e == "P3.F LHS") {
    const BigInt b = binomial(p - 1, idx() - 1);
    return ExactRational(b * b);
  }
  if (e == "P3.F RHS") return 1 - 2 * pq * h1_[idx() - 1];
  if (e == "T1.6a LHS") return sum_g(false) / pow_p(2);
  if (e == "T1.6a RHS" || e == "T1.6b RHS") return q(5 * chi3, 8) * bt;
  if (e == "T1.6b LHS") return sum_g(true);
  if (e == "T1.7a LHS") return sum_h(false);
  if (e == "T1.7a RHS") return q(3 * chi3, 4) * pow_p(2) * bt;
  if (e == "T1.7b LHS") return sum_h(true);
  if (e == "T1.7b RHS") return q(3 * chi3, 4) * bt;
  if (e == "C3.7 LHS") return sum_g(false);
  if (e == "C3.7 RHS") return pow_p(2) * sum_g(true) + q(7, 6) * pow_p(3) * bern_[p - 3];
  if (e == "C3.8 LHS" || e == "C3.8 RHS") {
    if (!param) throw Error(ErrorKind::Usage, "C3.8 needs a sample x");
    const BigInt& x = *param;
    ExactRational s = 0;
    BigInt xp = 1;
    for (long k = 0; k < p; ++k) {
      if (e == "C3.8 LHS") {
        s += g_at(k, x) * (1 - pow_p(2) * h2_[k]);
      } else {
        s += pq / (2 * k + 1) * (1 - 2 * pow_p(2) * h2_[k]) * ExactRational(xp);
        xp *= x;
      }
    }
    return s;
  }
  if (e == "C3.H LHS") {
    ExactRational s = 0;
    for (long k = 0; k < p; ++k) s += h_seq_[k] * (1 - pow_p(2) * h2_[k]);
    return s;
  }
  throw Error(ErrorKind::Usage, "unknown oracle expression '" + e + "'");
}

ExactRational brute_force_oracle(std::uint64_t p, std::string_view expr, const std::optional<BigInt>& param) {
  return ExactOracle(p).value(expr, param);
}

}  // namespace congforge
