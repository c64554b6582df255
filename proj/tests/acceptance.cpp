// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "congforge/congruences.hpp"
#include "congforge/error.hpp"
#include "congforge/identities.hpp"
#include "congforge/oracle.hpp"
#include "congforge/padic.hpp"
#include "congforge/rational.hpp"
#include "congforge/runner.hpp"
#include "congforge/special.hpp"

using namespace congforge;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 10) problems.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string render(const Report& r) {
  std::ostringstream out;
  emit_report(r, ReportFormat::Json, out);
  return out.str();
}

// ---------------------------------------------------------------------------

Outcome exact_values_p5() {
  Outcome o;
  const auto t0 = Clock::now();
  const ExactOracle oracle(5);
  const PrimeCtx ctx(5, 5);
  const SpecialValues sv = SpecialValues::compute(ctx);
  Evaluator ev(ctx, sv);

  auto verdict_is = [&](const char* id, const char* lhs, const char* rhs) {
    const Verdict v = ev.evaluate(find_spec(id));
    o.expect(v.pass() && v.lhs == lhs && v.rhs == rhs,
             std::string(id) + " lhs=" + v.lhs + " rhs=" + v.rhs);
  };
  o.expect(oracle.value("T1.1 LHS") == make_rational(3973, 72), "T1.1 LHS exact");
  verdict_is("T1.1", "4", "4");
  o.expect(oracle.value("T1.2 LHS") == make_rational(3511, 48), "T1.2 LHS exact");
  verdict_is("T1.2", "2", "2");
  o.expect(oracle.value("C2.10 LHS") == make_rational(727, 72), "C2.10 LHS exact");
  verdict_is("C2.10", "1", "1");
  const ExactRational c27 = oracle.value("C2.7 LHS");
  o.expect(c27 == make_rational(175, 6) && valuation(c27, 5) == 2, "C2.7 LHS exact/valuation");
  o.expect(ev.evaluate(find_spec("C2.7")).pass(), "C2.7 verdict");
  verdict_is("ST10", "50", "50");
  o.expect(oracle.value("sum g") == 750, "sum g");
  o.expect(oracle.value("sum h") == 225, "sum h");
  const Verdict t17 = ev.evaluate(find_spec("T1.7a"));
  o.expect(t17.pass() && t17.mod_exp == 3 && t17.lhs == "100", "T1.7a mod 125: lhs=" + t17.lhs);
  const double secs = seconds_since(t0);
  o.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
  o.detail = "oracle and engine agree; " + std::to_string(secs) + " s";
  return o;
}

Outcome conjecture_p5() {
  Outcome o;
  const ExactOracle oracle(5);
  const ExactRational diff = oracle.value("CONJ1 LHS") - oracle.value("CONJ1 RHS");
  o.expect(diff == make_rational(-173125, 72), "exact difference " + diff.get_str());
  o.expect(valuation(diff, 5) == 4, "exact valuation");
  const PrimeCtx ctx(5, 5);
  const SpecialValues sv = SpecialValues::compute(ctx);
  const Verdict v = evaluate(ctx, sv, find_spec("CONJ1"));
  o.expect(v.pass() && v.mod_exp == 4, "verdict");
  o.expect(v.diff.exact && v.diff.value == 4, "diff_valuation " + v.diff.str());
  o.detail = "LHS-RHS = " + diff.get_str() + ", diff_valuation " + v.diff.str();
  return o;
}

Outcome full_sweep() {
  Outcome o;
  RunConfig config;
  config.lo = 5;
  config.hi = 1000;
  config.work = 5;
  config.jobs = 1;
  const auto t0 = Clock::now();
  const Report serial = run_batch(config);
  const double secs = seconds_since(t0);

  std::size_t theorem_entries = 0;
  for (const auto& [id, s] : serial.summary()) {
    if (s.conjecture) continue;
    ++theorem_entries;
    o.expect(s.fail == 0 && s.skipped == 0, id + " fail=" + std::to_string(s.fail) + " skipped=" + std::to_string(s.skipped));
  }
  o.expect(secs <= 60.0, "single-threaded run took " + std::to_string(secs) + " s");

  config.jobs = std::max(2u, std::thread::hardware_concurrency());
  const Report parallel = run_batch(config);
  o.expect(render(parallel) == render(serial), "jobs=" + std::to_string(config.jobs) + " output differs");

  o.detail = std::to_string(theorem_entries) + " theorem entries, " + std::to_string(serial.results.size()) +
             " verdicts, " + std::to_string(secs) + " s single-threaded, jobs=" + std::to_string(config.jobs) +
             " byte-identical";
  return o;
}

Outcome conjecture_scan() {
  Outcome o;
  RunConfig config;
  config.lo = 5;
  config.hi = 2000;
  config.ids = {"CONJ1"};
  const Report r = run_batch(config);
  for (const Verdict& v : r.results) {
    o.expect(v.pass(), "p=" + std::to_string(v.p) + " lhs=" + v.lhs + " rhs=" + v.rhs + " diff=" + v.diff.str());
  }
  o.detail = std::to_string(r.results.size()) + " primes, " + std::to_string(r.failures()) + " failures";
  return o;
}

Outcome special_values() {
  Outcome o;
  std::size_t third = 0, bern = 0, euler = 0;
  for (std::uint64_t p : sieve_primes(0, 200)) {
    const PrimeCtx ctx(p, 1);
    o.expect(bernoulli_third(ctx) == bernoulli_third_direct(ctx), "B_{p-2}(1/3) at p=" + std::to_string(p));
    ++third;
    const long exact_euler[] = {-1, 5, -61, 1385};
    for (std::uint64_t k = 1; k <= 4 && 2 * k < p; ++k) {
      o.expect(euler_even_mod_p(ctx, k) == Residue::from_int(p, 1, exact_euler[k - 1]),
               "E_" + std::to_string(2 * k) + " mod " + std::to_string(p));
      ++euler;
    }
    if (p > 50) continue;
    const ExactOracle oracle(p);
    o.expect(bernoulli_third(ctx) == reduce_exact(oracle.bernoulli_third(), p, 1),
             "B_{p-2}(1/3) exact at p=" + std::to_string(p));
    for (std::uint64_t n = 0; n + 3 <= p; n += 2) {
      o.expect(bernoulli_mod_p(ctx, n) == reduce_exact(oracle.bernoulli(n), p, 1),
               "B_" + std::to_string(n) + " mod " + std::to_string(p));
      ++bern;
    }
  }
  o.detail = std::to_string(third) + " B_{p-2}(1/3) cross-checks, " + std::to_string(bern) + " Bernoulli, " +
             std::to_string(euler) + " Euler comparisons";
  return o;
}

Outcome identity_suite() {
  Outcome o;
  const IdentityEnvelope env{50, 50, 10};
  std::size_t checked = 0;
  const auto tallies = run_identity_envelope(env);
  o.expect(tallies.size() == 8, "expected 8 identities");
  for (const IdentityTally& t : tallies) {
    checked += t.checked;
    o.expect(t.checked > 0 && t.failed == 0, t.id + " failed " + std::to_string(t.failed));
  }
  // n = 50: degree 101 needs 102 points.
  o.expect(tallies.back().checked >= 51 * 101 + 1, "too few antidifference samples");
  o.detail = std::to_string(tallies.size()) + " identities, " + std::to_string(checked) + " exact checks";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t comparisons = 0;
  for (std::uint64_t p : sieve_primes(0, 100)) {
    const ExactOracle oracle(p);
    const PrimeCtx ctx(p, 5);
    const SpecialValues sv = SpecialValues::compute(ctx);
    Evaluator ev(ctx, sv, c38_samples(p, 1));
    for (const CongruenceSpec& spec : registry()) {
      auto compare = [&](std::uint64_t index, const std::optional<BigInt>& param) {
        const Sides s = ev.sides(spec, index);
        for (const auto& [side, value] : {std::pair{"LHS", &s.lhs}, std::pair{"RHS", &s.rhs}}) {
          const std::string where = spec.id + " " + side + " p=" + std::to_string(p) +
                                    (param ? " param=" + param->get_str() : std::string());
          try {
            const Residue exact = reduce_exact(oracle.value(spec.id + " " + side, param), p, spec.mod_exp);
            o.expect(value->reduce(spec.mod_exp) == exact, where);
          } catch (const Error& e) {
            o.expect(false, where + ": " + e.what());
          }
          ++comparisons;
        }
      };
      if (!spec.quantified()) {
        compare(0, std::nullopt);
        continue;
      }
      const IndexRange range = spec.range(ev);
      for (std::uint64_t i = range.first; i <= range.last; ++i) {
        const BigInt param = spec.id == "C3.8" ? ev.samples().at(i) : BigInt(static_cast<unsigned long>(i));
        compare(i, param);
      }
    }
  }
  o.detail = std::to_string(comparisons) + " residue comparisons over primes 5..97";
  return o;
}

// p-adic property suite ------------------------------------------------------

// a and b are indistinguishable at their common precision.
bool agree(const PadicRat& a, const PadicRat& b) { return !(a - b).is_value(); }

Outcome padic_properties() {
  Outcome o;
  constexpr int kCases = 10000;
  std::size_t cases = 0;
  for (std::uint64_t p : {5u, 7u, 13u, 10007u}) {
    for (int m = 1; m <= 5; ++m) {
      const Modulus mod(p, m);
      std::mt19937_64 rng(p * 16 + static_cast<std::uint64_t>(m));
      auto random_unit = [&] {
        for (;;) {
          const u128 u = ((static_cast<u128>(rng()) << 64) | rng()) % mod.value();
          if (u % p != 0) return u;
        }
      };
      auto random_padic = [&] {
        const int v = static_cast<int>(rng() % 6) - 2;
        return PadicRat::from_parts(p, v, random_unit(), m);
      };
      auto random_rational = [&] {
        BigInt num = static_cast<long>(rng() % 2000001) - 1000000;
        BigInt den = static_cast<long>(rng() % 1000000) + 1;
        const int shift = static_cast<int>(rng() % 5) - 2;
        if (shift > 0) num *= to_mpz(prime_power(p, shift));
        if (shift < 0) den *= to_mpz(prime_power(p, -shift));
        return make_rational(num, den);
      };
      const std::string tag = " (p=" + std::to_string(p) + ", m=" + std::to_string(m) + ")";

      for (int i = 0; i < kCases; ++i, ++cases) {
        const PadicRat x = random_padic(), y = random_padic(), z = random_padic();

        // ring laws
        o.expect(agree(x + y, y + x) && agree(x * y, y * x), "commutativity" + tag);
        o.expect(agree((x + y) + z, x + (y + z)), "additive associativity" + tag);
        o.expect(agree((x * y) * z, x * (y * z)), "multiplicative associativity" + tag);
        o.expect(agree(x * (y + z), x * y + x * z), "distributivity" + tag);
        o.expect((x + (-x)).is_zero_to_precision(), "additive inverse" + tag);
        o.expect(agree(x * x.inverse(), PadicRat::from_int(p, m, 1)), "multiplicative inverse" + tag);
        o.expect((x + PadicRat::exact_zero(p)).unit() == x.unit(), "additive identity" + tag);

        // valuation additivity and precision monotonicity
        const PadicRat xy = x * y;
        o.expect(xy.valuation() == x.valuation() + y.valuation(), "valuation additivity" + tag);
        o.expect(xy.relative_precision() <= std::min(x.relative_precision(), y.relative_precision()),
                 "product precision" + tag);
        const PadicRat s = x + y;
        o.expect(s.absolute_precision() <= std::min(x.absolute_precision(), y.absolute_precision()),
                 "sum precision" + tag);
        if (s.is_value()) {
          o.expect(s.valuation() >= std::min(x.valuation(), y.valuation()), "ultrametric" + tag);
        }

        // from_ratio round trips against exact rationals
        const ExactRational a = random_rational(), b = random_rational();
        const PadicRat pa = PadicRat::from_ratio(p, m, a), pb = PadicRat::from_ratio(p, m, b);
        if (a != 0) {
          o.expect(pa.valuation() == valuation(a, p), "from_ratio valuation" + tag);
          o.expect(agree(pa * PadicRat::from_ratio(p, m, a.get_den(), BigInt(1)),
                         PadicRat::from_ratio(p, m, a.get_num(), BigInt(1))),
                   "from_ratio round trip" + tag);
          if (pa.valuation() >= 0) {
            const int digits = std::min(m, pa.absolute_precision());
            o.expect(pa.reduce(digits) == reduce_exact(a, p, digits), "from_ratio reduce" + tag);
          }
        }
        o.expect(agree(pa + pb, PadicRat::from_ratio(p, m, ExactRational(a + b))), "sum homomorphism" + tag);
        o.expect(agree(pa * pb, PadicRat::from_ratio(p, m, ExactRational(a * b))), "product homomorphism" + tag);
      }
    }
  }
  o.detail = std::to_string(cases) + " random cases over (p, m) in {5,7,13,10007} x {1..5}";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "hand-verifiable p=5 residues", exact_values_p5},
      {2, "CONJ1 at p=5 has difference valuation exactly 4", conjecture_p5},
      {3, "registry sweep over primes 5..1000", full_sweep},
      {4, "CONJ1 over primes 5..2000", conjecture_scan},
      {5, "special-value cross-validation", special_values},
      {6, "identity suite over n<=50, |x|<=50", identity_suite},
      {7, "modular evaluation matches the exact oracle for p<=100", oracle_equivalence},
      {8, "p-adic arithmetic property suite", padic_properties},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    std::cout << (out.pass ? "PASS" : "FAIL") << " [" << c.number << "] " << c.name << ": " << out.detail << '\n';
    for (const std::string& p : out.problems) std::cout << "    " << p << '\n';
    std::cout.flush();
    if (!out.pass) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
