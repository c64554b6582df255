// congforge: verify harmonic-number / central-binomial congruences over
// ranges of primes.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "congforge/error.hpp"
#include "congforge/identities.hpp"
#include "congforge/prime_ctx.hpp"
#include "congforge/runner.hpp"
#include "congforge/special.hpp"

using namespace congforge;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::Usage, "--primes expects LO:HI, got '" + text + "'");
  }
}

std::vector<std::string> parse_ids(const std::string& text) {
  std::vector<std::string> ids;
  if (text == "all") return ids;
  std::string current;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!current.empty()) ids.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current += ch;
    }
  }
  if (ids.empty()) throw Error(ErrorKind::Usage, "--ids is empty");
  return ids;
}

struct VerifyOptions {
  std::string primes = "5:1000";
  std::string ids = "all";
  int work = kDefaultWork;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out = "-";
  std::uint64_t euler_bound = kDefaultEulerBound;
};

void add_verify_flags(CLI::App* cmd, VerifyOptions& o, bool with_ids) {
  cmd->add_option("--primes", o.primes, "prime range LO:HI (inclusive)")->capture_default_str();
  if (with_ids) cmd->add_option("--ids", o.ids, "comma-separated registry ids, or 'all'")->capture_default_str();
  cmd->add_option("--work", o.work, "working precision in p-adic digits")->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "worker threads")->envname("CONGFORGE_JOBS")->capture_default_str();
  cmd->add_option("--seed", o.seed, "seed for the sampled C3.8 points")->capture_default_str();
  cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd->add_option("--out", o.out, "report path, '-' for stdout")->capture_default_str();
  cmd->add_option("--euler-bound", o.euler_bound, "skip E_{p-3} entries above this prime")->capture_default_str();
}

int run_verify(const VerifyOptions& o) {
  RunConfig config;
  std::tie(config.lo, config.hi) = parse_range(o.primes);
  config.ids = parse_ids(o.ids);
  config.work = o.work;
  config.jobs = o.jobs;
  config.seed = o.seed;
  config.euler_bound = o.euler_bound;
  const Report report = run_batch(config);
  emit_report(report, o.format == "csv" ? ReportFormat::Csv : ReportFormat::Json, o.out);
  const std::size_t failed = report.failures();
  if (o.out != "-") {
    std::cerr << report.results.size() << " verdicts, " << failed << " failed\n";
  }
  return failed == 0 ? EXIT_SUCCESS : kExitFailure;
}

int run_value(std::uint64_t p, const std::string& what) {
  if (what == "legendre3") {
    std::cout << legendre_p3(p) << '\n';
    return EXIT_SUCCESS;
  }
  const PrimeCtx ctx(p, 1);
  if (what == "bernoulli-third") {
    std::cout << bernoulli_third(ctx).str() << " (mod " << p << ")\n";
  } else if (what == "euler") {
    std::cout << euler_mod_p(ctx).str() << " (mod " << p << ")\n";
  } else if (what.rfind("bernoulli:", 0) == 0) {
    std::uint64_t n = 0;
    try {
      n = std::stoull(what.substr(10));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, "bad Bernoulli index in '" + what + "'");
    }
    std::cout << bernoulli_mod_p(ctx, n).str() << " (mod " << p << ")\n";
  } else {
    throw Error(ErrorKind::Usage, "unknown value '" + what + "'");
  }
  return EXIT_SUCCESS;
}

int run_identities(const IdentityEnvelope& env) {
  std::size_t failed = 0;
  for (const IdentityTally& t : run_identity_envelope(env)) {
    std::cout << (t.failed == 0 ? "PASS " : "FAIL ") << t.id << "  checked=" << t.checked << " failed=" << t.failed;
    if (t.first_failure) {
      std::cout << "  first failure at (";
      for (std::size_t i = 0; i < t.first_failure->params.size(); ++i) {
        std::cout << (i ? "," : "") << t.first_failure->params[i];
      }
      std::cout << ") lhs=" << t.first_failure->lhs.get_str() << " rhs=" << t.first_failure->rhs.get_str();
    }
    std::cout << '\n';
    failed += t.failed;
  }
  return failed == 0 ? EXIT_SUCCESS : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congforge: prime congruences for harmonic numbers and central binomial coefficients"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "evaluate registry entries over a prime range");
  add_verify_flags(verify_cmd, verify, true);

  VerifyOptions conjecture;
  auto* conjecture_cmd = app.add_subcommand("conjecture", "verify --ids CONJ1");
  add_verify_flags(conjecture_cmd, conjecture, false);

  std::uint64_t value_p = 0;
  std::string value_what;
  auto* value_cmd = app.add_subcommand("value", "print a special value mod p");
  value_cmd->add_option("p", value_p, "prime > 3")->required();
  value_cmd->add_option("what", value_what, "bernoulli-third | bernoulli:N | euler | legendre3")->required();

  IdentityEnvelope env;
  auto* identities_cmd = app.add_subcommand("identities", "check the exact identities over their envelope");
  identities_cmd->add_option("--max-n", env.max_n)->capture_default_str();
  identities_cmd->add_option("--max-x", env.max_abs_x)->capture_default_str();
  identities_cmd->add_option("--max-m", env.max_m)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify_cmd) return run_verify(verify);
    if (*conjecture_cmd) {
      conjecture.ids = "CONJ1";
      return run_verify(conjecture);
    }
    if (*value_cmd) return run_value(value_p, value_what);
    if (*identities_cmd) return run_identities(env);
  } catch (const Error& e) {
    std::cerr << "congforge: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Usage:
      case ErrorKind::Config:
      case ErrorKind::InsufficientPrecision:
      case ErrorKind::UnsupportedIndex:
      case ErrorKind::IndexOutOfRange:
        return kExitUsage;
      default:
        return kExitFailure;
    }
  }
  return kExitUsage;
}
