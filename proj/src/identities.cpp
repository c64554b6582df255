#include "congforge/identities.hpp"

#include <algorithm>

#include "congforge/error.hpp"

namespace congforge {

namespace {

ExactRational harmonic_exact(long n) {
  ExactRational h = 0;
  for (long k = 1; k <= n; ++k) h += ExactRational(1, k);
  return h;
}

IdentityResult make(std::string id, std::vector<long> params, ExactRational lhs, ExactRational rhs) {
  lhs.canonicalize();
  rhs.canonicalize();
  const bool pass = lhs == rhs;
  return {std::move(id), std::move(params), std::move(lhs), std::move(rhs), pass};
}

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw Error(ErrorKind::UnsupportedIndex, std::string(what) + " must be non-negative");
}

ExactRational antidifference_g(long n, long x) {
  BigInt sum = 0;
  for (long k = 0; k <= n; ++k) {
    const BigInt b = binomial(x, k);
    sum += (2 * x - 3 * k) * b * b * binomial(2 * k, k);
  }
  return make_rational(sum, BigInt((4 * n + 2) * binomial(2 * n, n)));
}

}  // namespace

IdentityResult check_chu_vandermonde(long n, long x, long y) {
  require_nonnegative(n, "n");
  BigInt lhs = 0;
  for (long k = 0; k <= n; ++k) lhs += binomial(x, k) * binomial(y, n - k);
  return make("chu-vandermonde", {n, x, y}, ExactRational(lhs), ExactRational(binomial(x + y, n)));
}

IdentityResult check_squared_harmonic(long n) {
  require_nonnegative(n, "n");
  ExactRational lhs = 0, h = 0;
  for (long k = 0; k <= n; ++k) {
    if (k > 0) h += ExactRational(1, k);
    const BigInt b = binomial(n, k);
    lhs += ExactRational(b * b) * h;
  }
  const ExactRational rhs = ExactRational(binomial(2 * n, n)) * (2 * harmonic_exact(n) - harmonic_exact(2 * n));
  return make("squared-harmonic", {n}, lhs, rhs);
}

IdentityResult check_alternating(long n) {
  require_nonnegative(n, "n");
  BigInt lhs = 0, rhs = 0;
  for (long k = 0; k <= n; ++k) {
    const BigInt t = binomial(n, k) * binomial(2 * k, k);
    lhs += (k % 2 == 0) ? t : BigInt(-t);
  }
  for (long k = 0; 2 * k <= n; ++k) rhs += binomial(n, 2 * k) * binomial(2 * k, k);
  if (n % 2 != 0) rhs = -rhs;
  return make("alternating", {n}, ExactRational(lhs), ExactRational(rhs));
}

IdentityResult check_hockey(long n, long m, long x) {
  require_nonnegative(n, "n");
  require_nonnegative(m, "m");
  BigInt lhs = 0;
  for (long k = 0; k <= n; ++k) lhs += binomial(x + k, m);
  const BigInt rhs = binomial(n + x + 1, m + 1) - binomial(x, m + 1);
  return make("hockey-stick", {n, m, x}, ExactRational(lhs), ExactRational(rhs));
}

IdentityResult check_square_identity(long n, long x) {
  require_nonnegative(n, "n");
  BigInt lhs = 0;
  for (long k = 0; k <= n; ++k) {
    const BigInt b = binomial(n, k);
    lhs += b * b * binomial(x + k, 2 * n);
  }
  const BigInt c = binomial(x, n);
  return make("binomial-square", {n, x}, ExactRational(lhs), ExactRational(c * c));
}

IdentityResult check_antidifference(long n, long x) {
  require_nonnegative(n, "n");
  BigInt lhs = 0;
  for (long k = 0; k <= n; ++k) {
    const BigInt b = binomial(n, k);
    lhs += b * b * binomial(x + k, 2 * n + 1);
  }
  return make("antidifference", {n, x}, ExactRational(lhs), antidifference_g(n, x));
}

IdentityResult check_antidifference_step(long n, long x) {
  require_nonnegative(n, "n");
  const BigInt c = binomial(x, n);
  return make("antidifference-step", {n, x}, antidifference_g(n, x + 1) - antidifference_g(n, x), ExactRational(c * c));
}

IdentityResult check_harmonic_rearrangement(long upper) {
  if (upper < 2) throw Error(ErrorKind::UnsupportedIndex, "upper limit must be at least 2");
  std::vector<ExactRational> h(2 * static_cast<std::size_t>(upper) + 1, 0);
  for (long k = 1; k <= 2 * upper; ++k) h[k] = h[k - 1] + ExactRational(1, k);
  ExactRational lhs = 0, first = 0, nested = 0;
  for (long k = 1; k < upper; ++k) {
    const ExactRational c = make_rational(binomial(2 * k, k), k);
    lhs += c * h[2 * k];
    first += c * h[k];
    ExactRational inner = 0;
    for (long j = 1; j <= k; ++j) {
      const BigInt b = binomial(k, j);
      inner += ExactRational(b * b) * h[j];
    }
    nested += inner / k;
  }
  return make("harmonic-rearrangement", {upper}, lhs, 2 * first - nested);
}

std::vector<IdentityTally> run_identity_envelope(const IdentityEnvelope& env) {
  if (env.max_n < 0 || env.max_abs_x < 0 || env.max_m < 0) throw Error(ErrorKind::Config, "envelope bounds must be non-negative");
  std::vector<IdentityTally> tallies;
  for (const char* id : {"chu-vandermonde", "squared-harmonic", "alternating", "harmonic-rearrangement", "hockey-stick", "binomial-square", "antidifference", "antidifference-step"}) tallies.push_back(IdentityTally{id, 0, 0, std::nullopt});
  auto record = [&](IdentityResult r) {
    for (IdentityTally& t : tallies) {
      if (t.id != r.id) continue;
      ++t.checked;
      if (!r.pass) {
        if (t.failed++ == 0) t.first_failure = std::move(r);
      }
      return;
    }
  };
  const long xs = env.max_abs_x;
  for (long n = 0; n <= env.max_n; ++n) {
    for (long x = -xs; x <= xs; ++x) {
      for (long y = -xs; y <= xs; ++y) record(check_chu_vandermonde(n, x, y));
    }
    record(check_squared_harmonic(n));
    record(check_alternating(n));
    if (n >= 2) record(check_harmonic_rearrangement(n));
    for (long m = 0; m <= env.max_m; ++m) {
      for (long x = -xs; x <= xs; ++x) record(check_hockey(n, m, x));
    }
    // Degree 2n+1 in x: at least 2n+2 points, extending past max_abs_x if needed.
    const long top = std::max(xs, 2 * n + 1 - xs);
    for (long x = -xs; x <= top; ++x) {
      record(check_square_identity(n, x));
      record(check_antidifference(n, x));
      record(check_antidifference_step(n, x));
    }
  }
  return tallies;
}

}  // namespace congforge
