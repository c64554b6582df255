#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "congforge/congruences.hpp"

namespace congforge {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultEulerBound = 20000;

struct RunConfig {
  std::uint64_t lo = 5;
  std::uint64_t hi = 1000;
  std::vector<std::string> ids;  // empty means every registry entry
  int work = kDefaultWork;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t euler_bound = kDefaultEulerBound;
};

struct IdSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  bool conjecture = false;
  std::vector<const Verdict*> failures;
};

struct Report {
  RunConfig config;
  std::vector<std::string> ids;  // resolved, registry order
  std::vector<Verdict> results;  // sorted by (p, registry order of id)

  std::map<std::string, IdSummary> summary() const;
  std::size_t failures() const;
};

// Validates the configuration: Usage errors for bad ranges, jobs or ids;
// InsufficientPrecision when work is below an entry's requirement.
std::vector<std::string> resolve_ids(const RunConfig& config);

// Evaluates the selected entries at every prime in [lo, hi]. Primes are
// handed to `jobs` workers; the report does not depend on `jobs`.
Report run_batch(const RunConfig& config);

enum class ReportFormat { Json, Csv };

void emit_report(const Report& report, ReportFormat format, std::ostream& out);
// Writes to `path`, or to stdout when path is "-".
void emit_report(const Report& report, ReportFormat format, const std::string& path);

std::string csv_escape(const std::string& field);

}  // namespace congforge
