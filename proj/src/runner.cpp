#include "congforge/runner.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "congforge/error.hpp"

namespace congforge {

namespace {

std::size_t registry_position(const std::string& id) {
  const auto& reg = registry();
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (reg[i].id == id) return i;
  }
  return reg.size();
}

std::vector<Verdict> run_prime(std::uint64_t p, const RunConfig& config, const std::vector<const CongruenceSpec*>& specs) {
  const bool euler_needed = std::any_of(specs.begin(), specs.end(), [](const CongruenceSpec* s) { return s->needs_euler; });
  const PrimeCtx ctx(p, config.work);
  SpecialOptions options;
  options.with_euler = euler_needed && p <= config.euler_bound;
  const SpecialValues specials = SpecialValues::compute(ctx, options);
  Evaluator ev(ctx, specials, c38_samples(p, config.seed));
  std::vector<Verdict> out;
  out.reserve(specs.size());
  for (const CongruenceSpec* spec : specs) out.push_back(ev.evaluate(*spec));
  return out;
}

}  // namespace

std::vector<std::string> resolve_ids(const RunConfig& config) {
  if (config.lo < 5 || config.hi < config.lo) {
    throw Error(ErrorKind::Usage, "prime range must satisfy 5 <= lo <= hi");
  }
  if (config.jobs < 1) throw Error(ErrorKind::Usage, "jobs must be at least 1");
  if (config.work < 1 || config.work > kMaxPrecision) {
    throw Error(ErrorKind::Usage, "work must lie in 1.." + std::to_string(kMaxPrecision));
  }
  std::vector<std::string> ids;
  if (config.ids.empty()) {
    for (const CongruenceSpec& s : registry()) ids.push_back(s.id);
  } else {
    for (const std::string& id : config.ids) {
      find_spec(id);
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end(),
              [](const std::string& a, const std::string& b) { return registry_position(a) < registry_position(b); });
  }
  for (const std::string& id : ids) {
    const CongruenceSpec& s = find_spec(id);
    if (config.work < s.required_precision) {
      throw Error(ErrorKind::InsufficientPrecision,
                  id + " requires --work >= " + std::to_string(s.required_precision));
    }
  }
  // Every modulus p^work must fit below 2^127 at the top of the range.
  prime_power(std::max<std::uint64_t>(config.hi, 5), config.work);
  return ids;
}

Report run_batch(const RunConfig& config) {
  Report report;
  report.config = config;
  report.ids = resolve_ids(config);
  std::vector<const CongruenceSpec*> specs;
  for (const std::string& id : report.ids) specs.push_back(&find_spec(id));

  const std::vector<std::uint64_t> primes = sieve_primes(config.lo - 1, config.hi);
  std::vector<std::vector<Verdict>> per_prime(primes.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= primes.size()) return;
      try {
        per_prime[i] = run_prime(primes[i], config, specs);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(primes.size());
        return;
      }
    }
  };
  const unsigned jobs = std::min<unsigned>(config.jobs, std::max<std::size_t>(primes.size(), 1));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);

  // Primes ascend and each prime's verdicts follow registry order.
  for (auto& verdicts : per_prime) {
    for (Verdict& v : verdicts) report.results.push_back(std::move(v));
  }
  return report;
}

std::map<std::string, IdSummary> Report::summary() const {
  std::map<std::string, IdSummary> out;
  for (const std::string& id : ids) out[id].conjecture = find_spec(id).conjecture;
  for (const Verdict& v : results) {
    IdSummary& s = out[v.id];
    switch (v.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail:
        ++s.fail;
        s.failures.push_back(&v);
        break;
      case Status::Skipped: ++s.skipped; break;
    }
  }
  return out;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const Verdict& v) { return v.status == Status::Fail; }));
}

namespace {

nlohmann::ordered_json verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["id"] = v.id;
  j["p"] = v.p;
  j["mod_exp"] = v.mod_exp;
  j["status"] = std::string(to_string(v.status));
  if (v.status == Status::Skipped) {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    j["pass"] = nullptr;
    j["diff_valuation"] = nullptr;
  } else {
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    j["pass"] = v.pass();
    j["diff_valuation"] = v.diff.str();
  }
  if (v.witness_index) j["witness_index"] = *v.witness_index;
  return j;
}

}  // namespace

void emit_report(const Report& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Csv) {
    out << "id,p,mod_exp,lhs,rhs,pass,diff_valuation,witness_index,status\r\n";
    for (const Verdict& v : report.results) {
      const bool skipped = v.status == Status::Skipped;
      out << csv_escape(v.id) << ',' << v.p << ',' << v.mod_exp << ',' << csv_escape(v.lhs) << ','
          << csv_escape(v.rhs) << ',' << (skipped ? "" : (v.pass() ? "true" : "false")) << ','
          << csv_escape(skipped ? "" : v.diff.str()) << ','
          << (v.witness_index ? std::to_string(*v.witness_index) : "") << ',' << to_string(v.status) << "\r\n";
    }
    return;
  }
  nlohmann::ordered_json doc;
  const RunConfig& c = report.config;
  doc["meta"] = {{"tool", "congforge"},
                 {"version", kToolVersion},
                 {"primes", {{"lo", c.lo}, {"hi", c.hi}}},
                 {"ids", report.ids},
                 {"work", c.work},
                 {"seed", c.seed},
                 {"euler_bound", c.euler_bound}};
  doc["results"] = nlohmann::ordered_json::array();
  for (const Verdict& v : report.results) doc["results"].push_back(verdict_json(v));
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [id, s] : report.summary()) {
    nlohmann::ordered_json failing = nlohmann::ordered_json::array();
    for (const Verdict* v : s.failures) {
      nlohmann::ordered_json w = {{"p", v->p}, {"lhs", v->lhs}, {"rhs", v->rhs}, {"diff_valuation", v->diff.str()}};
      if (v->witness_index) w["witness_index"] = *v->witness_index;
      failing.push_back(std::move(w));
    }
    summary[id] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}, {"conjecture", s.conjecture},
                   {"failing", std::move(failing)}};
  }
  doc["summary"] = std::move(summary);
  out << doc.dump(2) << '\n';
}

void emit_report(const Report& report, ReportFormat format, const std::string& path) {
  if (path == "-") {
    emit_report(report, format, std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Io, "cannot open " + path);
  emit_report(report, format, file);
  if (!file) throw Error(ErrorKind::Io, "write failed for " + path);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace congforge
