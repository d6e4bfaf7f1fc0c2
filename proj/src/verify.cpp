#include "wcb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <sstream>
#include <thread>

#include "wcb/error.hpp"

namespace wcb {

std::vector<std::pair<Bipartition, int>> verification_grid(const VerifyOptions& options) {
  std::vector<std::pair<Bipartition, int>> grid;
  for (int n = 2; n <= options.max_n; n += 2) {
    const int max_half = options.full_e ? n + 1 : n;
    for (const auto& b : enumerate_symmetric_bipartitions(n))
      for (int half = 1; half <= max_half; ++half) grid.emplace_back(b, 2 * half);
  }
  return grid;
}

CaseResult verify_case(const Bipartition& b, int e, bool audit_statements) {
  CaseResult result;
  result.start = b;
  result.e = e;
  const auto traj = theta_trajectory(b, e, {0, e / 2});
  result.image = traj.result;
  result.first_part_preserved = traj.result.second.part_at(1) == b.second.part_at(1);
  if (!result.first_part_preserved)
    result.failures.push_back("first part of second component changed from " +
                              std::to_string(b.second.part_at(1)) + " to " +
                              std::to_string(traj.result.second.part_at(1)));

  if (theta(b, e, {0, e / 2}) != traj.result)
    result.failures.push_back("padded trajectory and canonical theta disagree");

  std::optional<TrajectoryAudit> audit;
  if (audit_statements) {
    audit = audit_trajectory(traj, true);
    result.tallies = audit->tallies;
    result.failures.insert(result.failures.end(), audit->violations.begin(), audit->violations.end());
  } else {
    for (const auto& step : traj.steps) {
      auto broken = conservation_violations(step.before, step.trace, step.after);
      result.tallies["conservation"].record(broken.empty());
      for (auto& msg : broken) result.failures.push_back(msg + " at k=" + std::to_string(step.k));
    }
  }

  if (!result.passed()) result.trajectory = to_json(traj, audit ? &*audit : nullptr);
  return result;
}

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.max_n < 2) throw Error(ErrorKind::domain, "--max-n must be at least 2");
  const auto start = std::chrono::steady_clock::now();
  const auto grid = verification_grid(options);

  VerificationReport report;
  report.options = options;
  report.planned_cases = static_cast<int>(grid.size());
  for (int n = 2; n <= options.max_n; n += 2)
    report.base_bipartitions += static_cast<int>(enumerate_symmetric_bipartitions(n).size());

  std::vector<std::optional<CaseResult>> results(grid.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_time{false};

  auto worker = [&] {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= grid.size()) return;
      if (options.time_limit_seconds > 0) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (elapsed.count() > options.time_limit_seconds) {
          out_of_time = true;
          return;
        }
      }
      CaseResult r;
      try {
        r = verify_case(grid[idx].first, grid[idx].second, options.audit_statements);
      } catch (const Error& err) {
        r.start = grid[idx].first;
        r.e = grid[idx].second;
        r.failures.push_back(err.what());
      }
      results[idx] = std::move(r);
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }

  // Aggregate in grid order so the report does not depend on scheduling.
  for (auto& r : results) {
    if (!r) {
      report.incomplete = true;
      continue;
    }
    ++report.case_count;
    merge(report.audit, r->tallies);
    if (r->passed())
      ++report.pass_count;
    else
      report.failures.push_back(std::move(*r));
  }
  report.incomplete = report.incomplete || out_of_time;

  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  report.duration_seconds = elapsed.count();
  return report;
}

json to_json(const VerificationReport& report) {
  json out;
  json grid;
  grid["max_n"] = report.options.max_n;
  grid["n"] = "even n in [2, max_n]";
  grid["e"] = report.options.full_e ? "even e with e/2 <= n + 1" : "even e with e/2 <= n";
  grid["charge"] = "(0, e/2)";
  grid["audit_statements"] = report.options.audit_statements;
  out["grid"] = grid;
  out["base_bipartitions"] = report.base_bipartitions;
  out["planned_cases"] = report.planned_cases;
  out["case_count"] = report.case_count;
  out["pass_count"] = report.pass_count;
  out["failure_count"] = report.failure_count();
  json failures = json::array();
  for (const auto& f : report.failures) {
    json entry;
    entry["bipartition"] = to_json(f.start);
    entry["e"] = f.e;
    entry["image"] = to_json(f.image);
    entry["reasons"] = f.failures;
    entry["trajectory"] = f.trajectory;
    failures.push_back(entry);
  }
  out["failures"] = failures;
  out["audit"] = to_json(report.audit);
  out["incomplete"] = report.incomplete;
  out["duration_seconds"] = report.duration_seconds;
  return out;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "grid: even n <= " << report.options.max_n << ", symmetric bipartitions, even e with e/2 <= n"
      << (report.options.full_e ? " + 1" : "") << ", charge (0, e/2)\n";
  out << "base bipartitions: " << report.base_bipartitions << "\n";
  out << "cases: " << report.case_count << " of " << report.planned_cases << " planned\n";
  out << "passed: " << report.pass_count << "\n";
  out << "failed: " << report.failure_count() << "\n";
  for (const auto& f : report.failures) {
    out << "FAIL " << to_string(f.start) << " e=" << f.e << ": ";
    for (std::size_t i = 0; i < f.failures.size(); ++i) out << (i ? "; " : "") << f.failures[i];
    out << "\n  trajectory: " << f.trajectory.dump() << "\n";
  }
  if (!report.audit.empty()) {
    out << "audit:\n";
    for (const auto& [key, t] : report.audit) out << "  " << key << ": " << t.passed << "/" << t.checked << "\n";
  }
  if (report.incomplete) out << "INCOMPLETE: time limit reached\n";
  out << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  out << "duration: " << report.duration_seconds << " s\n";
  return out.str();
}

}  // namespace wcb
