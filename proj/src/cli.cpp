#include "wcb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "wcb/error.hpp"
#include "wcb/verify.hpp"

namespace wcb {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;

struct BipartitionArgs {
  std::string l1;
  std::string l2;

  Bipartition parse() const { return {Partition::parse(l1), Partition::parse(l2)}; }
};

void add_bipartition_options(CLI::App* cmd, BipartitionArgs& args) {
  cmd->add_option("--l1", args.l1, "first component, e.g. \"2,1\" (empty for ∅)");
  cmd->add_option("--l2", args.l2, "second component");
}

Charge resolve_charge(const std::optional<int>& s1, const std::optional<int>& s2, std::optional<int> e) {
  if (s2) return {s1.value_or(0), *s2};
  if (e && *e % 2 == 0 && !s1) return {0, *e / 2};
  throw Error(ErrorKind::parse, "--s2 is required unless e is even (default charge (0, e/2))");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wall-crossing combinatorics of charged bipartitions", "wcb"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  int jobs = 1;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--jobs", jobs, "worker threads for verify")->check(CLI::PositiveNumber);

  BipartitionArgs bip;
  std::optional<int> s1;
  std::optional<int> s2;
  std::optional<int> e;

  auto* tableau_cmd = app.add_subcommand("tableau", "two-row tableau of a charged bipartition");
  add_bipartition_options(tableau_cmd, bip);
  tableau_cmd->add_option("--s1", s1)->required();
  tableau_cmd->add_option("--s2", s2)->required();

  auto* wallcross_cmd = app.add_subcommand("wallcross", "one swap/sort crossing with its trace");
  add_bipartition_options(wallcross_cmd, bip);
  wallcross_cmd->add_option("--s1", s1)->required();
  wallcross_cmd->add_option("--s2", s2)->required();

  bool trace = false;
  auto* theta_cmd = app.add_subcommand("theta", "iterated wall crossing Θ_{e,s}");
  add_bipartition_options(theta_cmd, bip);
  theta_cmd->add_option("--e", e)->required();
  theta_cmd->add_option("--s1", s1);
  theta_cmd->add_option("--s2", s2, "defaults to e/2 with s1 = 0");
  theta_cmd->add_flag("--trace", trace, "emit the full JSON trajectory");

  bool type_d = false;
  int r = -1;
  auto* certify_cmd = app.add_subcommand("certify", "infinite-dimensionality certificate");
  add_bipartition_options(certify_cmd, bip);
  certify_cmd->add_option("--e", e)->required();
  certify_cmd->add_option("--s1", s1);
  certify_cmd->add_option("--s2", s2, "type B charge; defaults to (0, e/2)");
  certify_cmd->add_option("--r", r, "c1 = r/e numerator (negative, coprime to e); metadata only");
  certify_cmd->add_flag("--type-d", type_d, "certify L_c(λ±) for symmetric λ");

  VerifyOptions vopts;
  std::string output_path;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive check of λ²₁ invariance under Θ");
  verify_cmd->add_option("--max-n", vopts.max_n, "largest (even) size")->check(CLI::Range(2, 40));
  verify_cmd->add_flag("--audit-statements", vopts.audit_statements, "check the proof statements on every step");
  verify_cmd->add_flag("--full-e", vopts.full_e, "add one trivial e per size");
  verify_cmd->add_option("--time-limit", vopts.time_limit_seconds, "seconds; partial report when exceeded");
  verify_cmd->add_option("--output", output_path, "also write the JSON report to this file");

  int enum_n = 0;
  bool symmetric_only = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list bipartitions of n");
  enumerate_cmd->add_option("--n", enum_n)->required()->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_flag("--symmetric", symmetric_only);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*tableau_cmd) {
      const auto t = build_tableau({bip.parse(), {*s1, *s2}});
      if (as_json)
        out << to_json(t).dump() << "\n";
      else
        out << to_compact_string(t) << "\n" << render(t);
      return kExitOk;
    }

    if (*wallcross_cmd) {
      const ChargedBipartition cb{bip.parse(), {*s1, *s2}};
      const auto before = build_tableau(cb);
      const auto crossing = wall_cross(before);
      const auto image = to_charged_bipartition(crossing.after).bipartition;
      if (as_json) {
        const ThetaStep step{0, cb.charge, before, crossing.trace, crossing.after};
        const StepAudit audit{evaluate_step(before, crossing.trace, crossing.after), std::nullopt, std::nullopt};
        auto j = to_json(step, &audit);
        j["result"] = to_json(image);
        out << j.dump() << "\n";
      } else {
        const auto& tr = crossing.trace;
        out << "before: " << to_compact_string(before) << "\n";
        out << "after:  " << to_compact_string(crossing.after) << "\n";
        out << "pairs:";
        for (auto [j, i] : tr.pairs) out << " " << j << "->" << i;
        out << "\nholes:";
        for (int h : tr.hole_indices) out << " " << h;
        out << "\ncycles:";
        for (int c : tr.cycle_indices) out << " " << c;
        out << "\ndisplacements:";
        for (int d : tr.displacements) out << " " << d;
        out << "\nresult: " << to_string(image) << "\n";
      }
      return kExitOk;
    }

    if (*theta_cmd) {
      const auto b = bip.parse();
      const Charge s = resolve_charge(s1, s2, e);
      if (trace) {
        const auto traj = theta_trajectory(b, *e, s);
        const bool theorem_case = is_symmetric(b) && *e % 2 == 0 && s == Charge{0, *e / 2};
        const auto audit = audit_trajectory(traj, theorem_case);
        out << to_json(traj, &audit).dump(as_json ? -1 : 2) << "\n";
        return kExitOk;
      }
      const auto image = theta(b, *e, s);
      if (as_json) {
        json j;
        j["input"] = to_json(b);
        j["e"] = *e;
        j["charge"] = to_json(s);
        j["result"] = to_json(image);
        out << j.dump() << "\n";
      } else {
        out << to_string(image) << "\n";
      }
      return kExitOk;
    }

    if (*certify_cmd) {
      const auto b = bip.parse();
      const auto cert = type_d ? certify_infinite_type_D(b, *e, r)
                               : certify_infinite_type_B(b, *e, resolve_charge(s1, s2, e), r);
      out << to_json(cert).dump(as_json ? -1 : 2) << "\n";
      return kExitOk;
    }

    if (*verify_cmd) {
      vopts.jobs = jobs;
      const auto report = run_verification(vopts);
      const auto j = to_json(report);
      if (!output_path.empty()) {
        std::ofstream file(output_path);
        if (!file) throw Error(ErrorKind::parse, "cannot open " + output_path);
        file << j.dump(2) << "\n";
      }
      if (as_json)
        out << j.dump(2) << "\n";
      else
        out << to_text(report);
      if (report.incomplete) return kExitIncomplete;
      return report.ok() ? kExitOk : kExitCheckFailed;
    }

    if (*enumerate_cmd) {
      const auto list = symmetric_only ? enumerate_symmetric_bipartitions(enum_n) : enumerate_bipartitions(enum_n);
      if (as_json) {
        json j = json::array();
        for (const auto& b : list) j.push_back(to_json(b));
        out << j.dump() << "\n";
      } else {
        for (const auto& b : list) out << to_string(b) << "\n";
      }
      return kExitOk;
    }
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    switch (ex.kind()) {
      case ErrorKind::theorem_contradiction:
      case ErrorKind::malformed_result:
        return kExitCheckFailed;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace wcb
