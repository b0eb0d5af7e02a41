#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "levi_slope/group_spec.hpp"
#include "levi_slope/report.hpp"
#include "levi_slope/verify.hpp"

using namespace levi_slope;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCap = 3;

struct Common {
  std::string format = "json";
  std::uint64_t orbit_cap = 0;
  std::uint64_t weyl_cap = kDefaultWeylCap;
};

void add_caps(CLI::App* cmd, Common& c, std::uint64_t orbit_default) {
  c.orbit_cap = orbit_default;
  cmd->add_option("--orbit-cap", c.orbit_cap, "Largest root-set orbit explored")->capture_default_str();
  cmd->add_option("--weyl-cap", c.weyl_cap, "Largest group enumerated")->capture_default_str();
  cmd->add_option("--format", c.format, "json, md or latex")->capture_default_str();
}

std::string verify_markdown(const VerifyReport& r) {
  std::string out = "| check | cases | result |\n|---|---|---|\n";
  for (const auto& c : r.checks)
    out += "| " + c.name + " | " + std::to_string(c.cases) + " | " + (c.passed ? "pass" : "FAIL") + " |\n";
  for (const auto& c : r.checks)
    for (const auto& f : c.failures) out += "\n- " + c.name + ": " + f;
  return out + (r.passed() ? "" : "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal admissible parabolics, relative Weyl groups and stability for reductive root data"};
  app.require_subcommand(1);

  GroupRequest group;
  std::string isogeny = "adjoint";
  std::optional<std::string> degree_lift_csv, degree_csv;
  bool timing = false;
  Common analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one (group, degree) pair");
  analyze_cmd->add_option("--gl", group.gl, "GL_N");
  analyze_cmd->add_option("--simple", group.simple, "Simple type such as E7");
  analyze_cmd->add_option("--isogeny", isogeny, "adjoint or simply_connected")->capture_default_str();
  analyze_cmd->add_option("--product", group.product, "Comma-separated factors, e.g. gl2,B3:sc");
  analyze_cmd->add_option("--datum-json", group.datum_json, "Root datum JSON file");
  auto* lift_opt = analyze_cmd->add_option("--degree-lift", degree_lift_csv, "Cocharacter c1,...,cn");
  analyze_cmd->add_option("--degree", degree_csv, "Degree k (or a,b) in the documented generators")
      ->excludes(lift_opt);
  analyze_cmd->add_flag("--timing", timing, "Include wall-clock time in the report");
  add_caps(analyze_cmd, analyze_opts, kDefaultOrbitCap);

  TableOptions table_opts;
  Common table_common;
  auto* table_cmd = app.add_subcommand("table", "Levi subgroups and relative Weyl groups by family");
  table_cmd->add_option("--max-rank", table_opts.max_rank, "Largest number of simple roots")
      ->capture_default_str();
  table_cmd->add_option("--families", table_opts.families, "Subset of ABCDE")->capture_default_str();
  table_cmd->add_option("--jobs", table_opts.jobs, "Worker threads (0 = auto)");
  add_caps(table_cmd, table_common, kTableOrbitCap);

  VerifyOptions verify_opts;
  Common verify_common;
  bool no_table = false;
  std::optional<std::string> fault;
  auto* verify_cmd = app.add_subcommand("verify", "Run the conformance sweeps");
  verify_cmd->add_option("--max-rank", verify_opts.max_rank, "Largest number of simple roots")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_opts.seed, "Seed of the randomized suites")->capture_default_str();
  verify_cmd->add_option("--jobs", verify_opts.jobs, "Worker threads (0 = auto)");
  verify_cmd->add_flag("--no-table", no_table, "Skip the table rows");
  verify_cmd->add_flag("--timing", verify_opts.timing, "Include per-check time");
  verify_cmd->add_option("--inject-fault", fault)->group("");
  add_caps(verify_cmd, verify_common, kTableOrbitCap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*analyze_cmd) {
      const Format f = parse_format(analyze_opts.format);
      auto iso = parse_isogeny(isogeny);
      if (!iso) throw InvalidInput("--isogeny must be adjoint or simply_connected");
      group.isogeny = *iso;
      const RootDatum d = resolve_group(group);
      IntVector lift;
      if (degree_lift_csv)
        lift = to_int_vector(parse_int_list(*degree_lift_csv));
      else if (degree_csv)
        lift = degree_lift(d, parse_int_list(*degree_csv));
      else
        throw InvalidInput("give --degree-lift or --degree");
      AnalysisOptions o;
      o.orbit_cap = analyze_opts.orbit_cap;
      o.weyl_cap = analyze_opts.weyl_cap;
      o.timing = timing;
      std::cout << render_report(analysis_report(d, lift, o), f);
      return kExitOk;
    }
    if (*table_cmd) {
      const Format f = parse_format(table_common.format);
      table_opts.orbit_cap = table_common.orbit_cap;
      table_opts.weyl_cap = table_common.weyl_cap;
      std::cout << render_table(build_table(table_opts), f);
      return kExitOk;
    }
    const Format f = parse_format(verify_common.format);
    if (f == Format::latex) throw InvalidInput("verify prints json or md");
    VerifyReport rep;
    if (fault) {
      rep.checks.push_back(check_injected_fault(*fault));
    } else {
      verify_opts.orbit_cap = verify_common.orbit_cap;
      verify_opts.weyl_cap = verify_common.weyl_cap;
      verify_opts.include_table = !no_table;
      rep = run_verify(verify_opts);
    }
    std::cout << (f == Format::json ? dump_json(verify_json(rep, verify_opts.timing)) : verify_markdown(rep));
    for (const auto& c : rep.checks)
      for (const auto& msg : c.failures) std::cerr << "FAIL " << c.name << ": " << msg << "\n";
    return rep.passed() ? kExitOk : kExitVerification;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kExitVerification;
  }
}
