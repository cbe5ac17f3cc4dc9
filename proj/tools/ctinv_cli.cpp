// ctinv: command-line front end for the one-term Cox-Thompson inversion.
//
// Exit codes: 0 success, 1 computational failure or inconsistency,
// 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctinv/errors.hpp"
#include "ctinv/oneterm.hpp"
#include "ctinv/serialize.hpp"
#include "ctinv/verify.hpp"
#include "ctinv/wronskian.hpp"
#include "ctinv/zeros.hpp"

namespace {

using nlohmann::json;
using namespace ctinv;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double l = 0.0;
  double L = 0.0;
  double delta = 0.0;
  std::string branch = "auto";
  double x_min = 0.0;  // 0: x_max / points
  double x_max = 30.0;
  int points = 600;
  double scan_x_max = kDefaultRootScanMax;
  double step = 0.0;  // 0: command default
  std::string output;
  std::string format = "csv";

  // sweeps
  double grid_min = 0.0;
  double grid_max = 5.0;
  double grid_step = 0.25;
  std::optional<double> pair_l;
  std::optional<double> pair_L;
  double nu_min = 0.1;
  double nu_max = 10.0;
  double nu_step = 0.1;
  int count = 20;
  std::string kind = "J";
  double nu = 0.5;
  double tolerance = 5e-3;
};

std::optional<int> parse_branch(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const int n = std::stoi(text, &used);
    if (used == text.size()) return n;
  } catch (const std::exception&) {
  }
  throw UsageError("--branch must be 'auto' or an integer, got '" + text + "'");
}

void require_format(const RunConfig& c) {
  if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json");
}

// Inclusive arithmetic grid, robust to accumulated rounding.
std::vector<double> sweep_values(double lo, double hi, double step) {
  if (!(step > 0.0) || hi < lo) throw UsageError("sweep range needs step > 0 and max >= min");
  std::vector<double> out;
  const auto n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  for (int i = 0; i <= n; ++i) out.push_back(lo + i * step);
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

json config_echo(const std::string& command, const RunConfig& c) {
  json j = {{"command", command}};
  if (command == "invert" || command == "verify-roundtrip") {
    j["l"] = c.l;
    j["delta"] = c.delta;
    j["branch"] = c.branch;
  }
  if (command == "invert") {
    j["x_min"] = c.x_min;
    j["x_max"] = c.x_max;
    j["points"] = c.points;
    j["scan_x_max"] = c.scan_x_max;
    j["format"] = c.format;
  }
  if (command == "verify-roundtrip") {
    j["x_max"] = c.x_max;
    j["step"] = c.step;
    j["tolerance"] = c.tolerance;
  }
  if (command == "scan-wronskian") {
    j["l"] = c.l;
    j["L"] = c.L;
    j["x_max"] = c.x_max;
    j["step"] = c.step;
  }
  return j;
}

int cmd_invert(const RunConfig& c) {
  require_format(c);
  if (c.points < 2) throw UsageError("--points must be >= 2");
  if (!(c.x_max > 0.0)) throw UsageError("--xmax must be positive");
  const double x_min = c.x_min > 0.0 ? c.x_min : c.x_max / c.points;
  if (!(x_min < c.x_max)) throw UsageError("--xmin must be below --xmax");
  const auto n = parse_branch(c.branch);

  const PhaseShiftSpec spec{c.l, c.delta};
  const BranchParams branch = n ? branch_parameter(spec, *n) : select_nonsingular(spec);
  const auto grid = GridSpec{x_min, c.x_max, c.points}.nodes();
  const PotentialTable table = potential_table(branch, grid, c.scan_x_max);

  json meta = io::table_metadata_json(table);
  RunConfig echo = c;
  echo.x_min = x_min;
  meta["config"] = config_echo("invert", echo);
  if (!c.output.empty()) {
    std::ostringstream body;
    if (c.format == "csv") {
      io::write_table_csv(body, table);
    } else {
      json doc = io::table_json(table);
      doc["config"] = meta["config"];
      body << doc.dump(2) << '\n';
    }
    write_file(c.output, body.str());
  }
  std::cout << meta.dump(2) << '\n';
  return kExitOk;
}

int cmd_check_theorem(const RunConfig& c) {
  std::vector<std::pair<double, double>> pairs;
  if (c.pair_l || c.pair_L) {
    if (!c.pair_l || !c.pair_L) throw UsageError("--l and --L must be given together");
    pairs.emplace_back(*c.pair_l, *c.pair_L);
  } else {
    const auto values = sweep_values(c.grid_min, c.grid_max, c.grid_step);
    for (const double l : values) {
      for (const double L : values) {
        if (l != L) pairs.emplace_back(l, L);
      }
    }
  }

  int failures = 0, inconclusive = 0;
  std::printf("%10s %10s %8s %12s %6s %s\n", "l", "L", "|L-l|", "prediction", "roots", "verdict");
  for (const auto& [l, L] : pairs) {
    const PairParams pair = PairParams::create(l, L);
    const bool nonsingular = is_nonsingular_pair(pair);
    const auto profile = find_roots(pair, c.x_max);
    const bool has_roots = !profile.roots.empty();

    std::string verdict;
    if (nonsingular) {
      verdict = has_roots ? "FAIL" : "PASS";
    } else if (has_roots) {
      verdict = "PASS";
    } else {
      verdict = "INCONCLUSIVE";  // a root may lie beyond the cutoff
    }
    // 1 + 4k < l - L < 3 + 4k: positive at the origin, negative at infinity.
    const double phase = std::fmod(std::fmod(l - L - 1.0, 4.0) + 4.0, 4.0);
    if (phase > 0.0 && phase < 2.0) {
      const bool signs_ok = profile.sign_origin > 0 && profile.limit_infinity < 0.0;
      if (!signs_ok) verdict = "FAIL";
    }
    if (verdict == "FAIL") ++failures;
    if (verdict == "INCONCLUSIVE") ++inconclusive;
    std::printf("%10.4f %10.4f %8.4f %12s %6zu %s\n", l, L, std::abs(L - l),
                nonsingular ? "nonsingular" : "singular", profile.roots.size(), verdict.c_str());
  }
  std::printf("pairs=%zu failures=%d inconclusive=%d x_max=%g -> %s\n", pairs.size(), failures,
              inconclusive, c.x_max, failures == 0 ? "PASS" : "FAIL");
  return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_check_proposition(const RunConfig& c) {
  if (c.count < 1) throw UsageError("--count must be >= 1");
  const auto nus = sweep_values(c.nu_min, c.nu_max, c.nu_step);
  if (!(nus.front() > 0.0)) throw UsageError("orders must be positive");
  int failures = 0;
  std::printf("%8s %14s %8s %8s\n", "nu", "min margin", "chains", "verdict");
  for (const double nu : nus) {
    const auto j = bessel_zeros(ZeroKind::J, nu, c.count + 1);
    const auto j_next = bessel_zeros(ZeroKind::J, nu + 1.0, c.count);
    const auto jp = bessel_zeros(ZeroKind::JPrime, nu, c.count + 1);
    const auto y = bessel_zeros(ZeroKind::Y, nu, c.count + 1);
    double min_margin = INFINITY;
    bool chains = true;
    for (int n = 1; n <= c.count; ++n) {
      const auto i = static_cast<std::size_t>(n - 1);
      min_margin = std::min(min_margin, jp[i + 1] - j_next[i]);
      chains = chains && j[i] < j_next[i] && j_next[i] < jp[i + 1] && jp[i + 1] < j[i + 1] &&
               j_next[i] < y[i + 1];
    }
    const bool ok = min_margin > 1e-9 && chains;
    if (!ok) ++failures;
    std::printf("%8.4f %14.6e %8s %8s\n", nu, min_margin, chains ? "ok" : "broken",
                ok ? "PASS" : "FAIL");
  }
  std::printf("orders=%zu n<=%d failures=%d -> %s\n", nus.size(), c.count, failures,
              failures == 0 ? "PASS" : "FAIL");
  return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_scan_wronskian(const RunConfig& c) {
  const double step = c.step > 0.0 ? c.step : kDefaultRootScanStep;
  if (step > kDefaultRootScanStep) throw UsageError("--step must not exceed pi/8");
  if (!(c.x_max > 0.0)) throw UsageError("--xmax must be positive");
  const auto profile = find_roots(PairParams::create(c.l, c.L), c.x_max, step);
  json summary = io::profile_json(profile);
  RunConfig echo = c;
  echo.step = step;
  summary["config"] = config_echo("scan-wronskian", echo);
  if (!c.output.empty()) {
    std::ostringstream body;
    io::write_profile_csv(body, profile);
    write_file(c.output, body.str());
  }
  std::cout << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_zeros(const RunConfig& c) {
  require_format(c);
  ZeroKind kind;
  if (c.kind == "J") {
    kind = ZeroKind::J;
  } else if (c.kind == "Y") {
    kind = ZeroKind::Y;
  } else if (c.kind == "Jprime") {
    kind = ZeroKind::JPrime;
  } else {
    throw UsageError("--kind must be J, Y or Jprime");
  }
  if (c.count < 1) throw UsageError("--count must be >= 1");
  if (!(c.nu > 0.0)) throw UsageError("--nu must be positive");
  const auto zeros = bessel_zeros(kind, c.nu, c.count);
  std::ostringstream body;
  if (c.format == "csv") {
    body << "n,zero\n";
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      body << i + 1 << ',' << io::format_double(zeros[i]) << '\n';
    }
  } else {
    body << json{{"kind", c.kind}, {"nu", c.nu}, {"zeros", zeros}, {"tool_version", io::kToolVersion}}
                .dump(2)
         << '\n';
  }
  if (!c.output.empty()) write_file(c.output, body.str());
  std::cout << body.str();
  return kExitOk;
}

int cmd_verify_roundtrip(const RunConfig& c) {
  const auto n = parse_branch(c.branch);
  const double step = c.step > 0.0 ? c.step : 1e-3;
  if (!(c.x_max > 1.0)) throw UsageError("--xmax must exceed 1");
  const PhaseShiftSpec spec{c.l, c.delta};
  const BranchParams branch = n ? branch_parameter(spec, *n) : select_nonsingular(spec);

  SolverOptions options;
  options.step = step;
  options.x_max = c.x_max;
  // Table on a 0.01 grid from x_start past the last match node.
  const double table_step = 1e-2;
  const auto points = static_cast<int>(std::ceil((c.x_max + 0.1 - options.x_start) / table_step)) + 1;
  const auto grid =
      GridSpec{options.x_start, options.x_start + (points - 1) * table_step, points}.nodes();
  const PotentialTable table = potential_table(branch, grid, std::max(c.x_max, kDefaultRootScanMax));

  json report = {{"schema", io::kPhaseSchema}, {"tool_version", io::kToolVersion}};
  RunConfig echo = c;
  echo.step = step;
  report["config"] = config_echo("verify-roundtrip", echo);
  report["branch"] = io::branch_json(branch);
  bool ok = false;
  if (!table.singular_points.empty()) {
    report["error"] = "branch is singular inside the integration range";
  } else {
    const PhaseShiftResult result = solve_phase_shift(table, c.l, options);
    const double deviation = std::abs(std::remainder(result.delta_mod_pi - c.delta, std::numbers::pi));
    ok = deviation <= c.tolerance;
    report["result"] = io::phase_shift_json(result);
    report["deviation"] = deviation;
  }
  report["pass"] = ok;
  const std::string body = report.dump(2) + "\n";
  if (!c.output.empty()) write_file(c.output, body);
  std::cout << body;
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-term Cox-Thompson inverse scattering toolkit"};
  app.require_subcommand(1);
  RunConfig c;

  auto* invert = app.add_subcommand("invert", "Construct the potential for one phase shift");
  invert->add_option("--l", c.l, "Angular momentum l > -1/2")->required();
  invert->add_option("--delta", c.delta, "Phase shift in radians")->required();
  invert->add_option("--branch", c.branch, "Branch index n or 'auto' (nonsingular)");
  invert->add_option("--xmin", c.x_min, "First grid point (default xmax/points)");
  invert->add_option("--xmax", c.x_max, "Last grid point");
  invert->add_option("--points", c.points, "Number of grid points");
  invert->add_option("--scan-xmax", c.scan_x_max, "Upper end of the singularity scan");
  invert->add_option("--output,-o", c.output, "Write the table to this file");
  invert->add_option("--format", c.format, "Table format: csv or json");

  auto* theorem = app.add_subcommand("check-theorem", "Sweep the Wronskian nonsingularity theorem");
  theorem->add_option("--min", c.grid_min, "Smallest l and L");
  theorem->add_option("--max", c.grid_max, "Largest l and L");
  theorem->add_option("--step", c.grid_step, "Grid step for l and L");
  theorem->add_option("--l", c.pair_l, "Check a single pair (with --L)");
  theorem->add_option("--L", c.pair_L, "Check a single pair (with --l)");
  theorem->add_option("--xmax", c.x_max, "Root scan cutoff")->default_val(kDefaultRootScanMax);

  auto* proposition = app.add_subcommand("check-proposition", "Sweep j_{nu+1,n} < j'_{nu,n+1}");
  proposition->add_option("--nu-min", c.nu_min, "Smallest order");
  proposition->add_option("--nu-max", c.nu_max, "Largest order");
  proposition->add_option("--nu-step", c.nu_step, "Order step");
  proposition->add_option("--count", c.count, "Largest zero index n");

  auto* scan = app.add_subcommand("scan-wronskian", "Sample W_{Ll} and locate its roots");
  scan->add_option("--l", c.l, "l")->required();
  scan->add_option("--L", c.L, "L")->required();
  scan->add_option("--xmax", c.x_max, "Scan cutoff")->default_val(kDefaultRootScanMax);
  scan->add_option("--step", c.step, "Sampling step (<= pi/8)");
  scan->add_option("--output,-o", c.output, "Write the (x, W) CSV to this file");

  auto* zeros = app.add_subcommand("zeros", "Tabulate Bessel function zeros");
  zeros->add_option("--kind", c.kind, "J, Y or Jprime");
  zeros->add_option("--nu", c.nu, "Order > 0");
  zeros->add_option("--count", c.count, "Number of zeros")->default_val(5);
  zeros->add_option("--format", c.format, "csv or json");
  zeros->add_option("--output,-o", c.output, "Also write the table to this file");

  auto* roundtrip = app.add_subcommand("verify-roundtrip", "Invert, then forward-solve the phase shift");
  roundtrip->add_option("--l", c.l, "Angular momentum l > -1/2")->required();
  roundtrip->add_option("--delta", c.delta, "Phase shift in radians")->required();
  roundtrip->add_option("--branch", c.branch, "Branch index n or 'auto'");
  roundtrip->add_option("--xmax", c.x_max, "Match radius")->default_val(100.0);
  roundtrip->add_option("--step", c.step, "Integration step (default 1e-3)");
  roundtrip->add_option("--tolerance", c.tolerance, "Allowed deviation of the recovered delta");
  roundtrip->add_option("--output,-o", c.output, "Also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (invert->parsed()) return cmd_invert(c);
    if (theorem->parsed()) return cmd_check_theorem(c);
    if (proposition->parsed()) return cmd_check_proposition(c);
    if (scan->parsed()) return cmd_scan_wronskian(c);
    if (zeros->parsed()) return cmd_zeros(c);
    if (roundtrip->parsed()) return cmd_verify_roundtrip(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const NoValidBranchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
