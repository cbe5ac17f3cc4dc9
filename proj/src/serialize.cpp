#include "ctinv/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace ctinv::io {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

nlohmann::json branch_json(const BranchParams& branch) {
  return {{"l", branch.spec.l},
          {"delta", branch.spec.delta},
          {"n", branch.n},
          {"L", branch.L},
          {"coupling", branch.coupling},
          {"degenerate", branch.degenerate},
          {"nonsingular", branch.degenerate || is_nonsingular_pair({branch.l(), branch.L})}};
}

void write_table_csv(std::ostream& out, const PotentialTable& table) {
  out << "x,q,singular_flag\n";
  for (std::size_t i = 0; i < table.x.size(); ++i) {
    out << format_double(table.x[i]) << ',' << format_double(table.q[i]) << ','
        << (table.singular[i] ? 1 : 0) << '\n';
  }
}

nlohmann::json table_metadata_json(const PotentialTable& table) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : table.singular_points) {
    points.push_back({{"x", p.x}, {"exclusion_radius", p.exclusion_radius}});
  }
  return {{"schema", kTableSchema},
          {"tool_version", kToolVersion},
          {"branch", branch_json(table.branch)},
          {"grid", {{"points", table.x.size()},
                    {"x_min", table.x.empty() ? 0.0 : table.x.front()},
                    {"x_max", table.x.empty() ? 0.0 : table.x.back()}}},
          {"scan_x_max", table.scan_x_max},
          {"singular_points", points}};
}

nlohmann::json table_json(const PotentialTable& table) {
  auto doc = table_metadata_json(table);
  nlohmann::json q = nlohmann::json::array();
  for (const double v : table.q) {
    if (std::isfinite(v)) {
      q.push_back(v);
    } else {
      q.push_back(nullptr);
    }
  }
  std::vector<int> flags(table.singular.begin(), table.singular.end());
  doc["samples"] = {{"x", table.x}, {"q", q}, {"singular_flag", flags}};
  return doc;
}

void write_profile_csv(std::ostream& out, const WronskianProfile& profile) {
  out << "x,W\n";
  for (const auto& s : profile.samples) out << format_double(s.x) << ',' << format_double(s.w) << '\n';
}

nlohmann::json profile_json(const WronskianProfile& profile) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : profile.roots) {
    roots.push_back({{"x", r.x}, {"bracket", {r.bracket_lo, r.bracket_hi}}, {"polished", r.polished}});
  }
  const auto origin = origin_coefficient(profile.pair);
  return {{"schema", kScanSchema},
          {"tool_version", kToolVersion},
          {"l", profile.pair.l},
          {"L", profile.pair.L},
          {"x_max", profile.x_max},
          {"step", profile.step},
          {"samples", profile.samples.size()},
          {"roots", roots},
          {"origin", {{"sign", profile.sign_origin},
                      {"coefficient", origin.coefficient},
                      {"exponent", origin.exponent}}},
          {"limit_infinity", profile.limit_infinity},
          {"nonsingular_pair", is_nonsingular_pair(profile.pair)},
          {"tangency_warnings", profile.tangency_warnings}};
}

nlohmann::json phase_shift_json(const PhaseShiftResult& result) {
  return {{"delta_mod_pi", result.delta_mod_pi},
          {"raw_delta", result.raw_delta},
          {"match_radius", result.match_radius},
          {"convergence", result.convergence},
          {"x_start", result.x_start},
          {"step", result.step},
          {"grid_source", result.grid_source}};
}

}  // namespace ctinv::io
