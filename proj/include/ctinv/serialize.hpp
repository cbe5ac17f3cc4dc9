#pragma once

// File formats.
//
// Potential table CSV, header "x,q,singular_flag": one row per grid point,
// doubles with 17 significant digits, q = "nan" where no value exists,
// singular_flag 0/1.
//
// Wronskian scan CSV, header "x,W".
//
// JSON documents carry "schema" (name/version), "tool_version" and, where
// produced by the CLI, a "config" echo.

#include <ostream>
#include <string>

#include <json.hpp>

#include "ctinv/oneterm.hpp"
#include "ctinv/verify.hpp"
#include "ctinv/wronskian.hpp"

namespace ctinv::io {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kTableSchema = "ctinv.potential_table/1";
inline constexpr const char* kScanSchema = "ctinv.wronskian_scan/1";
inline constexpr const char* kPhaseSchema = "ctinv.phase_shift/1";

/// 17 significant digits, "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double value);

nlohmann::json branch_json(const BranchParams& branch);

void write_table_csv(std::ostream& out, const PotentialTable& table);
/// Branch metadata and singular points.
nlohmann::json table_metadata_json(const PotentialTable& table);
/// Metadata plus the samples as parallel arrays x, q, singular_flag.
nlohmann::json table_json(const PotentialTable& table);

void write_profile_csv(std::ostream& out, const WronskianProfile& profile);
/// Roots with brackets, asymptotic data, tangency warnings; no samples.
nlohmann::json profile_json(const WronskianProfile& profile);

nlohmann::json phase_shift_json(const PhaseShiftResult& result);

}  // namespace ctinv::io
