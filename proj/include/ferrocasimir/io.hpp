#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ferrocasimir/analysis.hpp"
#include "ferrocasimir/materials.hpp"

namespace ferrocasimir::io {

inline constexpr std::string_view kEngineVersion = "0.1.0";

/// Shortest decimal string that parses back to exactly the same double
/// (std::to_chars general form).  All emitted artifacts use this so that
/// repeated runs are byte-identical.
std::string format_double(double value);

/// FNV-1a 64-bit hash; fingerprints the material database text in artifact
/// metadata so results can be traced to the data that produced them.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

/// Reads a whole file; throws ConfigError if it cannot be opened.
std::string read_file(const std::string& path);

/// Writes content to a temporary sibling file and renames it into place, so
/// a failed run never leaves a partial artifact behind.
void write_file_atomic(const std::string& path, std::string_view content);

inline constexpr std::string_view kCurveCsvHeader =
    "ell_nm,p_te_n0_pa,p_tm_n0_pa,p_te_npos_pa,p_tm_npos_pa,p_total_pa,"
    "p_normalized";
inline constexpr std::string_view kEquilibriaCsvHeader =
    "ell_star_nm,kind,bracket_lo_nm,bracket_hi_nm,residual_pa";

/// CSV table of a pressure curve; with_diagnostics appends the
/// `n_used,quad_evals` columns (the `breakdown` command's extra columns).
std::string curve_csv(const std::vector<CurvePoint>& curve,
                      bool with_diagnostics);

std::string equilibria_csv(const std::vector<Equilibrium>& roots);

/// Sweep CSV: the per-value curves stacked with `axis,value` prefix columns.
std::string sweep_csv(std::string_view axis_name,
                      const std::vector<SweepEntry>& entries,
                      bool with_diagnostics);

/// Dielectric-spectrum CSV: `xi_ev,<column per requested name>`.
std::string materials_csv(const std::vector<double>& xi_grid,
                          const std::vector<std::string>& columns,
                          const std::vector<std::vector<double>>& values);

/// JSON mirrors of the CSV rows (same keys as the CSV headers).  The CLI
/// wraps these in a document with a `meta` block.
nlohmann::ordered_json curve_rows_json(const std::vector<CurvePoint>& curve,
                                       bool with_diagnostics);
nlohmann::ordered_json equilibria_rows_json(
    const std::vector<Equilibrium>& roots);
nlohmann::ordered_json sweep_entries_json(std::string_view axis_name,
                                          const std::vector<SweepEntry>& entries,
                                          bool with_diagnostics);
nlohmann::ordered_json materials_rows_json(
    const std::vector<double>& xi_grid,
    const std::vector<std::string>& columns,
    const std::vector<std::vector<double>>& values);

const char* to_string(EquilibriumKind kind);
const char* to_string(SweepAxis axis);

}  // namespace ferrocasimir::io
