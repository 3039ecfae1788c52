#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ferrocasimir/analysis.hpp"
#include "ferrocasimir/engine.hpp"
#include "ferrocasimir/materials.hpp"
#include "ferrocasimir/stack.hpp"

namespace ferrocasimir {

enum class GridSpacing { LIN, LOG };

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  GridSpacing spacing = GridSpacing::LOG;
};

/// Expands a grid spec to explicit points.  The first and last points are
/// exactly min and max; LOG spacing requires min > 0.
std::vector<double> make_grid(const GridSpec& spec);

enum class OutputFormat { CSV, JSON };

/// Names + geometry of the four-layer stack, as written in a config file.
/// Layer order, from the isolated half-space inward: a | ferrofluid gap |
/// coating (thickness b1) | substrate half-space.
struct StackConfig {
  std::string a = "polystyrene";
  std::string solvent = "toluene";
  std::string particle = "magnetite";
  double phi = 0.05;
  double diameter_nm = 20.0;
  double ms_a_per_m = 6.7e4;
  std::string coating = "teflon";
  double b1_nm = 10.0;
  std::string substrate = "gold";
};

struct MaterialsQuery {
  std::vector<std::string> names;  ///< empty = all records plus "gap"
  GridSpec xi{0.01, 100.0, 60, GridSpacing::LOG};
};

struct SweepSpec {
  SweepAxis axis = SweepAxis::PHI;
  std::vector<SweepValue> values;  ///< empty = no sweep configured
};

struct RunConfig {
  std::string db_path;  ///< empty until resolved (flag/config/env/default)
  StackConfig stack;
  EngineConfig engine;  ///< includes temperature_k
  GridSpec ell{10.0, 1000.0, 60, GridSpacing::LOG};
  double refine_tol_nm = 0.01;
  OutputFormat format = OutputFormat::CSV;
  std::string out_path;  ///< empty = stdout
  MaterialsQuery materials;
  SweepSpec sweep;
};

/// Parses a JSON config document onto the defaults above.  Unknown keys are
/// rejected (typos should fail loudly, not silently fall back to defaults).
RunConfig parse_run_config(const std::string& json_text);

/// Database path precedence: --db flag, then config "db", then the
/// FERROCASIMIR_DB environment variable, then ./data/materials.json.
std::string resolve_db_path(const std::string& cli_db_flag,
                            const RunConfig& cfg);

/// Resolves the configured names against the database and assembles the
/// stack; enforces b1_nm > 0 and the ferrofluid invariants.
FourLayerStack build_stack(const StackConfig& cfg, const MaterialDatabase& db,
                           double temperature_k);

/// Normalized echo of the effective configuration, embedded in artifact
/// metadata so a result file records exactly what produced it.
nlohmann::ordered_json config_echo(const RunConfig& cfg);

SweepAxis parse_sweep_axis(const std::string& name);

}  // namespace ferrocasimir
