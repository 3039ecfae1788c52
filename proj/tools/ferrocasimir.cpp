#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ferrocasimir/analysis.hpp"
#include "ferrocasimir/config.hpp"
#include "ferrocasimir/engine.hpp"
#include "ferrocasimir/errors.hpp"
#include "ferrocasimir/io.hpp"
#include "ferrocasimir/materials.hpp"
#include "ferrocasimir/validate.hpp"

namespace {

using ferrocasimir::ConfigError;
using ferrocasimir::MaterialDatabase;
using ferrocasimir::NumericError;
using ferrocasimir::OutputFormat;
using ferrocasimir::RunConfig;
namespace io = ferrocasimir::io;

struct Session {
  RunConfig cfg;
  MaterialDatabase db;
  nlohmann::ordered_json meta;
};

Session open_session(const std::string& config_path, const std::string& db_flag,
                     const std::string& format_flag,
                     const std::string& out_flag) {
  Session s;
  if (!config_path.empty())
    s.cfg = ferrocasimir::parse_run_config(io::read_file(config_path));
  if (!format_flag.empty()) {
    if (format_flag == "csv")
      s.cfg.format = OutputFormat::CSV;
    else if (format_flag == "json")
      s.cfg.format = OutputFormat::JSON;
    else
      throw ConfigError("--format must be csv or json");
  }
  if (!out_flag.empty()) s.cfg.out_path = out_flag;
  s.cfg.db_path = ferrocasimir::resolve_db_path(db_flag, s.cfg);
  const std::string db_text = io::read_file(s.cfg.db_path);
  s.db = MaterialDatabase::from_json_text(db_text);
  s.meta["engine_version"] = std::string(io::kEngineVersion);
  s.meta["db_hash_fnv1a64"] = io::fnv1a64_hex(db_text);
  s.meta["config"] = ferrocasimir::config_echo(s.cfg);
  return s;
}

void deliver(const Session& s, const std::string& content) {
  if (s.cfg.out_path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
  } else {
    io::write_file_atomic(s.cfg.out_path, content);
  }
}

std::string json_document(const Session& s, const char* key,
                          nlohmann::ordered_json payload) {
  nlohmann::ordered_json doc;
  doc["meta"] = s.meta;
  doc[key] = std::move(payload);
  return doc.dump(2) + "\n";
}

int cmd_curve(const Session& s, bool with_diagnostics) {
  const auto stack = ferrocasimir::build_stack(s.cfg.stack, s.db,
                                               s.cfg.engine.temperature_k);
  const auto ells = ferrocasimir::make_grid(s.cfg.ell);
  const auto curve = ferrocasimir::pressure_curve(ells, stack, s.cfg.engine);
  if (s.cfg.format == OutputFormat::CSV)
    deliver(s, io::curve_csv(curve, with_diagnostics));
  else
    deliver(s, json_document(s, "rows",
                             io::curve_rows_json(curve, with_diagnostics)));
  return 0;
}

int cmd_equilibria(const Session& s) {
  const auto stack = ferrocasimir::build_stack(s.cfg.stack, s.db,
                                               s.cfg.engine.temperature_k);
  const auto ells = ferrocasimir::make_grid(s.cfg.ell);
  const auto curve = ferrocasimir::pressure_curve(ells, stack, s.cfg.engine);
  const auto roots = ferrocasimir::find_equilibria(curve, stack, s.cfg.engine,
                                                   s.cfg.refine_tol_nm);
  if (s.cfg.format == OutputFormat::CSV)
    deliver(s, io::equilibria_csv(roots));
  else
    deliver(s, json_document(s, "equilibria", io::equilibria_rows_json(roots)));
  return 0;
}

int cmd_sweep(const Session& s) {
  if (s.cfg.sweep.values.empty())
    throw ConfigError("sweep: config file must provide a \"sweep\" section");
  const auto stack = ferrocasimir::build_stack(s.cfg.stack, s.db,
                                               s.cfg.engine.temperature_k);
  const auto ells = ferrocasimir::make_grid(s.cfg.ell);
  const auto entries =
      ferrocasimir::sweep(s.cfg.sweep.axis, s.cfg.sweep.values, stack, s.db,
                          ells, s.cfg.engine, s.cfg.refine_tol_nm);
  const char* axis_name = io::to_string(s.cfg.sweep.axis);
  if (s.cfg.format == OutputFormat::CSV)
    deliver(s, io::sweep_csv(axis_name, entries, false));
  else
    deliver(s, json_document(
                   s, "entries",
                   io::sweep_entries_json(axis_name, entries, false)));
  return 0;
}

int cmd_materials(const Session& s) {
  std::vector<std::string> names = s.cfg.materials.names;
  if (names.empty()) {
    for (const auto& rec : s.db.records()) names.push_back(rec.name);
    names.push_back("gap");
  }
  const auto xi_grid = ferrocasimir::make_grid(s.cfg.materials.xi);
  std::vector<std::vector<double>> values;
  values.reserve(names.size());
  for (const std::string& name : names) {
    std::vector<double> column;
    column.reserve(xi_grid.size());
    if (name == "gap") {
      const auto stack = ferrocasimir::build_stack(s.cfg.stack, s.db,
                                                   s.cfg.engine.temperature_k);
      for (double xi : xi_grid)
        column.push_back(ferrocasimir::ferrofluid_permittivity(stack.gap, xi));
    } else {
      const auto& rec = s.db.at(name);
      for (double xi : xi_grid)
        column.push_back(ferrocasimir::eval_permittivity(rec.model, xi));
    }
    values.push_back(std::move(column));
  }
  if (s.cfg.format == OutputFormat::CSV)
    deliver(s, io::materials_csv(xi_grid, names, values));
  else
    deliver(s, json_document(s, "rows",
                             io::materials_rows_json(xi_grid, names, values)));
  return 0;
}

int cmd_validate(const Session& s) {
  const auto checks = ferrocasimir::run_validation_suite(s.db);
  const bool ok = ferrocasimir::all_passed(checks);
  if (s.cfg.format == OutputFormat::JSON) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      rows.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"measured", c.measured},
                      {"tolerance", c.tolerance},
                      {"detail", c.detail}});
    }
    nlohmann::ordered_json doc;
    doc["meta"] = s.meta;
    doc["all_passed"] = ok;
    doc["checks"] = std::move(rows);
    deliver(s, doc.dump(2) + "\n");
  } else {
    std::string report;
    for (const auto& c : checks) {
      report += c.pass ? "[PASS] " : "[FAIL] ";
      report += c.name;
      report += " measured=";
      report += io::format_double(c.measured);
      report += " tolerance=";
      report += io::format_double(c.tolerance);
      report += " (";
      report += c.detail;
      report += ")\n";
    }
    report += ok ? "all checks passed\n" : "VALIDATION FAILED\n";
    deliver(s, report);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Casimir-Lifshitz pressure between a dielectric half-space and a "
      "coated metal across a magnetic-nanoparticle fluid gap"};
  app.require_subcommand(1);

  std::string config_path, db_flag, format_flag, out_flag;
  app.add_option("--config", config_path, "JSON run-configuration file");
  app.add_option("--db", db_flag, "material database path");
  app.add_option("--format", format_flag, "output format: csv or json");
  app.add_option("--out", out_flag, "output file (default: stdout)");

  CLI::App* sub_materials =
      app.add_subcommand("materials", "dielectric spectra on the xi grid");
  CLI::App* sub_curve =
      app.add_subcommand("curve", "pressure vs separation");
  CLI::App* sub_breakdown = app.add_subcommand(
      "breakdown", "pressure curve with solver diagnostics columns");
  CLI::App* sub_equilibria = app.add_subcommand(
      "equilibria", "zero crossings with stability classification");
  CLI::App* sub_sweep =
      app.add_subcommand("sweep", "curves across a parameter axis");
  CLI::App* sub_validate = app.add_subcommand(
      "validate", "self-check against closed-form asymptotics");
  for (CLI::App* sub : {sub_materials, sub_curve, sub_breakdown,
                        sub_equilibria, sub_sweep, sub_validate})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const Session s = open_session(config_path, db_flag, format_flag, out_flag);
    if (sub_materials->parsed()) return cmd_materials(s);
    if (sub_curve->parsed()) return cmd_curve(s, false);
    if (sub_breakdown->parsed()) return cmd_curve(s, true);
    if (sub_equilibria->parsed()) return cmd_equilibria(s);
    if (sub_sweep->parsed()) return cmd_sweep(s);
    if (sub_validate->parsed()) return cmd_validate(s);
    std::fprintf(stderr, "error: no command selected\n");
    return 2;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const NumericError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
}
