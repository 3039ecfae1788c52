#include "ferrocasimir/materials.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include <json.hpp>

#include "ferrocasimir/errors.hpp"
#include "ferrocasimir/units.hpp"

namespace ferrocasimir {
namespace {

using nlohmann::json;

double eval_table(const TableModel& t, double xi_ev, EvalDiagnostics* diag) {
  const auto& s = t.samples;
  if (xi_ev <= s.front().first) {
    if (diag && xi_ev < s.front().first) diag->extrapolated = true;
    return s.front().second;
  }
  if (xi_ev >= s.back().first) {
    if (diag && xi_ev > s.back().first) diag->extrapolated = true;
    return s.back().second;
  }
  auto hi = std::upper_bound(
      s.begin(), s.end(), xi_ev,
      [](double v, const auto& p) { return v < p.first; });
  auto lo = hi - 1;
  const double x0 = lo->first, x1 = hi->first;
  const double e0 = lo->second - 1.0, e1 = hi->second - 1.0;
  // Log-linear in (xi, eps-1) when well-defined; plain linear for a
  // segment touching xi = 0 or eps = 1 where a logarithm degenerates.
  if (x0 > 0.0 && e0 > 0.0 && e1 > 0.0) {
    const double w = (std::log(xi_ev) - std::log(x0)) / (std::log(x1) - std::log(x0));
    return 1.0 + std::exp((1.0 - w) * std::log(e0) + w * std::log(e1));
  }
  const double w = (xi_ev - x0) / (x1 - x0);
  return 1.0 + (1.0 - w) * e0 + w * e1;
}

[[noreturn]] void fail_record(const std::string& context, const std::string& msg) {
  throw ConfigError("material '" + context + "': " + msg);
}

PermittivityModel parse_model(const json& j, const std::string& name) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    fail_record(name, "model must be an object with a string 'type'");
  const std::string type = j["type"].get<std::string>();
  try {
    if (type == "drude")
      return DrudeModel{j.at("omega_p_ev").get<double>(),
                        j.at("gamma_ev").get<double>()};
    if (type == "oscillators") {
      OscillatorModel m;
      for (const auto& term : j.at("terms"))
        m.terms.emplace_back(term.at("c").get<double>(),
                             term.at("omega_ev").get<double>());
      return m;
    }
    if (type == "table") {
      TableModel m;
      for (const auto& row : j.at("samples")) {
        if (!row.is_array() || row.size() != 2)
          fail_record(name, "table samples must be [xi_ev, eps] pairs");
        m.samples.emplace_back(row[0].get<double>(), row[1].get<double>());
      }
      return m;
    }
    if (type == "constant") return ConstantModel{j.at("eps").get<double>()};
    if (type == "vacuum") return VacuumModel{};
  } catch (const json::exception& e) {
    fail_record(name, std::string("malformed model parameters: ") + e.what());
  }
  fail_record(name, "unknown model type '" + type + "'");
}

}  // namespace

double eval_permittivity(const PermittivityModel& model, double xi_ev,
                         EvalDiagnostics* diag) {
  if (xi_ev < 0.0) throw NumericError("eval_permittivity: xi must be >= 0");
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DrudeModel>) {
          if (xi_ev == 0.0)
            throw NumericError(
                "static metal permittivity is infinite; use zero-frequency "
                "reflection conventions");
          return 1.0 + m.omega_p_ev * m.omega_p_ev /
                           (xi_ev * (xi_ev + m.gamma_ev));
        } else if constexpr (std::is_same_v<T, OscillatorModel>) {
          double eps = 1.0;
          for (const auto& [c, omega] : m.terms) {
            const double r = xi_ev / omega;
            eps += c / (1.0 + r * r);
          }
          return eps;
        } else if constexpr (std::is_same_v<T, TableModel>) {
          return eval_table(m, xi_ev, diag);
        } else if constexpr (std::is_same_v<T, ConstantModel>) {
          return m.eps;
        } else {
          return 1.0;  // VacuumModel
        }
      },
      model);
}

double mix_rayleigh(double eps_solvent, double eps_particle, double phi) {
  const double chi =
      (eps_particle - eps_solvent) / (eps_particle + 2.0 * eps_solvent);
  assert(std::fabs(chi * phi) < 1.0);
  return eps_solvent * (1.0 + 2.0 * chi * phi) / (1.0 - chi * phi);
}

double static_permeability(double phi, double ms_a_per_m, double diameter_nm,
                           double temperature_k) {
  const double d_m = diameter_nm * 1e-9;
  const double chi = (2.0 * units::pi * units::pi / 9.0) * phi *
                     units::mu0_si * ms_a_per_m * ms_a_per_m * d_m * d_m *
                     d_m / (units::k_boltzmann_si * temperature_k);
  return 1.0 + chi;
}

double ferrofluid_permittivity(const FerrofluidSpec& spec, double xi_ev,
                               EvalDiagnostics* diag) {
  const double eps_s = eval_permittivity(spec.solvent.model, xi_ev, diag);
  const double eps_p = eval_permittivity(spec.particle.model, xi_ev, diag);
  return mix_rayleigh(eps_s, eps_p, spec.phi);
}

void validate_model(const PermittivityModel& model, const std::string& context) {
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DrudeModel>) {
          if (!(m.omega_p_ev > 0.0)) fail_record(context, "drude omega_p_ev must be > 0");
          if (!(m.gamma_ev > 0.0)) fail_record(context, "drude gamma_ev must be > 0");
        } else if constexpr (std::is_same_v<T, OscillatorModel>) {
          for (const auto& [c, omega] : m.terms) {
            if (!(c >= 0.0)) fail_record(context, "oscillator strength must be >= 0");
            if (!(omega > 0.0)) fail_record(context, "oscillator omega_ev must be > 0");
          }
        } else if constexpr (std::is_same_v<T, TableModel>) {
          if (m.samples.size() < 2) fail_record(context, "table needs at least 2 samples");
          double prev = -1.0;
          for (const auto& [xi, eps] : m.samples) {
            if (!(xi >= 0.0)) fail_record(context, "table xi_ev must be >= 0");
            if (!(xi > prev)) fail_record(context, "table xi_ev must be strictly increasing");
            if (!(eps >= 1.0)) fail_record(context, "table eps must be >= 1");
            prev = xi;
          }
        } else if constexpr (std::is_same_v<T, ConstantModel>) {
          if (!(m.eps >= 1.0)) fail_record(context, "constant eps must be >= 1");
        }
      },
      model);
}

MaterialDatabase MaterialDatabase::from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("material database: ") + e.what());
  }
  if (!doc.is_array())
    throw ConfigError("material database: top level must be an array of records");

  MaterialDatabase db;
  for (const auto& rec : doc) {
    if (!rec.is_object() || !rec.contains("name") || !rec["name"].is_string())
      throw ConfigError("material database: every record needs a string 'name'");
    MaterialRecord out;
    out.name = rec["name"].get<std::string>();
    if (db.contains(out.name))
      fail_record(out.name, "duplicate name in database");
    if (!rec.contains("model")) fail_record(out.name, "missing 'model'");
    out.model = parse_model(rec["model"], out.name);
    validate_model(out.model, out.name);
    if (!rec.contains("provenance") || !rec["provenance"].is_string() ||
        rec["provenance"].get<std::string>().empty())
      fail_record(out.name, "provenance must be a non-empty string");
    out.provenance = rec["provenance"].get<std::string>();
    db.records_.push_back(std::move(out));
  }
  return db;
}

const MaterialRecord& MaterialDatabase::at(const std::string& name) const {
  for (const auto& r : records_)
    if (r.name == name) return r;
  throw ConfigError("unknown material '" + name + "'");
}

bool MaterialDatabase::contains(const std::string& name) const {
  for (const auto& r : records_)
    if (r.name == name) return true;
  return false;
}

}  // namespace ferrocasimir
