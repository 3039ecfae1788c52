#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ferrocasimir {

/// Free-carrier (metallic) dispersion along the imaginary frequency axis:
/// eps(i xi) = 1 + omega_p^2 / (xi (xi + gamma)). Diverges at xi = 0; the
/// static limit is handled by reflection-coefficient conventions, never by
/// evaluating this model there.
struct DrudeModel {
  double omega_p_ev = 0.0;  ///< plasma energy, > 0
  double gamma_ev = 0.0;    ///< relaxation energy, > 0
};

/// Bound-charge dispersion as a sum of damped-free oscillator terms:
/// eps(i xi) = 1 + sum_i C_i / (1 + (xi/omega_i)^2); static value 1 + sum C_i.
struct OscillatorModel {
  /// (strength C_i >= 0, resonance energy omega_i_ev > 0) pairs.
  std::vector<std::pair<double, double>> terms;
};

/// Tabulated eps(i xi): strictly increasing xi_ev >= 0, eps >= 1, at least
/// two samples. Interpolated log-linearly in (xi, eps-1) inside the range
/// and clamped to the end values outside it.
struct TableModel {
  std::vector<std::pair<double, double>> samples;  ///< (xi_ev, eps)
};

/// Non-dispersive dielectric.
struct ConstantModel {
  double eps = 1.0;  ///< >= 1
};

/// The identity medium, eps = 1 at every frequency.
struct VacuumModel {};

using PermittivityModel =
    std::variant<DrudeModel, OscillatorModel, TableModel, ConstantModel,
                 VacuumModel>;

/// A named permittivity model with a provenance note (data source /
/// construction method). Names are unique within a database.
struct MaterialRecord {
  std::string name;
  PermittivityModel model;
  std::string provenance;
};

/// Out-parameters describing an evaluation, currently whether a TableModel
/// was clamped outside its sample range.
struct EvalDiagnostics {
  bool extrapolated = false;
};

/// Colloid of magnetic nanoparticles in a solvent. Supplies the gap
/// medium's permittivity (Rayleigh mixture at every xi) and its static
/// permeability.
struct FerrofluidSpec {
  MaterialRecord solvent;
  MaterialRecord particle;
  double phi = 0.0;            ///< particle volume fraction, 0 <= phi < 1
  double diameter_nm = 1.0;    ///< mean particle diameter, > 0
  double ms_a_per_m = 0.0;     ///< saturation magnetization, >= 0
  double temperature_k = 300.0;///< > 0
};

/// Evaluate eps(i xi) for any model variant. xi_ev >= 0; DrudeModel at
/// xi = 0 throws NumericError. Clamped table lookups set
/// diag->extrapolated when diag is non-null.
double eval_permittivity(const PermittivityModel& model, double xi_ev,
                         EvalDiagnostics* diag = nullptr);

/// Rayleigh (dilute-inclusion) effective permittivity
///   eps_mix = eps_s (1 + 2 chi phi) / (1 - chi phi),
///   chi = (eps_p - eps_s) / (eps_p + 2 eps_s).
/// Lies between the two constituent values for phi in [0, 1).
double mix_rayleigh(double eps_solvent, double eps_particle, double phi);

/// Static permeability of the colloid in SI units:
///   mu(0) = 1 + (2 pi^2 phi / 9) mu0 Ms^2 D^3 / (kB T).
/// Exactly linear in phi and cubic in D.
double static_permeability(double phi, double ms_a_per_m, double diameter_nm,
                           double temperature_k);

/// eps(i xi) of the colloid: mix_rayleigh of the two constituent models.
double ferrofluid_permittivity(const FerrofluidSpec& spec, double xi_ev,
                               EvalDiagnostics* diag = nullptr);

/// Validate a model against its type invariants; throws ConfigError with
/// `context` in the message on violation.
void validate_model(const PermittivityModel& model, const std::string& context);

/// Immutable collection of MaterialRecords with unique names.
class MaterialDatabase {
 public:
  /// Parse and validate the JSON database schema (top-level array of
  /// {name, model, provenance} records). Throws ConfigError on schema or
  /// invariant violations.
  static MaterialDatabase from_json_text(std::string_view text);

  /// Lookup by name; throws ConfigError for unknown names.
  const MaterialRecord& at(const std::string& name) const;

  bool contains(const std::string& name) const;
  const std::vector<MaterialRecord>& records() const { return records_; }

 private:
  std::vector<MaterialRecord> records_;
};

}  // namespace ferrocasimir
